#include "osp/report_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace osp {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

ordered index_json(const MultiIndex& k) {
  ordered a = ordered::array();
  for (int i = 0; i < k.dim(); ++i) a.push_back(k[i]);
  return a;
}

std::string dump(const ordered& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string poly_to_json(const Poly& p, int indent) {
  ordered j;
  j["dim"] = p.dim();
  j["basis"] = basis_name(p.basis());
  ordered terms = ordered::array();
  for (const auto& [k, c] : p.terms()) {
    ordered t;
    t["index"] = index_json(k);
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return dump(j, indent);
}

Poly poly_from_json(const std::string& text) {
  json j = json::parse(text);
  Poly p(j.at("dim").get<int>(), basis_from_name(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    std::vector<int> idx = t.at("index").get<std::vector<int>>();
    p.add_term(MultiIndex(std::move(idx)), Exact::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

std::string weight_to_json(const WeightSpec& w, int indent) {
  ordered j;
  j["family"] = weight_family_name(w);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Dirichlet>) {
          ordered a = ordered::array();
          for (const auto& x : v.alpha) a.push_back(x.str());
          j["alpha"] = a;
        } else if constexpr (std::is_same_v<T, DirichletMultinomial>) {
          ordered a = ordered::array();
          for (const auto& x : v.alpha) a.push_back(x.str());
          j["alpha"] = a;
          j["total"] = v.total;
        } else if constexpr (std::is_same_v<T, GammaProduct>) {
          ordered a = ordered::array();
          for (const auto& x : v.alpha) a.push_back(x.str());
          j["alpha"] = a;
          j["scale"] = v.scale.str();
        } else if constexpr (std::is_same_v<T, NegBinProduct>) {
          ordered a = ordered::array();
          for (const auto& x : v.alpha) a.push_back(x.str());
          j["alpha"] = a;
          j["p"] = v.p.str();
        } else if constexpr (std::is_same_v<T, Hypergeometric>) {
          j["eps"] = v.eps;
          j["total"] = v.total;
        } else {
          j["theta"] = v.theta.str();
          j["d"] = v.d;
        }
      },
      w);
  return dump(j, indent);
}

std::string gram_report_to_json(const GramReport& rep, int indent) {
  ordered j;
  j["family"] = rep.family;
  j["weight"] = rep.weight;
  ordered idx = ordered::array();
  for (const auto& n : rep.indices) idx.push_back(index_json(n));
  j["indices"] = idx;
  ordered mat = ordered::array();
  for (const auto& row : rep.matrix) {
    ordered r = ordered::array();
    for (const auto& v : row) r.push_back(v.str());
    mat.push_back(r);
  }
  j["matrix"] = mat;
  j["orthogonal"] = rep.orthogonal();
  j["compared_printed"] = rep.compared_printed;
  ordered disc = ordered::array();
  for (const auto& d : rep.diag_mismatches) {
    ordered e;
    e["index"] = index_json(d.n);
    e["oracle"] = d.oracle.str();
    e["printed"] = d.printed.str();
    disc.push_back(e);
  }
  for (const auto& o : rep.offdiag_nonzero) {
    ordered e;
    e["index"] = index_json(o.n);
    e["other"] = index_json(o.m);
    e["value"] = o.value.str();
    disc.push_back(e);
  }
  j["discrepancies"] = disc;
  return dump(j, indent);
}

std::string gram_report_to_csv(const GramReport& rep) {
  std::ostringstream os;
  os << "i,j,index_i,index_j,value\n";
  for (size_t i = 0; i < rep.matrix.size(); ++i)
    for (size_t k = 0; k < rep.matrix[i].size(); ++k)
      os << i << "," << k << ",\"" << rep.indices[i].str() << "\",\"" << rep.indices[k].str()
         << "\"," << rep.matrix[i][k].str() << "\n";
  return os.str();
}

std::string connection_table_to_json(const ConnectionTable& tab, int indent) {
  ordered j;
  ordered a = ordered::array();
  for (const auto& x : tab.alpha) a.push_back(x.str());
  j["alpha"] = a;
  j["n"] = index_json(tab.n);
  ordered methods = ordered::array();
  for (auto m : tab.methods) methods.push_back(cstar_method_name(m));
  j["methods"] = methods;
  ordered rows = ordered::array();
  for (size_t i = 0; i < tab.ms.size(); ++i) {
    ordered row;
    row["m"] = tab.ms[i].str();
    for (size_t k = 0; k < tab.methods.size(); ++k)
      row[cstar_method_name(tab.methods[k])] = tab.values[i][k].str();
    rows.push_back(row);
  }
  j["coefficients"] = rows;
  ordered disc = ordered::array();
  for (const auto& d : tab.discrepancies) {
    ordered e;
    e["m"] = d.m.str();
    e["method"] = cstar_method_name(d.method);
    e["value"] = d.value.str();
    e["oracle"] = d.oracle.str();
    disc.push_back(e);
  }
  j["discrepancies"] = disc;
  return dump(j, indent);
}

std::string connection_table_to_csv(const ConnectionTable& tab) {
  std::ostringstream os;
  os << "m";
  for (auto m : tab.methods) os << "," << cstar_method_name(m);
  os << "\n";
  for (size_t i = 0; i < tab.ms.size(); ++i) {
    os << "\"" << tab.ms[i].str() << "\"";
    for (size_t k = 0; k < tab.methods.size(); ++k) os << "," << tab.values[i][k].str();
    os << "\n";
  }
  return os.str();
}

std::string fourier_to_json(const FourierExpansion& f, int indent) {
  ordered j;
  ordered rows = ordered::array();
  for (size_t i = 0; i < f.indices.size(); ++i) {
    ordered e;
    e["index"] = index_json(f.indices[i]);
    e["coefficient"] = f.coefficients[i].str();
    e["norm"] = f.norms[i].str();
    rows.push_back(e);
  }
  j["coefficients"] = rows;
  j["residual_zero"] = f.residual.is_zero();
  ordered res = ordered::array();
  for (const auto& [k, c] : f.residual.terms()) {
    ordered t;
    t["index"] = index_json(k);
    t["coeff"] = c.str();
    res.push_back(t);
  }
  j["residual_terms"] = res;
  return dump(j, indent);
}

std::string limit_rows_to_csv(const std::vector<LimitRow>& rows) {
  std::ostringstream os;
  os << "N,n,sup_error,constant_gap\n";
  os.precision(12);
  for (const auto& r : rows)
    os << r.N << "," << r.n << "," << r.sup_error << "," << r.constant_gap << "\n";
  return os.str();
}

std::string limit_rows_to_json(const std::vector<LimitRow>& rows, int indent) {
  ordered arr = ordered::array();
  for (const auto& r : rows) {
    ordered e;
    e["N"] = r.N;
    e["n"] = r.n;
    e["sup_error"] = r.sup_error;
    e["constant_gap"] = r.constant_gap;
    arr.push_back(e);
  }
  return dump(arr, indent);
}

std::vector<Exact> parse_exact_list(const std::string& text) {
  std::vector<Exact> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) throw std::invalid_argument("parse_exact_list: empty entry in '" + text + "'");
    out.push_back(Exact::parse(cur));
  }
  if (out.empty()) throw std::invalid_argument("parse_exact_list: no entries");
  return out;
}

MultiIndex parse_index(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size() || v < 0)
      throw std::invalid_argument("parse_index: bad entry '" + cur + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("parse_index: no entries");
  return MultiIndex(std::move(out));
}

}  // namespace osp
