#include "osp/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "osp/special.hpp"

namespace osp {

std::string basis_name(Basis b) { return b == Basis::monomial ? "monomial" : "falling-factorial"; }

Basis basis_from_name(const std::string& s) {
  if (s == "monomial") return Basis::monomial;
  if (s == "falling-factorial" || s == "falling") return Basis::falling;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

Poly::Poly(int dim, Basis basis) : dim_(dim), basis_(basis) {
  if (dim < 1) throw std::invalid_argument("Poly: dim must be >= 1");
}

Poly Poly::constant(int dim, const Exact& c, Basis basis) {
  Poly p(dim, basis);
  p.add_term(MultiIndex::zeros(dim), c);
  return p;
}

Poly Poly::variable(int dim, int i, Basis basis) {
  if (i < 0 || i >= dim) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(dim, basis);
  p.add_term(MultiIndex::zeros(dim).with(i, 1), Exact(1));
  return p;
}

Poly Poly::affine(int dim, const Exact& c0, const std::vector<Exact>& lin) {
  if (static_cast<int>(lin.size()) != dim) throw std::invalid_argument("Poly::affine: size mismatch");
  Poly p(dim, Basis::monomial);
  p.add_term(MultiIndex::zeros(dim), c0);
  for (int i = 0; i < dim; ++i) p.add_term(MultiIndex::zeros(dim).with(i, 1), lin[i]);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.total());
  return d;
}

Exact Poly::coeff(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Exact(0) : it->second;
}

void Poly::add_term(const MultiIndex& k, const Exact& c) {
  if (k.dim() != dim_) throw std::invalid_argument("Poly::add_term: index dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(dim_, basis_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

namespace {
void check_compatible(const Poly& a, const Poly& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Poly: dimension mismatch");
  if (a.basis() != b.basis()) throw std::invalid_argument("Poly: basis mismatch");
}
}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  if (a.basis() != Basis::monomial)
    throw std::domain_error("Poly: products require the monomial basis");
  Poly r(a.dim(), Basis::monomial);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<int> k(a.dim());
      for (int i = 0; i < a.dim(); ++i) k[i] = ka[i] + kb[i];
      r.add_term(MultiIndex(std::move(k)), ca * cb);
    }
  return r;
}

Poly operator*(const Exact& s, const Poly& p) {
  Poly r = p;
  r *= s;
  return r;
}

Poly& Poly::operator*=(const Exact& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.dim_ == b.dim_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
}

Exact Poly::eval(const std::vector<Exact>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("Poly::eval: point length mismatch");
  Exact acc(0);
  for (const auto& [k, c] : terms_) {
    Exact t = c;
    for (int i = 0; i < dim_; ++i) {
      if (k[i] == 0) continue;
      t *= basis_ == Basis::monomial ? pow_exact(point[i], k[i]) : falling(point[i], k[i]);
    }
    acc += t;
  }
  return acc;
}

double Poly::eval_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("Poly::eval_double: point length mismatch");
  double acc = 0;
  for (const auto& [k, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < k[i]; ++j)
        t *= basis_ == Basis::monomial ? point[i] : point[i] - j;
    acc += t;
  }
  return acc;
}

Poly Poly::to_basis(Basis target) const {
  if (target == basis_) return *this;
  Poly r(dim_, target);
  for (const auto& [k, c] : terms_) {
    // Expand this term one variable at a time.
    std::map<MultiIndex, Exact> acc{{MultiIndex::zeros(dim_), c}};
    for (int v = 0; v < dim_; ++v) {
      int e = k[v];
      if (e == 0) continue;
      std::map<MultiIndex, Exact> next;
      for (const auto& [kk, cc] : acc) {
        if (target == Basis::falling) {
          // x^e = sum_j S2(e,j) x_[j]
          for (int j = 0; j <= e; ++j) {
            Exact s = stirling2(e, j);
            if (s.is_zero()) continue;
            auto key = kk.with(v, kk[v] + j);
            auto [it, ins] = next.emplace(key, cc * s);
            if (!ins) it->second += cc * s;
          }
        } else {
          // x_[e] = sum_j s(e,j) x^j  (signed Stirling, first kind)
          for (int j = 0; j <= e; ++j) {
            Exact s = stirling1_signed(e, j);
            if (s.is_zero()) continue;
            auto key = kk.with(v, kk[v] + j);
            auto [it, ins] = next.emplace(key, cc * s);
            if (!ins) it->second += cc * s;
          }
        }
      }
      acc = std::move(next);
    }
    for (const auto& [kk, cc] : acc) r.add_term(kk, cc);
  }
  return r;
}

Poly Poly::derivative(int var, int order) const {
  if (basis_ != Basis::monomial)
    throw std::domain_error("Poly::derivative: requires monomial basis");
  if (var < 0 || var >= dim_) throw std::invalid_argument("Poly::derivative: bad variable");
  if (order < 0) throw std::invalid_argument("Poly::derivative: negative order");
  Poly cur = *this;
  for (int o = 0; o < order; ++o) {
    Poly next(dim_, Basis::monomial);
    for (const auto& [k, c] : cur.terms_) {
      if (k[var] == 0) continue;
      next.add_term(k.with(var, k[var] - 1), c * Exact(k[var]));
    }
    cur = std::move(next);
  }
  return cur;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (int i = 0; i < dim_; ++i) {
      if (k[i] == 0) continue;
      os << "*x" << i + 1;
      if (basis_ == Basis::falling) os << "_[" << k[i] << "]";
      else if (k[i] > 1) os << "^" << k[i];
    }
  }
  return os.str();
}

namespace {
void check_affine(const Poly& p, const char* what) {
  if (p.basis() != Basis::monomial || p.total_degree() > 1)
    throw std::invalid_argument(std::string("compose_ratio_clear: ") + what + " must be affine");
}
}  // namespace

Poly compose_ratio_clear(const Poly& q, int clear_power, const std::vector<Poly>& u, const Poly& v) {
  if (q.basis() != Basis::monomial)
    throw std::domain_error("compose_ratio_clear: q must be in the monomial basis");
  if (static_cast<int>(u.size()) != q.dim())
    throw std::invalid_argument("compose_ratio_clear: one numerator per variable of q");
  if (clear_power < q.total_degree())
    throw std::invalid_argument("compose_ratio_clear: clearing power below deg(q)");
  check_affine(v, "v");
  const int ambient = v.dim();
  for (const auto& ui : u) {
    check_affine(ui, "u");
    if (ui.dim() != ambient) throw std::invalid_argument("compose_ratio_clear: ambient mismatch");
  }
  // v^M * q(u/v) = sum_k c_k * prod u_i^{k_i} * v^{M-|k|}
  Poly out(ambient, Basis::monomial);
  for (const auto& [k, c] : q.terms()) {
    Poly t = Poly::constant(ambient, c);
    for (int i = 0; i < q.dim(); ++i) t = t * poly_pow(u[i], k[i]);
    t = t * poly_pow(v, clear_power - k.total());
    out += t;
  }
  return out;
}

Poly compose_ratio_clear(const Poly& q, int clear_power, const Poly& u, const Poly& v) {
  return compose_ratio_clear(q, clear_power, std::vector<Poly>{u}, v);
}

Poly compose_affine(const Poly& q, const std::vector<Poly>& u) {
  if (u.empty()) throw std::invalid_argument("compose_affine: no arguments");
  const int deg = std::max(q.total_degree(), 0);
  return compose_ratio_clear(q, deg, u, Poly::constant(u.front().dim(), Exact(1)));
}

Poly rising_factorial_poly(const Poly& base, int n) {
  if (n < 0) throw std::invalid_argument("rising_factorial_poly: negative order");
  Poly r = Poly::constant(base.dim(), Exact(1));
  for (int i = 0; i < n; ++i) r = r * (base + Poly::constant(base.dim(), Exact(i)));
  return r;
}

Poly poly_pow(const Poly& base, int n) {
  if (n < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Poly r = Poly::constant(base.dim(), Exact(1), base.basis());
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

}  // namespace osp
