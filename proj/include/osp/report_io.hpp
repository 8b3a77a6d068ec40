#ifndef OSP_REPORT_IO_HPP
#define OSP_REPORT_IO_HPP

#include <string>
#include <vector>

#include "osp/distributions.hpp"
#include "osp/hahn.hpp"
#include "osp/laguerre.hpp"
#include "osp/oracle.hpp"
#include "osp/poly.hpp"

namespace osp {

/// JSON wire formats. Rationals are always "num/den" strings; term and index
/// orderings are lexicographic, so equal inputs produce byte-identical
/// output.

std::string poly_to_json(const Poly& p, int indent = 2);
Poly poly_from_json(const std::string& text);

std::string weight_to_json(const WeightSpec& w, int indent = 2);

std::string gram_report_to_json(const GramReport& rep, int indent = 2);
std::string gram_report_to_csv(const GramReport& rep);

std::string connection_table_to_json(const ConnectionTable& tab, int indent = 2);
std::string connection_table_to_csv(const ConnectionTable& tab);

std::string fourier_to_json(const FourierExpansion& f, int indent = 2);

std::string limit_rows_to_csv(const std::vector<LimitRow>& rows);
std::string limit_rows_to_json(const std::vector<LimitRow>& rows, int indent = 2);

/// Comma-separated "p/q" rationals; integers allowed.
std::vector<Exact> parse_exact_list(const std::string& text);
/// Comma-separated non-negative integers.
MultiIndex parse_index(const std::string& text);

}  // namespace osp

#endif
