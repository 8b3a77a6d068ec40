#include "osp/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace osp {

Exact::Exact(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Exact: zero denominator");
  q_.canonicalize();
}

Exact Exact::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Exact::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Exact::parse: malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Exact::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return Exact(std::move(q));
}

long Exact::to_long() const {
  if (!is_integer()) throw std::domain_error("Exact::to_long: not an integer: " + str());
  if (!q_.get_num().fits_slong_p()) throw std::overflow_error("Exact::to_long: out of range");
  return q_.get_num().get_si();
}

std::string Exact::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Exact::str_short() const {
  if (is_integer()) return q_.get_num().get_str();
  return str();
}

Exact& Exact::operator/=(const Exact& o) {
  if (o.is_zero()) throw std::domain_error("Exact: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.str_short(); }

Exact abs(const Exact& x) { return x.sign() < 0 ? -x : x; }

}  // namespace osp
