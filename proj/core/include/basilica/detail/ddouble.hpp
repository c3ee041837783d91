#ifndef BASILICA_DETAIL_DDOUBLE_HPP_
#define BASILICA_DETAIL_DDOUBLE_HPP_

#include <cmath>

namespace basilica::detail {

/// Unevaluated double-double sum (Dekker/Bailey style), ~31 significant
/// digits. Only what the deep preimage trees need: +, -, *, /, sqrt, abs.
struct ddouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr ddouble() = default;
  constexpr ddouble(double h) : hi(h) {}
  constexpr ddouble(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd {

inline ddouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline ddouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline ddouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd

inline ddouble operator+(ddouble a, ddouble b) {
  ddouble s = dd::two_sum(a.hi, b.hi);
  ddouble t = dd::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = dd::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return dd::quick_two_sum(s.hi, s.lo);
}

inline ddouble operator-(ddouble a) { return {-a.hi, -a.lo}; }
inline ddouble operator-(ddouble a, ddouble b) { return a + (-b); }

inline ddouble operator*(ddouble a, ddouble b) {
  ddouble p = dd::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd::quick_two_sum(p.hi, p.lo);
}

inline ddouble operator/(ddouble a, ddouble b) {
  const double q1 = a.hi / b.hi;
  ddouble r = a - b * ddouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * ddouble(q2);
  const double q3 = r.hi / b.hi;
  ddouble q = dd::quick_two_sum(q1, q2);
  return q + ddouble(q3);
}

inline bool operator<(ddouble a, ddouble b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(ddouble a, ddouble b) { return b < a; }
inline bool operator>=(ddouble a, ddouble b) { return !(a < b); }
inline bool operator<=(ddouble a, ddouble b) { return !(b < a); }

inline ddouble abs(ddouble a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline ddouble sqrt(ddouble a) {
  if (a.hi == 0.0 && a.lo == 0.0) return {};
  // One dd Newton step on the double estimate: y -> (y + a/y) / 2.
  const ddouble y(std::sqrt(a.hi));
  ddouble r = (y + a / y);
  r.hi *= 0.5;
  r.lo *= 0.5;
  return r;
}

}  // namespace basilica::detail

#endif  // BASILICA_DETAIL_DDOUBLE_HPP_
