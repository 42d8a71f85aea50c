#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "epg/error.hpp"
#include "epg/io.hpp"

namespace epg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "141/4", or "116" when the denominator is 1.
inline std::string to_fraction_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

/// One necessary condition, evaluated exactly. The condition holds iff
/// lhs <= rhs; `violated` rules out the corresponding membership.
struct BoundVerdict {
  std::string name;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  Rational lhs;
  Rational rhs;
  bool violated = false;
};

inline Json to_json(const BoundVerdict& v) {
  return Json{{"name", v.name},
              {"m", v.m},
              {"n", v.n},
              {"k", v.k},
              {"lhs", to_fraction_string(v.lhs)},
              {"rhs", to_fraction_string(v.rhs)},
              {"violated", v.violated}};
}

namespace detail {

inline void require_bipartite_range(std::int64_t m, std::int64_t n, std::int64_t k) {
  if (m < 3 || m > n) throw Error(ErrorCode::RangeError, "need 3 <= m <= n");
  if (k < 0) throw Error(ErrorCode::RangeError, "need k >= 0");
}

inline BoundVerdict make_verdict(std::string name, std::int64_t m, std::int64_t n, std::int64_t k, Rational lhs,
                                 Rational rhs) {
  BoundVerdict v{std::move(name), m, n, k, std::move(lhs), std::move(rhs), false};
  v.violated = v.lhs > v.rhs;
  return v;
}

inline std::int64_t half_floor(std::int64_t k) { return (k + 1) / 2; }  // floor((k+1)/2)
inline std::int64_t half_ceil(std::int64_t k) { return (k + 2) / 2; }   // ceil((k+1)/2)

}  // namespace detail

/// Every B_k representation of K_{m,n} satisfies (k+1)(m+n) >= mn + sqrt(2k(m+n)).
/// With d = (k+1)(m+n) - mn the root is removed by squaring: lhs = 2k(m+n),
/// rhs = d*|d|, so a negative d is always a violation.
inline BoundVerdict lbl1(std::int64_t m, std::int64_t n, std::int64_t k) {
  detail::require_bipartite_range(m, n, k);
  const Integer d = Integer(k + 1) * (m + n) - Integer(m) * n;
  const Integer radicand = Integer(2) * k * (m + n);
  const Integer signed_square = d * (d < 0 ? Integer(-d) : d);
  return detail::make_verdict("lbl1", m, n, k, Rational(radicand), Rational(signed_square));
}

/// n(2m - k - 2) <= 2c + 2(k+1)m, with c the crossings among the m-side paths.
inline BoundVerdict lbl_crossings(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t c) {
  detail::require_bipartite_range(m, n, k);
  if (c < 0) throw Error(ErrorCode::RangeError, "need c >= 0");
  const Rational lhs = Rational(n) * (2 * m - k - 2);
  const Rational rhs = Rational(2 * c) + Rational(2) * (k + 1) * m;
  return detail::make_verdict("lbl", m, n, k, lhs, rhs);
}

/// n(m - ceil((k+1)/2)) <= a + 2c + p over the m-side paths.
inline BoundVerdict acp_lower(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t a, std::int64_t c,
                              std::int64_t p) {
  detail::require_bipartite_range(m, n, k);
  if (a < 0 || c < 0 || p < 0) throw Error(ErrorCode::RangeError, "need a, c, p >= 0");
  const Rational lhs = Rational(n) * (m - detail::half_ceil(k));
  const Rational rhs = Rational(a + 2 * c + p);
  return detail::make_verdict("acp", m, n, k, lhs, rhs);
}

/// Monotonic bound: n(2m - k - 2) <= k(m-1)m + m^2/2 + 2(k+1)m.
inline BoundVerdict mlbl(std::int64_t m, std::int64_t n, std::int64_t k) {
  detail::require_bipartite_range(m, n, k);
  const Rational lhs = Rational(n) * (2 * m - k - 2);
  const Rational rhs = Rational(k * (m - 1) * m) + Rational(m * m, 2) + Rational(2 * (k + 1) * m);
  return detail::make_verdict("mlbl", m, n, k, lhs, rhs);
}

/// Monotonic bound from alignments/crossings/pseudocrossings:
/// n(m - ceil) <= C(m,2)(2 floor ceil + k) + m^2/4 (1 + (ceil - floor)^2).
inline BoundVerdict mlbl2(std::int64_t m, std::int64_t n, std::int64_t k) {
  detail::require_bipartite_range(m, n, k);
  const std::int64_t lo = detail::half_floor(k);
  const std::int64_t hi = detail::half_ceil(k);
  const Rational lhs = Rational(n) * (m - hi);
  const Rational pairs = Rational(m * (m - 1), 2);
  const Rational rhs = pairs * (2 * lo * hi + k) + Rational(m * m, 4) * (1 + (hi - lo) * (hi - lo));
  return detail::make_verdict("mlbl2", m, n, k, lhs, rhs);
}

/// 2m^3 - m^2/2 - m + 1; every n at or above it rules out K_{m,n} in B_{2m-3}^m.
inline Rational threshold_b2m3(std::int64_t m) {
  if (m < 3) throw Error(ErrorCode::RangeError, "need m >= 3");
  return Rational(2 * m * m * m) - Rational(m * m, 2) - m + 1;
}

/// n for which K_{m,n} is in B_{m-1} but not in B_{m-2}. Defined for even
/// m >= 4 and odd m >= 7; m = 5 is open.
inline std::int64_t heldt_n(std::int64_t m) {
  if (m < 4) throw Error(ErrorCode::UnsupportedM, "need m >= 4");
  if (m == 5) throw Error(ErrorCode::UnsupportedM, "m = 5 is not covered (the statement is open there)");
  Rational n;
  if (m % 2 == 0) {
    n = Rational(m * m * m, 4) - Rational(m * m, 2) - m + 4;
  } else {
    n = Rational(m * m * m, 4) - m * m + Rational(3 * m, 4);
  }
  if (boost::multiprecision::denominator(n) != 1) throw Error(ErrorCode::UnsupportedM, "non-integral n");
  return boost::multiprecision::numerator(n).convert_to<std::int64_t>();
}

enum class Membership { Yes, No, Unknown };

inline const char* to_string(Membership s) {
  switch (s) {
    case Membership::Yes: return "Yes";
    case Membership::No: return "No";
    case Membership::Unknown: return "Unknown";
  }
  return "?";
}

struct KnownStatus {
  Membership in_class = Membership::Unknown;
  std::string reason;
};

inline Json to_json(const KnownStatus& s) { return Json{{"in_class", to_string(s.in_class)}, {"reason", s.reason}}; }

/// Catalog answer for "is K_{m,n} in B_k (or B_k^m when monotonic)?".
/// Yes only through a stated construction, No only through a stated result
/// or a violated inequality; everything else is Unknown.
inline KnownStatus verdict(std::int64_t m, std::int64_t n, std::int64_t k, bool monotonic) {
  if (m < 0 || m > n || k < 0) throw Error(ErrorCode::RangeError, "need 0 <= m <= n and k >= 0");
  if (m <= 1) return {Membership::Yes, "m <= 1: edgeless graph or star, B_0 representation"};
  if (m == 2) {
    const std::int64_t b = n <= 1 ? 0 : (n <= 4 ? 1 : 2);
    const std::string why = "K_{2,n} table: b(K_{2," + std::to_string(n) + "}) = " + std::to_string(b) +
                            " and the monotonic bend number agrees";
    return {k >= b ? Membership::Yes : Membership::No, why};
  }
  if (k >= 2 * m - 2) return {Membership::Yes, "staircase construction: K_{m,n} in B_{2m-2}^m"};

  auto describe = [](const BoundVerdict& v) {
    return v.name + " violated: " + to_fraction_string(v.lhs) + " > " + to_fraction_string(v.rhs);
  };
  if (const auto v = lbl1(m, n, k); v.violated) return {Membership::No, describe(v)};
  if (monotonic) {
    if (const auto v = mlbl(m, n, k); v.violated) return {Membership::No, describe(v)};
    if (const auto v = mlbl2(m, n, k); v.violated) return {Membership::No, describe(v)};
  }
  return {Membership::Unknown, "no catalog rule or inequality applies"};
}

}  // namespace epg
