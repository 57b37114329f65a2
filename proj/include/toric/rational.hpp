// Exact arithmetic base types and small helpers shared by every module.
// Internal convention: coordinates, offsets and lattice steps are stored in
// units of 2*pi as exact rationals; multiply by TWO_PI only when handing
// floats to the outside (cloud files, CSV, hull code).

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using IVec = std::vector<Int>;
using RVec = std::vector<Rat>;

inline constexpr double TWO_PI = 2.0 * std::numbers::pi_v<double>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// 2pi-units rational -> absolute-units double.
inline double to_absolute(const Rat& r) { return TWO_PI * to_double(r); }

inline std::vector<double> to_absolute(const RVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_absolute(v[i]);
  return out;
}

inline Int rat_num(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

// floor/ceil to Int; mpz_int division truncates toward zero, so adjust.
inline Int rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);  // d > 0, gcd(n,d) = 1
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

inline Int rat_round_nearest(const Rat& r) {
  // round half up, only hit by snap tolerances that never sit on a half
  return rat_floor(r + Rat(1, 2));
}

inline bool is_integral(const Rat& r) { return rat_den(r) == 1; }

// "p/q" or "p" with optional sign; rejects anything else (floats included).
inline Rat parse_rational(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("not a rational literal: '" + s + "'");
  };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  auto check_int = [&](std::string t) {
    if (t.empty()) throw bad();
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    if (t[0] == '+') t.erase(0, 1);  // the GMP reader rejects a leading plus
    return t;
  };
  if (slash == std::string::npos) return Rat(Int(check_int(s)));
  std::string num = check_int(s.substr(0, slash)), den = check_int(s.substr(slash + 1));
  Int d(den);
  if (d == 0) throw bad();
  return Rat(Int(num), d);
}

inline std::string format_rational(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline std::string format_rvec(const RVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(v[i]);
  }
  return s + ")";
}

inline std::string format_ivec(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

inline RVec to_rvec(const IVec& v) {
  RVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

// exact: doubles are binary rationals
inline Rat rat_from_double(double x) { return Rat(x); }

inline RVec rvec_from_doubles(const std::vector<double>& v) {
  RVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace toric
