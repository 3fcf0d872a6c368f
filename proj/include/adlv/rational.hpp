#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "adlv/errors.hpp"

namespace adlv {

// Exact rational arithmetic everywhere; no floating point in the library.
using Rat = boost::rational<long long>;

inline long long floor_rat(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long ceil_rat(const Rat& r) { return -floor_rat(-r); }

// Parses "p/q" or "p".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::logic_error&) {
    throw Error("cannot parse rational '" + s + "'");
  }
}

inline std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::vector<Rat> to_rat(const std::vector<long long>& v) {
  return std::vector<Rat>(v.begin(), v.end());
}

}  // namespace adlv
