#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rbh {

// Exact field of coefficients. mpq_class keeps values in lowest terms with
// positive denominator, which is the invariant we need everywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with optional leading '-'. No floats, ever.
inline std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  bool digits = false, slash = false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '/') {
      if (slash || !digits || j + 1 == s.size()) return std::nullopt;
      slash = true;
      digits = false;
      if (s[j + 1] == '-') return std::nullopt;
    } else if (s[j] >= '0' && s[j] <= '9') {
      digits = true;
    } else {
      return std::nullopt;
    }
  }
  if (!digits) return std::nullopt;
  Rational r(s);
  if (slash && r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace rbh
