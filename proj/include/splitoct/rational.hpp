#pragma once

#include <gmpxx.h>

#include <string>

namespace splitoct {

/// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace splitoct
