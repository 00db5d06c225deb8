#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cdim/errors.hpp"

namespace cdim {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as they are built through arithmetic or canonicalize().
using Scalar = mpq_class;

// Accepts "p/q", integers, and decimal fractions like "-1.25".
Scalar parse_scalar(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string scalar_str(const Scalar& q);

// q^e for any integer e; raises zero_scale for 0^negative.
Scalar scalar_pow(const Scalar& q, long e);

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

// Throws if q is not a (small) integer.
long scalar_to_long(const Scalar& q);

} // namespace cdim
