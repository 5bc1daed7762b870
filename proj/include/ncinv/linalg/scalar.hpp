#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ncinv {

// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// "p/q", or "p" when q = 1.
std::string to_string(const Scalar& q);

// Accepts "p", "-p", "p/q"; throws InputError otherwise (including q = 0).
Scalar parse_scalar(std::string_view text);

// Combined bit length of numerator and denominator.
std::size_t bit_length(const Scalar& q);

bool is_zero(const Vector& v);

Vector zero_vector(std::size_t n);

}  // namespace ncinv
