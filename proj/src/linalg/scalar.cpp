#include "ncinv/linalg/scalar.hpp"

#include "ncinv/error.hpp"

#include <algorithm>
#include <cctype>

namespace ncinv {

std::string to_string(const Scalar& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Scalar q(std::string(text), 10);
  q.canonicalize();
  return q;
}

std::size_t bit_length(const Scalar& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

}  // namespace ncinv
