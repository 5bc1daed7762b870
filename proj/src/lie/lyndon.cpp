#include "ncinv/lie/lyndon.hpp"

#include "ncinv/error.hpp"

#include <algorithm>

namespace ncinv {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
      return false;
  return true;
}

std::vector<Word> lyndon_words(std::size_t n, std::size_t d) {
  std::vector<Word> out;
  if (n == 0 || d == 0) return out;
  // Duval's successor: emits every Lyndon word of length <= d in lex order.
  Word w{0};
  while (!w.empty()) {
    if (w.size() == d) out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace {

int mobius(std::size_t k) {
  int sign = 1;
  for (std::size_t q = 2; q * q <= k; ++q) {
    if (k % q) continue;
    k /= q;
    if (k % q == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw CapExceeded("witt: n^d does not fit in 64 bits");
  return r;
}

}  // namespace

std::uint64_t witt(std::size_t n, std::size_t d) {
  if (d == 0) return 0;
  __int128 acc = 0;
  for (std::size_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    acc += static_cast<__int128>(mobius(e)) * checked_pow(n, d / e);
  }
  return static_cast<std::uint64_t>(acc / static_cast<__int128>(d));
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw InputError("standard factorization needs a word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), std::move(v)};
  }
  throw InputError("word has no proper Lyndon suffix");
}

TermMap bracketing(const Word& w) {
  if (w.size() == 1) return TermMap{{w, 1}};
  const auto [u, v] = standard_factorization(w);
  return commutator(bracketing(u), bracketing(v));
}

}  // namespace ncinv
