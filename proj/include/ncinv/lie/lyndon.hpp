#pragma once

#include "ncinv/lie/word.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ncinv {

// Strictly smaller than each of its proper rotations (equivalently, than
// each of its proper suffixes).
bool is_lyndon(const Word& w);

// Lyndon words of length exactly d over letters {0..n-1}, lex-sorted.
std::vector<Word> lyndon_words(std::size_t n, std::size_t d);

// (1/d) Σ_{e|d} μ(e) n^{d/e}.
std::uint64_t witt(std::size_t n, std::size_t d);

// Right standard factorization w = uv, v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// Expansion of the standard bracketing of a Lyndon word in the free algebra.
TermMap bracketing(const Word& w);

}  // namespace ncinv
