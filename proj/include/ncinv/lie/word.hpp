#pragma once

#include "ncinv/linalg/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncinv {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// Sparse linear combination of words. No zero coefficients are stored.
using TermMap = std::map<Word, Scalar>;

void add_term(TermMap& into, const Word& w, const Scalar& c);
void add_scaled(TermMap& into, const TermMap& from, const Scalar& c);
TermMap scaled(const TermMap& t, const Scalar& c);

Word concat(const Word& a, const Word& b);

// Concatenation product in the free algebra.
TermMap tensor_product(const TermMap& a, const TermMap& b);
TermMap commutator(const TermMap& a, const TermMap& b);

// Algebra endomorphism of the free algebra sending letter i to images[i].
TermMap substitute(const TermMap& t, const std::vector<TermMap>& images);

// All n^d words of length d, lexicographically sorted.
std::vector<Word> all_words(std::size_t n, std::size_t d);

// Per-letter occurrence counts (length n).
std::vector<std::uint16_t> content(const Word& w, std::size_t n);

std::string word_to_string(const Word& w);

}  // namespace ncinv
