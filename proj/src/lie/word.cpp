#include "ncinv/lie/word.hpp"

namespace ncinv {

void add_term(TermMap& into, const Word& w, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = into.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) into.erase(it);
}

void add_scaled(TermMap& into, const TermMap& from, const Scalar& c) {
  if (sgn(c) == 0) return;
  for (const auto& [w, x] : from) add_term(into, w, x * c);
}

TermMap scaled(const TermMap& t, const Scalar& c) {
  TermMap out;
  add_scaled(out, t, c);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

TermMap tensor_product(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) add_term(out, concat(wa, wb), ca * cb);
  return out;
}

TermMap commutator(const TermMap& a, const TermMap& b) {
  TermMap out = tensor_product(a, b);
  add_scaled(out, tensor_product(b, a), -1);
  return out;
}

TermMap substitute(const TermMap& t, const std::vector<TermMap>& images) {
  TermMap out;
  for (const auto& [w, c] : t) {
    TermMap acc{{Word{}, c}};
    for (Letter x : w) {
      acc = tensor_product(acc, images.at(x));
      if (acc.empty()) break;
    }
    for (const auto& [u, cu] : acc) add_term(out, u, cu);
  }
  return out;
}

std::vector<Word> all_words(std::size_t n, std::size_t d) {
  std::vector<Word> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Word w(d, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = d;
    while (i > 0 && w[i - 1] == n - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

std::vector<std::uint16_t> content(const Word& w, std::size_t n) {
  std::vector<std::uint16_t> c(n, 0);
  for (Letter x : w) ++c.at(x);
  return c;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace ncinv
