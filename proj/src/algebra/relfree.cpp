#include "ncinv/algebra/relfree.hpp"

#include "ncinv/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ncinv {

TermMap left_normed_commutator(const std::vector<Word>& parts) {
  TermMap acc{{parts.at(0), 1}};
  for (std::size_t k = 1; k < parts.size(); ++k) acc = commutator(acc, TermMap{{parts[k], 1}});
  return acc;
}

RelFreeContext::RelFreeContext(std::size_t n, std::size_t p, std::size_t max_degree)
    : n_(n), p_(p), max_degree_(max_degree) {
  if (n == 0 || p == 0) throw InputError("relatively free algebra needs n >= 1 and p >= 1");
}

const DegreeComponent& RelFreeContext::component(std::size_t d) const {
  if (d > max_degree_)
    throw CapExceeded("degree " + std::to_string(d) + " exceeds max_degree cap " + std::to_string(max_degree_));
  std::lock_guard lock(mutex_);
  for (std::size_t k = 0; k <= d; ++k)
    if (!cache_.count(k)) build(k);
  return *cache_.at(d);
}

namespace {

std::vector<Word> words_with_content(const Content& c) {
  Word w;
  for (std::size_t x = 0; x < c.size(); ++x) w.insert(w.end(), c[x], static_cast<Letter>(x));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Content> contents_of_degree(std::size_t n, std::size_t d) {
  std::vector<Content> out;
  Content c(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == n) {
      c[i] = static_cast<std::uint16_t>(left);
      out.push_back(c);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      c[i] = static_cast<std::uint16_t>(x);
      rec(i + 1, left - x);
    }
  };
  rec(0, d);
  return out;
}

Vector block_vector(const ContentBlock& block, const TermMap& t) {
  Vector v(block.words.size());
  for (const auto& [w, c] : t) v[block.index.at(w)] += c;
  return v;
}

}  // namespace

void RelFreeContext::build(std::size_t d) const {
  auto comp = std::make_unique<DegreeComponent>();
  comp->degree = d;
  const DegreeComponent* prev = d > 0 ? cache_.at(d - 1).get() : nullptr;

  for (auto& c : contents_of_degree(n_, d)) {
    ContentBlock block;
    block.words = words_with_content(c);
    for (std::size_t i = 0; i < block.words.size(); ++i) block.index.emplace(block.words[i], i);
    block.ideal = Subspace(block.words.size());

    if (d > p_) {
      // I_d = x·I_{d-1} + I_{d-1}·x + C_d with C_d the commutators of total degree d.
      for (std::size_t x = 0; x < n_; ++x) {
        if (c[x] == 0) continue;
        Content lower = c;
        --lower[x];
        const ContentBlock& src = prev->blocks.at(lower);
        for (const auto& row : src.ideal.basis()) {
          TermMap left, right;
          for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) == 0) continue;
            add_term(left, concat(Word{static_cast<Letter>(x)}, src.words[j]), row[j]);
            add_term(right, concat(src.words[j], Word{static_cast<Letter>(x)}), row[j]);
          }
          block.ideal.insert(block_vector(block, left));
          block.ideal.insert(block_vector(block, right));
        }
      }
      // Substitutions of words into the left-normed commutator. The last slot
      // may be a single letter: [X, ab] = [X, a]b + a[X, b] already lies in
      // the lower part. Antisymmetry in the first two slots halves the rest.
      const std::size_t slots = p_ + 1;
      std::vector<std::size_t> cuts(slots + 1, 0);
      for (const auto& w : block.words) {
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
          if (k == slots - 1) {
            cuts[slots - 1] = d - 1;
            cuts[slots] = d;
            if (cuts[slots - 1] <= cuts[slots - 2]) return;
            std::vector<Word> parts;
            parts.reserve(slots);
            for (std::size_t s = 0; s < slots; ++s)
              parts.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(cuts[s]),
                                 w.begin() + static_cast<std::ptrdiff_t>(cuts[s + 1]));
            if (parts[0] == parts[1]) return;
            if (slots > 2 && parts[1] < parts[0]) return;
            block.ideal.insert(block_vector(block, left_normed_commutator(parts)));
            return;
          }
          for (std::size_t cut = cuts[k - 1] + 1; cut + (slots - k) <= d; ++cut) {
            cuts[k] = cut;
            rec(k + 1);
          }
        };
        cuts[0] = 0;
        rec(1);
      }
    }

    std::vector<bool> pivot(block.words.size(), false);
    for (auto pc : block.ideal.pivots()) pivot[pc] = true;
    for (std::size_t i = 0; i < block.words.size(); ++i)
      if (!pivot[i]) block.representatives.push_back(i);
    comp->ideal_dim += block.ideal.dim();
    for (auto i : block.representatives) comp->representatives.push_back(block.words[i]);
    comp->blocks.emplace(std::move(c), std::move(block));
  }
  std::sort(comp->representatives.begin(), comp->representatives.end());
  for (std::size_t i = 0; i < comp->representatives.size(); ++i)
    comp->rep_index.emplace(comp->representatives[i], i);
  cache_.emplace(d, std::move(comp));
}

Subspace RelFreeContext::tideal_component(std::size_t d) const {
  const DegreeComponent& comp = component(d);
  const auto words = all_words(n_, d);
  std::map<Word, std::size_t> global;
  for (std::size_t i = 0; i < words.size(); ++i) global.emplace(words[i], i);
  Subspace out(words.size());
  for (const auto& [c, block] : comp.blocks)
    for (const auto& row : block.ideal.basis()) {
      Vector v(words.size());
      for (std::size_t j = 0; j < row.size(); ++j)
        if (sgn(row[j]) != 0) v[global.at(block.words[j])] = row[j];
      out.insert(std::move(v));
    }
  return out;
}

TermMap RelFreeContext::normal_form(const TermMap& t) const {
  std::map<std::pair<std::size_t, Content>, TermMap> groups;
  for (const auto& [w, c] : t) {
    for (Letter x : w)
      if (x >= n_) throw InputError("word uses letter " + std::to_string(x) + " outside the alphabet");
    add_term(groups[{w.size(), content(w, n_)}], w, c);
  }
  TermMap out;
  for (const auto& [key, part] : groups) {
    const auto& [d, c] = key;
    const ContentBlock& block = component(d).blocks.at(c);
    if (block.ideal.dim() == 0) {
      for (const auto& [w, x] : part) add_term(out, w, x);
      continue;
    }
    const Vector r = block.ideal.reduce(block_vector(block, part));
    for (std::size_t i = 0; i < r.size(); ++i)
      if (sgn(r[i]) != 0) add_term(out, block.words[i], r[i]);
  }
  return out;
}

Vector RelFreeContext::coordinates(const TermMap& nf, std::size_t d) const {
  const DegreeComponent& comp = component(d);
  Vector v(comp.representatives.size());
  for (const auto& [w, c] : nf) {
    auto it = comp.rep_index.find(w);
    if (it == comp.rep_index.end())
      throw InputError("word " + word_to_string(w) + " is not a degree-" + std::to_string(d) + " representative");
    v[it->second] = c;
  }
  return v;
}

TermMap RelFreeContext::from_coordinates(const Vector& v, std::size_t d) const {
  const DegreeComponent& comp = component(d);
  if (v.size() != comp.representatives.size()) throw DimensionMismatch("F_d coordinate vector length");
  TermMap out;
  for (std::size_t i = 0; i < v.size(); ++i) add_term(out, comp.representatives[i], v[i]);
  return out;
}

}  // namespace ncinv
