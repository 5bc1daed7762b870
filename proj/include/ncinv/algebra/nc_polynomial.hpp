#pragma once

#include "ncinv/algebra/enveloping.hpp"
#include "ncinv/algebra/relfree.hpp"
#include "ncinv/lie/word.hpp"

#include <cstddef>
#include <memory>
#include <optional>

namespace ncinv {

enum class ArenaKind { Tensor, RelFree, Enveloping };

// Where an NCPolynomial lives: T over a number of letters, F(𝔑_p, K^n), or
// U(L). Letters of the enveloping arena are Lie-basis indices.
class Arena {
public:
  static Arena tensor(std::size_t letters);
  static Arena relfree(std::shared_ptr<const RelFreeContext> ctx);
  static Arena enveloping(std::shared_ptr<const EnvelopingContext> ctx);

  ArenaKind kind() const { return kind_; }
  std::size_t letters() const { return letters_; }
  const RelFreeContext& relfree_context() const;
  const EnvelopingContext& enveloping_context() const;
  const std::shared_ptr<const RelFreeContext>& relfree_ptr() const { return relfree_; }
  const std::shared_ptr<const EnvelopingContext>& enveloping_ptr() const { return enveloping_; }

  // Brings arbitrary words over the letters into the arena's normal form.
  TermMap normalize(const TermMap& t) const;
  // Word length, or PBW weight in the enveloping arena.
  std::size_t degree_of(const Word& w) const;

  friend bool operator==(const Arena& a, const Arena& b) {
    return a.kind_ == b.kind_ && a.letters_ == b.letters_ && a.relfree_ == b.relfree_ &&
           a.enveloping_ == b.enveloping_;
  }

private:
  ArenaKind kind_ = ArenaKind::Tensor;
  std::size_t letters_ = 0;
  std::shared_ptr<const RelFreeContext> relfree_;
  std::shared_ptr<const EnvelopingContext> enveloping_;
};

class NCPolynomial {
public:
  // Normalizes terms into the arena.
  explicit NCPolynomial(Arena arena, const TermMap& terms = {});
  static NCPolynomial zero(const Arena& arena) { return NCPolynomial(arena); }
  static NCPolynomial one(const Arena& arena);
  static NCPolynomial letter(const Arena& arena, std::size_t i);
  // Takes terms already in normal form.
  static NCPolynomial from_normalized(Arena arena, TermMap terms);

  const Arena& arena() const { return arena_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Highest degree present; nullopt for zero.
  std::optional<std::size_t> degree() const;
  bool is_homogeneous() const;
  NCPolynomial homogeneous_part(std::size_t d) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator*(const Scalar& c, const NCPolynomial& a);
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.arena_ == b.arena_ && a.terms_ == b.terms_;
  }

private:
  NCPolynomial(Arena arena, TermMap terms, bool);
  void check_arena(const NCPolynomial& o) const;
  Arena arena_;
  TermMap terms_;
};

// Throws ArenaMismatch for operands from different arenas.
NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b);

}  // namespace ncinv
