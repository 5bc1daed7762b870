#include "ncinv/algebra/nc_polynomial.hpp"

#include "ncinv/error.hpp"

#include <string>

namespace ncinv {

Arena Arena::tensor(std::size_t letters) {
  Arena a;
  a.kind_ = ArenaKind::Tensor;
  a.letters_ = letters;
  return a;
}

Arena Arena::relfree(std::shared_ptr<const RelFreeContext> ctx) {
  if (!ctx) throw InputError("relfree arena needs a context");
  Arena a;
  a.kind_ = ArenaKind::RelFree;
  a.letters_ = ctx->letters();
  a.relfree_ = std::move(ctx);
  return a;
}

Arena Arena::enveloping(std::shared_ptr<const EnvelopingContext> ctx) {
  if (!ctx) throw InputError("enveloping arena needs a context");
  Arena a;
  a.kind_ = ArenaKind::Enveloping;
  a.letters_ = ctx->lie()->dim();
  a.enveloping_ = std::move(ctx);
  return a;
}

const RelFreeContext& Arena::relfree_context() const {
  if (!relfree_) throw ArenaMismatch("arena is not relatively free");
  return *relfree_;
}

const EnvelopingContext& Arena::enveloping_context() const {
  if (!enveloping_) throw ArenaMismatch("arena is not an enveloping algebra");
  return *enveloping_;
}

TermMap Arena::normalize(const TermMap& t) const {
  for (const auto& [w, c] : t)
    for (Letter x : w)
      if (x >= letters_) throw InputError("letter " + std::to_string(x) + " outside the arena alphabet");
  switch (kind_) {
    case ArenaKind::Tensor: {
      TermMap out;
      for (const auto& [w, c] : t) add_term(out, w, c);
      return out;
    }
    case ArenaKind::RelFree:
      return relfree_->normal_form(t);
    case ArenaKind::Enveloping:
      return enveloping_->straighten(t);
  }
  return {};
}

std::size_t Arena::degree_of(const Word& w) const {
  if (kind_ == ArenaKind::Enveloping) return enveloping_->weight(w);
  return w.size();
}

NCPolynomial::NCPolynomial(Arena arena, const TermMap& terms)
    : arena_(std::move(arena)), terms_(arena_.normalize(terms)) {}

NCPolynomial::NCPolynomial(Arena arena, TermMap terms, bool) : arena_(std::move(arena)), terms_(std::move(terms)) {}

NCPolynomial NCPolynomial::from_normalized(Arena arena, TermMap terms) {
  return NCPolynomial(std::move(arena), std::move(terms), true);
}

NCPolynomial NCPolynomial::one(const Arena& arena) { return NCPolynomial(arena, TermMap{{Word{}, 1}}); }

NCPolynomial NCPolynomial::letter(const Arena& arena, std::size_t i) {
  return NCPolynomial(arena, TermMap{{Word{static_cast<Letter>(i)}, 1}});
}

std::optional<std::size_t> NCPolynomial::degree() const {
  std::optional<std::size_t> d;
  for (const auto& [w, c] : terms_) {
    const std::size_t k = arena_.degree_of(w);
    if (!d || k > *d) d = k;
  }
  return d;
}

bool NCPolynomial::is_homogeneous() const {
  auto d = degree();
  for (const auto& [w, c] : terms_)
    if (arena_.degree_of(w) != *d) return false;
  return true;
}

NCPolynomial NCPolynomial::homogeneous_part(std::size_t d) const {
  TermMap out;
  for (const auto& [w, c] : terms_)
    if (arena_.degree_of(w) == d) out.emplace(w, c);
  return from_normalized(arena_, std::move(out));
}

void NCPolynomial::check_arena(const NCPolynomial& o) const {
  if (!(arena_ == o.arena_)) throw ArenaMismatch("operands belong to different arenas");
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  check_arena(o);
  add_scaled(terms_, o.terms_, 1);
  return *this;
}

NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b) {
  a.check_arena(b);
  TermMap t = a.terms_;
  add_scaled(t, b.terms_, -1);
  return NCPolynomial::from_normalized(a.arena_, std::move(t));
}

NCPolynomial operator*(const Scalar& c, const NCPolynomial& a) {
  return NCPolynomial::from_normalized(a.arena_, scaled(a.terms_, c));
}

NCPolynomial nc_multiply(const NCPolynomial& a, const NCPolynomial& b) {
  if (!(a.arena() == b.arena())) throw ArenaMismatch("operands belong to different arenas");
  return NCPolynomial(a.arena(), tensor_product(a.terms(), b.terms()));
}

}  // namespace ncinv
