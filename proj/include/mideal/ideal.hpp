#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mideal/monomial.hpp"

namespace mideal {

/// Removes every element divisible by another element (and duplicates).
/// The result is an antichain under divisibility, sorted lex-descending.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// A monomial ideal represented by its minimal generating set G(I).
///
/// Generators are kept minimal and sorted lex-descending, so two ideals are
/// equal exactly when their canonical forms are structurally equal. The zero
/// ideal has no generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
 public:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(ring, {}); }
  static MonomialIdeal unit(Ring ring) { return MonomialIdeal(ring, {Monomial(ring.n)}); }

  Ring ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_.n; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }
  bool is_squarefree() const noexcept;

  /// Exponent vector of lcm(G(I)); the unit monomial for the zero ideal.
  Monomial lcm_of_gens() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

bool member(const MonomialIdeal& ideal, const Monomial& m);
/// I ⊆ J.
bool contains(const MonomialIdeal& big, const MonomialIdeal& small);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// I : m, generated by g / gcd(g, m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
/// m * I.
MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m);

/// True when every variable occurring in G(I) also has a pure power in G(I).
/// Such monomial ideals are exactly the primary ones.
bool is_primary(const MonomialIdeal& ideal);

/// Variables of the radical of a primary (or prime) monomial ideal.
/// Throws InvalidArgument for ideals that are not primary.
std::vector<std::size_t> radical_support(const MonomialIdeal& ideal);

/// The monomial following u in the lex-descending enumeration of the
/// monomials of degree deg(u); nullopt when u = x_n^d is the last one.
std::optional<Monomial> next_lex_same_degree(const Monomial& u);

/// Ideal generated by the degree-d monomials w with u >=lex w >=lex v.
/// Requires d >= 2, deg u = deg v = d and u >=lex v.
MonomialIdeal lexsegment(Ring ring, std::size_t d, const Monomial& u, const Monomial& v);

/// Exponent scaling vector (a_1, ..., a_n), every entry >= 1.
class Alpha {
 public:
  explicit Alpha(std::vector<Exponent> a);
  std::size_t size() const noexcept { return a_.size(); }
  Exponent operator[](std::size_t i) const { return a_[i]; }
  std::span<const Exponent> values() const noexcept { return a_; }

  /// Pointwise product; throws ExponentOverflow.
  friend Alpha operator*(const Alpha& a, const Alpha& b);

 private:
  std::vector<Exponent> a_;
};

/// Applies x_i -> x_i^{a_i} to each monomial of the list, preserving order and
/// duplicates. Throws ExponentOverflow instead of wrapping.
std::vector<Monomial> substitute_powers(std::span<const Monomial> monomials, const Alpha& alpha);

/// Trivial modification I^alpha of a squarefree ideal.
MonomialIdeal modify_trivial(const MonomialIdeal& ideal, const Alpha& alpha);

}  // namespace mideal
