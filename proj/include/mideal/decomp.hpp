#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "mideal/ideal.hpp"

namespace mideal {

/// Prime generated by a set of variables (0-based indices, sorted).
struct MonomialPrime {
  std::vector<std::size_t> support;

  std::size_t height() const noexcept { return support.size(); }
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
};

/// The maximal ideal (x_1, ..., x_n).
MonomialPrime maximal_prime(std::size_t n);
MonomialIdeal to_ideal(const MonomialPrime& prime, Ring ring);

struct PrimaryComponent {
  MonomialIdeal ideal;
  MonomialPrime radical;
};

/// An irredundant primary decomposition with pairwise distinct radicals,
/// components sorted by radical.
struct Decomposition {
  std::vector<PrimaryComponent> components;

  std::vector<MonomialPrime> radicals() const;
  /// Intersection of all components.
  MonomialIdeal recompose(Ring ring) const;
};

/// Splits on a mixed generator x_i^b * w using I = (I + x_i^b) ∩ (I + w) until
/// every leaf is primary, then merges leaves by radical and drops redundant
/// components greedily in canonical order. Requires I proper and nonzero.
Decomposition primary_decomposition(const MonomialIdeal& ideal);

/// Ass(S/I), sorted.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

struct SizeReport {
  std::size_t a = 0;        ///< least t such that some t primes span the union
  std::size_t a_every = 0;  ///< least t such that every t primes span the union
  std::size_t b = 0;        ///< height of the sum of all associated primes
  std::size_t size = 0;     ///< a + (n - b) - 1
  std::size_t bigsize = 0;  ///< a_every + (n - b) - 1
};

/// Size and bigsize from the associated primes. Both minima are exact.
SizeReport size_bigsize(std::span<const MonomialPrime> ass, std::size_t n);
SizeReport size_bigsize(const MonomialIdeal& ideal);

/// Every prime owns a variable that lies in no other prime.
bool is_star_condition(std::span<const MonomialPrime> ass);

/// depth(I) == size(I) + 1, with depth computed from multigraded Betti numbers.
bool has_minimal_depth(const MonomialIdeal& ideal);

nlohmann::json decomposition_to_json(const Decomposition& d);
/// Variable indices are serialized 1-based, matching x1..xn.
nlohmann::json prime_to_json(const MonomialPrime& p);

}  // namespace mideal
