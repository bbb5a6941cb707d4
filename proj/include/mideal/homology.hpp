#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mideal/ideal.hpp"
#include "mideal/linalg.hpp"

namespace mideal {

/// Lcm lattice of a monomial ideal: every lcm of a subset of G(I), the empty
/// subset giving the bottom element 1. Ordered by divisibility.
class LcmLattice {
 public:
  static constexpr std::size_t kDefaultMaxGens = 20;

  LcmLattice(const MonomialIdeal& ideal, std::size_t max_gens = kDefaultMaxGens);

  std::size_t num_vars() const noexcept { return n_; }
  /// Sorted by degree, so index 0 is the bottom and the last index is the top.
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& atoms() const noexcept { return atoms_; }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }
  bool leq(std::size_t a, std::size_t b) const { return elements_[a].divides(elements_[b]); }
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t n_;
  std::vector<Monomial> elements_;
  std::vector<std::size_t> atoms_;
};

/// Finite abstract simplicial complex given by all of its faces. The empty
/// face is always present unless the complex is void.
class SimplicialComplex {
 public:
  using Face = std::vector<std::uint32_t>;

  /// The void complex (no faces at all).
  SimplicialComplex() = default;
  /// Faces must be sorted vertex lists and closed under taking subsets. The
  /// empty face is added when missing.
  static SimplicialComplex from_faces(std::vector<Face> faces);
  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(const std::vector<Face>& facets);

  bool is_void() const noexcept { return faces_.empty(); }
  /// faces(k) lists the faces of dimension k, k >= -1.
  const std::vector<Face>& faces(int k) const;
  int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }
  std::vector<Face> facets() const;

 private:
  std::vector<std::vector<Face>> faces_;  // faces_[k + 1] = faces of dimension k
};

/// Reduced homology dimensions, including degree -1.
struct ReducedHomology {
  std::vector<std::size_t> dims;  // dims[k + 1] = dim H~_k

  std::size_t operator()(int k) const;
  std::int64_t euler_characteristic() const;
  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;
};

/// Reduced simplicial homology via boundary-matrix ranks:
/// dim H~_k = #faces_k - rank d_k - rank d_{k+1}.
ReducedHomology reduced_homology(const SimplicialComplex& complex, Field field);

/// Order complex (chains) of the open interval (bottom, top) of the lattice.
SimplicialComplex order_complex(const LcmLattice& lattice, std::size_t top);
ReducedHomology order_complex_homology(const LcmLattice& lattice, std::size_t top, Field field);

/// Multigraded Betti numbers beta_{i,m}(S/I) for i >= 1 (nonzero entries only).
struct BettiTable {
  std::size_t num_vars = 0;
  std::uint32_t characteristic = Field::kDefault;
  std::map<std::pair<int, Monomial>, std::size_t> entries;

  std::size_t projective_dimension() const;
  std::size_t depth_quotient() const { return num_vars - projective_dimension(); }
  std::size_t depth_ideal() const { return depth_quotient() + 1; }
  std::size_t total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// beta_{i,m}(S/I) = dim H~_{i-2} of the order complex of (1, m) in the lcm lattice.
BettiTable betti_lcm(const MonomialIdeal& ideal, Field field = Field(), std::size_t max_gens = LcmLattice::kDefaultMaxGens);

/// Independent route: beta_{i,a}(S/I) = dim H~_{i-2} of the Taylor subcomplex
/// of generator subsets whose lcm strictly divides a.
inline constexpr std::size_t kTaylorMaxGens = 12;
BettiTable betti_taylor(const MonomialIdeal& ideal, Field field = Field(), std::size_t max_gens = kTaylorMaxGens);

std::size_t depth_quotient(const MonomialIdeal& ideal, Field field = Field());
std::size_t depth_ideal(const MonomialIdeal& ideal, Field field = Field());

nlohmann::json betti_to_json(const BettiTable& table);

}  // namespace mideal
