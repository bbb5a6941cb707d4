#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mideal {

/// Coefficient field for homology: Z/p for a prime p, or Q when p == 0.
struct Field {
  std::uint32_t characteristic = 32003;

  static constexpr std::uint32_t kDefault = 32003;
  /// Throws InvalidArgument unless p == 0 or p is a prime below 2^31.
  Field() : Field(kDefault) {}
  explicit Field(std::uint32_t p);
  bool rational() const noexcept { return characteristic == 0; }
};

/// Sparse integer matrix stored by columns; entries are (row, value) with
/// strictly increasing rows and nonzero values.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;
using SparseMatrix = std::vector<SparseColumn>;

/// Rank over the field. Z/p uses column reduction with modular inverses;
/// Q uses fraction-free (cross-multiplying) column reduction on big integers.
std::size_t rank(const SparseMatrix& columns, Field field);

}  // namespace mideal
