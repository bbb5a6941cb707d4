#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mideal {

using Exponent = std::uint32_t;

/// Polynomial ring K[x_1, ..., x_n]. Only the number of variables matters.
struct Ring {
  std::size_t n = 1;

  explicit Ring(std::size_t vars);
  friend bool operator==(const Ring&, const Ring&) = default;
};

/// A monomial x^a stored as its exponent vector. Variable i (0-based) is x_{i+1}.
class Monomial {
 public:
  Monomial() = default;
  /// The unit monomial of a ring with n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  /// Indices i with x_i | u.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain vector order on exponent vectors, used for containers only.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

/// Throws RingMismatch when the monomials have different lengths.
void require_same_ring(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Product; throws ExponentOverflow instead of wrapping.
Monomial multiply(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial divide(const Monomial& a, const Monomial& b);

/// Pure lex order with x_1 > x_2 > ... > x_n on exponent vectors.
std::strong_ordering compare_lex(const Monomial& u, const Monomial& v);

inline bool lex_greater(const Monomial& u, const Monomial& v) { return compare_lex(u, v) > 0; }

/// Renders as "x1^2*x3", or "1" for the unit monomial.
std::string to_string(const Monomial& u);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

}  // namespace mideal
