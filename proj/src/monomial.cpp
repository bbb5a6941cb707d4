#include "mideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "mideal/errors.hpp"

namespace mideal {

Ring::Ring(std::size_t vars) : n(vars) {
  if (vars == 0) throw InvalidArgument("a ring needs at least one variable");
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent e) {
  if (i >= n) throw InvalidArgument("variable index out of range");
  Monomial m(n);
  m.exps_[i] = e;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch(a.num_vars(), b.num_vars());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() - b[i])
      throw ExponentOverflow("exponent overflow in monomial product");
    e[i] = a[i] + b[i];
  }
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InvalidArgument(to_string(b) + " does not divide " + to_string(a));
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

std::strong_ordering compare_lex(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  for (std::size_t i = 0; i < u.num_vars(); ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& u) {
  std::string out;
  for (std::size_t i = 0; i < u.num_vars(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (u[i] > 1) out += '^' + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  std::size_t h = u.num_vars();
  for (auto e : u.exponents()) h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace mideal
