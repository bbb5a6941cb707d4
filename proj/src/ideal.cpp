#include "mideal/ideal.hpp"

#include <algorithm>
#include <limits>

#include "mideal/errors.hpp"

namespace mideal {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch(a.num_vars(), b.num_vars());
}

void require_ring(const MonomialIdeal& a, const Monomial& m) {
  if (a.num_vars() != m.num_vars()) throw RingMismatch(a.num_vars(), m.num_vars());
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // Ascending degree: a divisor always precedes its proper multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), lex_greater);
  return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(ring) {
  for (const auto& g : gens)
    if (g.num_vars() != ring.n) throw RingMismatch(ring.n, g.num_vars());
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

Monomial MonomialIdeal::lcm_of_gens() const {
  Monomial acc(ring_.n);
  for (const auto& g : gens_) acc = lcm(acc, g);
  return acc;
}

bool member(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const MonomialIdeal& big, const MonomialIdeal& small) {
  require_same_ring(big, small);
  return std::all_of(small.gens().begin(), small.gens().end(), [&](const Monomial& g) { return member(big, g); });
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) out.push_back(lcm(f, g));
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> out = a.gens();
  out.insert(out.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(divide(g, gcd(g, m)));
  return MonomialIdeal(ideal.ring(), std::move(out));
}

MonomialIdeal scale(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(multiply(g, m));
  return MonomialIdeal(ideal.ring(), std::move(out));
}

bool is_primary(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<bool> occurs(n, false), pure(n, false);
  for (const auto& g : ideal.gens()) {
    auto s = g.support();
    for (auto i : s) occurs[i] = true;
    if (s.size() == 1) pure[s.front()] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (occurs[i] && !pure[i]) return false;
  return true;
}

std::vector<std::size_t> radical_support(const MonomialIdeal& ideal) {
  if (!is_primary(ideal)) throw InvalidArgument("radical_support requires a primary monomial ideal");
  std::vector<std::size_t> out;
  for (const auto& g : ideal.gens()) {
    auto s = g.support();
    if (s.size() == 1) out.push_back(s.front());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Monomial> next_lex_same_degree(const Monomial& u) {
  const std::size_t n = u.num_vars();
  if (n < 2) return std::nullopt;
  std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
  const Exponent tail = e[n - 1];
  std::size_t i = n - 1;
  while (i > 0 && e[i - 1] == 0) --i;
  if (i == 0) return std::nullopt;
  --i;
  e[i] -= 1;
  e[n - 1] = 0;
  e[i + 1] = tail + 1;
  return Monomial(std::move(e));
}

MonomialIdeal lexsegment(Ring ring, std::size_t d, const Monomial& u, const Monomial& v) {
  if (u.num_vars() != ring.n) throw RingMismatch(ring.n, u.num_vars());
  if (v.num_vars() != ring.n) throw RingMismatch(ring.n, v.num_vars());
  if (d < 2) throw InvalidArgument("lexsegment degree must be at least 2");
  if (u.degree() != d || v.degree() != d) throw InvalidArgument("lexsegment endpoints must have degree d");
  if (compare_lex(u, v) < 0) throw InvalidArgument("lexsegment requires u >=lex v");
  std::vector<Monomial> gens{u};
  Monomial w = u;
  while (w != v) {
    w = *next_lex_same_degree(w);
    gens.push_back(w);
  }
  return MonomialIdeal(ring, std::move(gens));
}

Alpha::Alpha(std::vector<Exponent> a) : a_(std::move(a)) {
  if (a_.empty()) throw InvalidArgument("alpha must be nonempty");
  for (auto x : a_)
    if (x == 0) throw InvalidArgument("alpha entries must be >= 1");
}

Alpha operator*(const Alpha& a, const Alpha& b) {
  if (a.size() != b.size()) throw RingMismatch(a.size(), b.size());
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a[i] > std::numeric_limits<Exponent>::max() / b[i]) throw ExponentOverflow("exponent overflow in alpha product");
    out[i] = a[i] * b[i];
  }
  return Alpha(std::move(out));
}

std::vector<Monomial> substitute_powers(std::span<const Monomial> monomials, const Alpha& alpha) {
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) {
    if (m.num_vars() != alpha.size()) throw RingMismatch(alpha.size(), m.num_vars());
    std::vector<Exponent> e(m.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (m[i] != 0 && alpha[i] > std::numeric_limits<Exponent>::max() / m[i])
        throw ExponentOverflow("exponent overflow in power substitution");
      e[i] = m[i] * alpha[i];
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

MonomialIdeal modify_trivial(const MonomialIdeal& ideal, const Alpha& alpha) {
  if (!ideal.is_squarefree()) throw InvalidArgument("trivial modification is defined for squarefree ideals");
  if (alpha.size() != ideal.num_vars()) throw RingMismatch(ideal.num_vars(), alpha.size());
  return MonomialIdeal(ideal.ring(), substitute_powers(ideal.gens(), alpha));
}

}  // namespace mideal
