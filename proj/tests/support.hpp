#pragma once

// Test-only helpers: small constructors and brute-force oracles that do not
// reuse the library code they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mideal/decomp.hpp"
#include "mideal/ideal.hpp"
#include "mideal/monomial.hpp"

namespace testing {

using mideal::Exponent;
using mideal::Monomial;
using mideal::MonomialIdeal;
using mideal::Ring;
using Vec = std::vector<Exponent>;

inline MonomialIdeal ideal(std::size_t n, std::vector<Vec> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal(Ring(n), std::move(ms));
}

inline MonomialIdeal maximal(std::size_t n) {
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < n; ++i) ms.push_back(Monomial::variable(n, i));
  return MonomialIdeal(Ring(n), ms);
}

inline bool vec_divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Vec vec(const Monomial& m) { return Vec(m.exponents().begin(), m.exponents().end()); }

/// Membership by scanning every generator.
inline bool brute_member(const std::vector<Vec>& gens, const Vec& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return vec_divides(g, m); });
}

inline std::vector<Vec> gens_of(const MonomialIdeal& I) {
  std::vector<Vec> out;
  for (const auto& g : I.gens()) out.push_back(vec(g));
  return out;
}

/// Every exponent vector of total degree <= d.
inline std::vector<Vec> monomials_up_to(std::size_t n, std::size_t d) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[i] = static_cast<Exponent>(e);
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Every exponent vector in the box [0, g].
inline std::vector<Vec> box(const Vec& g) {
  std::vector<Vec> out;
  Vec cur(g.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < g.size() && cur[i] == g[i]) cur[i++] = 0;
    if (i == g.size()) return out;
    ++cur[i];
  }
}

/// True when the two generator sets define the same ideal on all monomials of degree <= d.
inline bool same_up_to(std::size_t n, const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t d) {
  for (const auto& m : monomials_up_to(n, d))
    if (brute_member(a, m) != brute_member(b, m)) return false;
  return true;
}

/// Ass(S/I) from the definition: primes of the form I : w for monomials w not in I.
/// w ranges over the box [0, lcm], which suffices for monomial ideals.
inline std::set<std::vector<std::size_t>> brute_ass(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  const auto gens = gens_of(I);
  Vec g(n, 0);
  for (const auto& x : gens)
    for (std::size_t i = 0; i < n; ++i) g[i] = std::max(g[i], x[i]);
  std::set<std::vector<std::size_t>> out;
  for (const auto& w : box(g)) {
    if (brute_member(gens, w)) continue;
    std::vector<Vec> colon;
    for (const auto& x : gens) {
      Vec q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = x[i] > w[i] ? x[i] - w[i] : 0;
      colon.push_back(q);
    }
    // Minimal elements of the colon generators.
    std::vector<Vec> minimal;
    for (const auto& q : colon) {
      bool redundant = false;
      for (const auto& r : colon)
        if (r != q && vec_divides(r, q)) redundant = true;
      if (!redundant && std::find(minimal.begin(), minimal.end(), q) == minimal.end()) minimal.push_back(q);
    }
    std::vector<std::size_t> support;
    bool prime = true;
    for (const auto& q : minimal) {
      std::size_t deg = 0, var = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (q[i]) deg += q[i], var = i;
      if (deg != 1) {
        prime = false;
        break;
      }
      support.push_back(var);
    }
    if (prime) {
      std::sort(support.begin(), support.end());
      out.insert(support);
    }
  }
  return out;
}

inline std::vector<mideal::MonomialPrime> as_primes(const std::set<std::vector<std::size_t>>& s) {
  std::vector<mideal::MonomialPrime> out;
  for (const auto& p : s) out.push_back({p});
  return out;
}

struct BruteSize {
  std::size_t size = 0, bigsize = 0;
};

/// size and bigsize by trying subsets of increasing cardinality.
inline BruteSize brute_size(const std::vector<std::vector<std::size_t>>& ass, std::size_t n) {
  std::set<std::size_t> all;
  for (const auto& p : ass) all.insert(p.begin(), p.end());
  const std::size_t s = ass.size(), b = all.size();
  auto covers = [&](const std::vector<std::size_t>& pick) {
    std::set<std::size_t> u;
    for (auto i : pick) u.insert(ass[i].begin(), ass[i].end());
    return u == all;
  };
  std::size_t a = 0, a_every = 0;
  for (std::size_t t = 1; t <= s; ++t) {
    bool some = false, every = true;
    std::vector<bool> sel(s, false);
    std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(t), true);
    do {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < s; ++i)
        if (sel[i]) pick.push_back(i);
      if (covers(pick))
        some = true;
      else
        every = false;
    } while (std::prev_permutation(sel.begin(), sel.end()));
    if (some && a == 0) a = t;
    if (every && a_every == 0) a_every = t;
  }
  return {a + (n - b) - 1, a_every + (n - b) - 1};
}

/// Coefficients of the numerator of the Hilbert series of S/I by inclusion-exclusion
/// over all generator subsets: sum over F of (-1)^|F| t^lcm(F).
inline std::map<Vec, long long> k_polynomial(const MonomialIdeal& I) {
  const auto gens = gens_of(I);
  const std::size_t n = I.num_vars(), m = gens.size();
  std::map<Vec, long long> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Vec l(n, 0);
    int bits = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        ++bits;
        for (std::size_t v = 0; v < n; ++v) l[v] = std::max(l[v], gens[i][v]);
      }
    out[l] += bits % 2 ? -1 : 1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Seeded random ideal; never the zero or unit ideal.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens, Exponent max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<Exponent> ex(0, max_exp);
  const std::size_t m = count(rng);
  std::vector<Monomial> gens;
  while (gens.size() < m) {
    Vec e(n);
    for (auto& x : e) x = ex(rng);
    if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 0; })) gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(Ring(n), std::move(gens));
}

/// Relabels variables: variable i becomes perm[i].
inline MonomialIdeal permute(const MonomialIdeal& I, const std::vector<std::size_t>& perm) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    Vec e(I.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = g[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.ring(), std::move(gens));
}

}  // namespace testing
