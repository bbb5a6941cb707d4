#include "mideal/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"

namespace mideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidArgument("operation requires a nonzero ideal");
  if (ideal.is_unit()) throw InvalidArgument("operation requires a proper ideal");
}

/// Picks the variable without a pure power that occurs in the most generators,
/// and among its mixed generators the one with the largest exponent of it.
void split_until_primary(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& leaves) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::size_t> occurrences(n, 0);
  std::vector<bool> pure(n, false);
  for (const auto& g : ideal.gens()) {
    auto s = g.support();
    for (auto i : s) ++occurrences[i];
    if (s.size() == 1) pure[s.front()] = true;
  }
  std::size_t var = n;
  for (std::size_t i = 0; i < n; ++i)
    if (occurrences[i] > 0 && !pure[i] && (var == n || occurrences[i] > occurrences[var])) var = i;
  if (var == n) {
    leaves.push_back(ideal);
    return;
  }
  const Monomial* pick = nullptr;
  for (const auto& g : ideal.gens())
    if (g[var] > 0 && (pick == nullptr || g[var] > (*pick)[var])) pick = &g;

  const Monomial power = Monomial::variable(n, var, (*pick)[var]);
  const Monomial rest = divide(*pick, power);
  split_until_primary(sum(ideal, MonomialIdeal(ideal.ring(), {power})), leaves);
  split_until_primary(sum(ideal, MonomialIdeal(ideal.ring(), {rest})), leaves);
}

MonomialIdeal intersect_all(Ring ring, std::span<const PrimaryComponent> comps, std::size_t skip) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != skip) acc = intersect(acc, comps[i].ideal);
  return acc;
}

std::uint64_t support_mask(const MonomialPrime& p) {
  std::uint64_t m = 0;
  for (auto i : p.support) m |= std::uint64_t{1} << i;
  return m;
}

/// Calls visit(mask) for every t-subset of {0..s-1}; stops early when visit returns true.
template <class Visit>
bool any_subset_of_size(std::size_t s, std::size_t t, Visit&& visit) {
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == s - t + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MonomialPrime maximal_prime(std::size_t n) {
  MonomialPrime p;
  for (std::size_t i = 0; i < n; ++i) p.support.push_back(i);
  return p;
}

MonomialIdeal to_ideal(const MonomialPrime& prime, Ring ring) {
  std::vector<Monomial> gens;
  for (auto i : prime.support) gens.push_back(Monomial::variable(ring.n, i));
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<MonomialPrime> Decomposition::radicals() const {
  std::vector<MonomialPrime> out;
  for (const auto& c : components) out.push_back(c.radical);
  return out;
}

MonomialIdeal Decomposition::recompose(Ring ring) const {
  return intersect_all(ring, components, components.size());
}

Decomposition primary_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<MonomialIdeal> leaves;
  split_until_primary(ideal, leaves);

  // A leaf containing another leaf never changes the intersection.
  std::sort(leaves.begin(), leaves.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens() < b.gens(); });
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < leaves.size() && !dominated; ++j)
      dominated = j != i && contains(leaves[i], leaves[j]);
    if (!dominated) kept.push_back(leaves[i]);
  }

  std::map<MonomialPrime, MonomialIdeal> by_radical;
  for (const auto& leaf : kept) {
    MonomialPrime p{radical_support(leaf)};
    auto it = by_radical.find(p);
    if (it == by_radical.end())
      by_radical.emplace(std::move(p), leaf);
    else
      it->second = intersect(it->second, leaf);
  }

  std::vector<PrimaryComponent> comps;
  for (auto& [p, q] : by_radical) comps.push_back({q, p});
  for (std::size_t i = 0; i < comps.size();) {
    if (comps.size() > 1 && contains(comps[i].ideal, intersect_all(ideal.ring(), comps, i)))
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Decomposition{std::move(comps)};
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  return primary_decomposition(ideal).radicals();
}

SizeReport size_bigsize(std::span<const MonomialPrime> ass, std::size_t n) {
  if (ass.empty()) throw InvalidArgument("size needs at least one associated prime");
  if (n > 64) throw CapExceeded("size computation supports at most 64 variables");
  std::vector<std::uint64_t> masks;
  std::uint64_t all = 0;
  for (const auto& p : ass) {
    for (auto i : p.support)
      if (i >= n) throw InvalidArgument("prime support outside the ring");
    masks.push_back(support_mask(p));
    all |= masks.back();
  }
  const std::size_t s = masks.size();
  auto union_of = [&](const std::vector<std::size_t>& idx) {
    std::uint64_t u = 0;
    for (auto i : idx) u |= masks[i];
    return u;
  };

  SizeReport r;
  r.b = static_cast<std::size_t>(std::popcount(all));
  for (std::size_t t = 1; t <= s; ++t) {
    if (any_subset_of_size(s, t, [&](const auto& idx) { return union_of(idx) == all; })) {
      r.a = t;
      break;
    }
  }
  for (std::size_t t = r.a; t <= s; ++t) {
    bool some_fails = any_subset_of_size(s, t, [&](const auto& idx) { return union_of(idx) != all; });
    if (!some_fails) {
      r.a_every = t;
      break;
    }
  }
  r.size = r.a + (n - r.b) - 1;
  r.bigsize = r.a_every + (n - r.b) - 1;
  return r;
}

SizeReport size_bigsize(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  return size_bigsize(ass, ideal.num_vars());
}

bool is_star_condition(std::span<const MonomialPrime> ass) {
  for (std::size_t i = 0; i < ass.size(); ++i) {
    std::set<std::size_t> others;
    for (std::size_t j = 0; j < ass.size(); ++j)
      if (j != i) others.insert(ass[j].support.begin(), ass[j].support.end());
    bool owns_private = std::any_of(ass[i].support.begin(), ass[i].support.end(),
                                    [&](std::size_t v) { return !others.contains(v); });
    if (!owns_private) return false;
  }
  return true;
}

bool has_minimal_depth(const MonomialIdeal& ideal) {
  const auto report = size_bigsize(ideal);
  return depth_ideal(ideal) == report.size + 1;
}

nlohmann::json prime_to_json(const MonomialPrime& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : p.support) out.push_back(i + 1);
  return out;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : d.components) comps.push_back({{"gens", ideal_to_json(c.ideal)["gens"]}, {"radical", prime_to_json(c.radical)}});
  return comps;
}

}  // namespace mideal
