#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <set>

#include "mideal/errors.hpp"
#include "mideal/io.hpp"
#include "mideal/verify.hpp"

namespace mideal::verify {

namespace {

std::string numbered(const std::string& prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return prefix + "/" + buf;
}

void shuffle(std::mt19937_64& rng, std::vector<std::size_t>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, 0, i - 1)]);
}

nlohmann::json primes_to_json(const std::vector<MonomialPrime>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : primes) out.push_back(prime_to_json(p));
  return out;
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, Exponent max_exp, std::size_t first_var = 0) {
  std::vector<Exponent> e(n, 0);
  for (std::size_t i = first_var; i < n; ++i) e[i] = static_cast<Exponent>(draw(rng, 0, max_exp));
  return Monomial(std::move(e));
}

/// Guards against parameter sets that can never yield an instance.
void require_attempts(std::size_t attempts, std::size_t produced, std::size_t wanted, const char* what) {
  if (attempts > 1000 * (wanted + 1) && produced < wanted)
    throw InvalidArgument(std::string(what) + ": parameters too restrictive, gave up after " + std::to_string(attempts) + " attempts");
}

}  // namespace

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw InvalidArgument("empty draw range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  std::optional<Monomial> w = Monomial::variable(n, 0, static_cast<Exponent>(d));
  while (w) {
    out.push_back(*w);
    w = next_lex_same_degree(*w);
  }
  return out;
}

std::vector<Instance> gen_lexsegments(const CorpusSpec& spec) {
  if (spec.n_min < 2 || spec.d_min < 2) throw InvalidArgument("lexsegment corpora need n >= 2 and d >= 2");
  std::vector<Instance> out;
  std::mt19937_64 rng(spec.seed);
  auto emit = [&](std::size_t n, std::size_t d, const Monomial& u, const Monomial& v, const char* family) {
    Instance inst{numbered("lex/n" + std::to_string(n) + "/d" + std::to_string(d), out.size()),
                  lexsegment(Ring(n), d, u, v),
                  {{"n", n}, {"d", d}, {"u", monomial_to_json(u)}, {"v", monomial_to_json(v)}, {"family", family}}};
    out.push_back(std::move(inst));
  };

  for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
    for (std::size_t d = spec.d_min; d <= spec.d_max; ++d) {
      const auto mons = monomials_of_degree(n, d);
      const std::size_t pairs = mons.size() * (mons.size() + 1) / 2;
      if (spec.exhaustive || pairs <= spec.count) {
        for (std::size_t i = 0; i < mons.size(); ++i)
          for (std::size_t j = i; j < mons.size(); ++j) emit(n, d, mons[i], mons[j], "exhaustive");
        continue;
      }
      std::set<std::pair<std::size_t, std::size_t>> chosen;
      while (chosen.size() < spec.count) {
        std::size_t i = draw(rng, 0, mons.size() - 1), j = draw(rng, 0, mons.size() - 1);
        if (i > j) std::swap(i, j);
        chosen.emplace(i, j);
      }
      for (auto [i, j] : chosen) emit(n, d, mons[i], mons[j], "sampled");
    }
  }

  if (spec.include_subcases) {
    auto x = [](std::size_t n, std::vector<std::pair<std::size_t, Exponent>> factors) {
      std::vector<Exponent> e(n, 0);
      for (auto [var, pow] : factors) e[var - 1] += pow;
      return Monomial(std::move(e));
    };
    // v = x2^d with u = x1 x_l^{d-1}, l >= 4.
    const std::vector<std::array<std::size_t, 3>> x2_power{{5, 2, 4}, {5, 3, 4}, {5, 2, 5}, {6, 4, 4}, {6, 2, 5}, {6, 3, 6}, {6, 2, 4}};
    for (auto [n, d, l] : x2_power)
      emit(n, d, x(n, {{1, 1}, {l, static_cast<Exponent>(d - 1)}}), x(n, {{2, static_cast<Exponent>(d)}}), "subcase");
    // v = x2^{d-1} x_j with 3 <= j <= n-2 and u = x1 x_l^{d-1}, l >= j+2.
    const std::vector<std::array<std::size_t, 4>> x2_power_xj{{5, 2, 3, 5}, {5, 3, 3, 5}, {6, 2, 3, 5}, {6, 2, 3, 6}, {6, 2, 4, 6}, {6, 3, 4, 6}};
    for (auto [n, d, j, l] : x2_power_xj)
      emit(n, d, x(n, {{1, 1}, {l, static_cast<Exponent>(d - 1)}}), x(n, {{2, static_cast<Exponent>(d - 1)}, {j, 1}}), "subcase");
  }
  return out;
}

MonomialIdeal intersect_pure_powers(std::size_t n, const std::vector<MonomialPrime>& primes,
                                    const std::vector<std::vector<Exponent>>& exponents) {
  if (primes.size() != exponents.size()) throw InvalidArgument("one exponent list per prime is required");
  MonomialIdeal acc = MonomialIdeal::unit(Ring(n));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i].support.size() != exponents[i].size()) throw InvalidArgument("exponent list does not match prime support");
    std::vector<Monomial> gens;
    for (std::size_t t = 0; t < primes[i].support.size(); ++t)
      gens.push_back(Monomial::variable(n, primes[i].support[t], exponents[i][t]));
    acc = intersect(acc, MonomialIdeal(Ring(n), std::move(gens)));
  }
  return acc;
}

std::vector<Instance> gen_star_family(const CorpusSpec& spec) {
  if (spec.s_min == 0 || spec.s_min > spec.s_max) throw InvalidArgument("star family needs 1 <= s_min <= s_max");
  if (spec.n_max < spec.s_min) throw InvalidArgument("star family infeasible: n < s");
  std::mt19937_64 rng(spec.seed);
  std::vector<Instance> out;
  for (std::size_t attempt = 0; out.size() < spec.count; ++attempt) {
    require_attempts(attempt, out.size(), spec.count, "star family");
    const std::size_t s = draw(rng, spec.s_min, std::min(spec.s_max, spec.n_max));
    const std::size_t n = draw(rng, std::max(spec.n_min, s), spec.n_max);
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = i;
    shuffle(rng, vars);
    std::vector<std::set<std::size_t>> supports(s);
    for (std::size_t i = 0; i < s; ++i) supports[i].insert(vars[i]);
    for (std::size_t t = s; t < n; ++t) {
      const std::uint64_t mask = draw(rng, 1, (std::uint64_t{1} << s) - 1);
      for (std::size_t i = 0; i < s; ++i)
        if (mask & (std::uint64_t{1} << i)) supports[i].insert(vars[t]);
    }
    std::vector<MonomialPrime> primes;
    std::vector<std::vector<Exponent>> exps;
    for (const auto& sup : supports) {
      primes.push_back({{sup.begin(), sup.end()}});
      std::vector<Exponent> e;
      for (std::size_t t = 0; t < sup.size(); ++t) e.push_back(static_cast<Exponent>(draw(rng, 1, spec.max_exp)));
      exps.push_back(std::move(e));
    }
    MonomialIdeal ideal = intersect_pure_powers(n, primes, exps);
    if (ideal.size() > spec.max_gens) continue;
    out.push_back({numbered("star", out.size()), std::move(ideal),
                   {{"n", n}, {"s", s}, {"primes", primes_to_json(primes)}, {"exponents", exps}}});
  }
  return out;
}

std::vector<Instance> gen_random_ideals(const CorpusSpec& spec, bool squarefree) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Instance> out;
  const Exponent cap = squarefree ? 1 : spec.max_exp;
  for (std::size_t attempt = 0; out.size() < spec.count; ++attempt) {
    require_attempts(attempt, out.size(), spec.count, "random ideals");
    const std::size_t n = draw(rng, spec.n_min, spec.n_max);
    const std::size_t m = draw(rng, 1, spec.max_gens);
    std::vector<Monomial> gens;
    while (gens.size() < m) {
      Monomial g = random_monomial(rng, n, cap);
      if (!g.is_unit()) gens.push_back(std::move(g));
    }
    out.push_back({numbered(squarefree ? "squarefree" : "random", out.size()), MonomialIdeal(Ring(n), std::move(gens)), {{"n", n}}});
  }
  return out;
}

std::vector<Instance> gen_bigsize_one(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Instance> out;
  if (spec.n_max < 2 || spec.s_max < 2) throw InvalidArgument("bigsize-one family needs n >= 2 and s >= 2");
  for (std::size_t attempt = 0; out.size() < spec.count; ++attempt) {
    require_attempts(attempt, out.size(), spec.count, "bigsize-one family");
    const std::size_t n = draw(rng, std::max<std::size_t>(2, spec.n_min), spec.n_max);
    const std::size_t s = draw(rng, std::max<std::size_t>(2, spec.s_min), std::max<std::size_t>(2, std::min(spec.s_max, n)));
    if (s > n) continue;
    // Disjoint nonempty sets of missing variables; P_i is the complement of M_i.
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = i;
    shuffle(rng, vars);
    std::vector<std::size_t> owner(n, s);
    for (std::size_t i = 0; i < s; ++i) owner[vars[i]] = i;
    for (std::size_t t = s; t < n; ++t) owner[vars[t]] = draw(rng, 0, s);

    Ring ring(n);
    std::vector<MonomialPrime> primes;
    nlohmann::json components = nlohmann::json::array();
    MonomialIdeal ideal = MonomialIdeal::unit(ring);
    for (std::size_t i = 0; i < s; ++i) {
      MonomialPrime p;
      for (std::size_t v = 0; v < n; ++v)
        if (owner[v] != i) p.support.push_back(v);
      std::vector<Monomial> gens;
      for (auto v : p.support) gens.push_back(Monomial::variable(n, v, static_cast<Exponent>(draw(rng, 1, spec.max_exp))));
      if (p.support.size() >= 2 && draw(rng, 0, 1) == 1) {
        std::vector<Exponent> e(n, 0);
        for (auto v : p.support) e[v] = static_cast<Exponent>(draw(rng, 0, spec.max_exp));
        Monomial mixed(std::move(e));
        if (mixed.support().size() >= 2) gens.push_back(std::move(mixed));
      }
      MonomialIdeal q(ring, std::move(gens));
      components.push_back(ideal_to_json(q)["gens"]);
      ideal = intersect(ideal, q);
      primes.push_back(std::move(p));
    }
    if (ideal.size() > spec.max_gens) continue;
    const auto ass = associated_primes(ideal);
    if (size_bigsize(ass, n).bigsize != 1) continue;
    out.push_back({numbered("bigsize1", out.size()), std::move(ideal),
                   {{"n", n}, {"s", s}, {"primes", primes_to_json(primes)}, {"components", components}}});
  }
  return out;
}

ModificationExample modification_example() {
  auto m = [](std::vector<Exponent> e) { return Monomial(std::move(e)); };
  return {
      {m({1, 1, 1, 0, 0, 0, 0}), m({0, 1, 0, 1, 0, 0, 0}), m({0, 0, 0, 1, 1, 1, 0}), m({0, 1, 0, 0, 0, 1, 0}),
       m({0, 0, 0, 0, 1, 0, 1}), m({1, 1, 0, 0, 0, 1, 1})},
      Alpha({2, 3, 6, 3, 7, 8, 2}),
      {m({2, 3, 6, 0, 0, 0, 0}), m({0, 3, 0, 3, 0, 0, 0}), m({0, 0, 0, 3, 7, 8, 0}), m({0, 3, 0, 0, 0, 8, 0}),
       m({0, 0, 0, 0, 7, 0, 2}), m({2, 3, 0, 0, 0, 8, 2})},
  };
}

}  // namespace mideal::verify
