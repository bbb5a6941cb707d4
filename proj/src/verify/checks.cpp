#include <algorithm>

#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"
#include "mideal/verify.hpp"

namespace mideal::verify {

namespace {

using json = nlohmann::json;

class Recorder {
 public:
  Recorder(Suite suite, const Instance& instance, std::vector<CheckResult>& out)
      : suite_(suite), instance_(instance), out_(out) {}

  void add(std::string claim, Status status, json observed, std::string expected, std::string note = {}) {
    CheckResult r{instance_.id, std::move(claim), status, std::move(observed), std::move(expected), std::move(note), std::nullopt};
    if (status != Status::pass) r.payload = json{{"suite", to_string(suite_)}, {"instance", instance_to_json(instance_)}};
    out_.push_back(std::move(r));
  }

  void expect(std::string claim, bool holds, json observed, std::string expected, std::string note = {}) {
    add(std::move(claim), holds ? Status::pass : Status::violation, std::move(observed), std::move(expected), std::move(note));
  }

 private:
  Suite suite_;
  const Instance& instance_;
  std::vector<CheckResult>& out_;
};

/// Size data plus the Betti table when the lcm lattice fits.
struct Invariants {
  SizeReport size;
  std::vector<MonomialPrime> ass;
  std::optional<BettiTable> betti;
  std::string note;

  std::optional<std::size_t> depth_quotient() const {
    return betti ? std::optional<std::size_t>(betti->depth_quotient()) : std::nullopt;
  }
  std::optional<std::size_t> depth_ideal() const {
    return betti ? std::optional<std::size_t>(betti->depth_ideal()) : std::nullopt;
  }

  json observed() const {
    json j{{"size", size.size}, {"bigsize", size.bigsize}};
    if (betti) {
      j["depth_quotient"] = betti->depth_quotient();
      j["depth_ideal"] = betti->depth_ideal();
    }
    return j;
  }
};

Invariants invariants(const MonomialIdeal& ideal, const CheckOptions& options) {
  Invariants inv;
  inv.ass = associated_primes(ideal);
  inv.size = size_bigsize(inv.ass, ideal.num_vars());
  try {
    inv.betti = betti_lcm(ideal, options.field);
  } catch (const CapExceeded& e) {
    inv.note = e.what();
  }
  return inv;
}

struct PartitionOutcome {
  Status status = Status::indeterminate;
  std::string note;
  std::uint64_t nodes = 0;
};

/// Does the poset admit a partition with all values >= k? A found partition is
/// only trusted after the independent certificate check.
PartitionOutcome partition_at_least(const MonomialIdeal& ideal, PosetMode mode, std::size_t k, const CheckOptions& options) {
  try {
    CharacteristicPoset poset(ideal, mode, std::nullopt, options.box_cap);
    if (k > poset.num_vars()) return {Status::violation, "k exceeds the number of variables", 0};
    auto search = admits_partition(poset, k, options.budget);
    switch (search.status) {
      case SearchStatus::found: {
        auto check = check_certificate(poset, *search.partition, k);
        if (!check.valid) return {Status::violation, "certificate rejected: " + check.reason, search.nodes};
        return {Status::pass, {}, search.nodes};
      }
      case SearchStatus::absent:
        return {Status::violation, "no partition with all values >= " + std::to_string(k), search.nodes};
      case SearchStatus::indeterminate:
        return {Status::indeterminate, "node budget exhausted at k = " + std::to_string(k), search.nodes};
    }
  } catch (const CapExceeded& e) {
    return {Status::indeterminate, e.what(), 0};
  }
  return {};
}

struct SdepthOutcome {
  std::optional<std::size_t> value;
  std::size_t lower_bound = 0;
  bool certificate_ok = true;
  std::string note;
};

SdepthOutcome full_sdepth(const MonomialIdeal& ideal, PosetMode mode, const CheckOptions& options) {
  SdepthOutcome out;
  try {
    CharacteristicPoset poset(ideal, mode, std::nullopt, options.box_cap);
    auto r = stanley_depth(poset, options.budget);
    out.value = r.value();
    out.lower_bound = r.lower_bound;
    out.note = r.note;
    auto check = check_certificate(poset, r.certificate, r.lower_bound);
    if (!check.valid) {
      out.certificate_ok = false;
      out.note = "certificate rejected: " + check.reason;
    }
  } catch (const CapExceeded& e) {
    out.note = e.what();
  }
  return out;
}

std::string depth_note(const Invariants& inv) { return "depth unavailable: " + inv.note; }

std::vector<MonomialPrime> primes_from_json(const json& j) {
  std::vector<MonomialPrime> out;
  for (const auto& p : j) {
    MonomialPrime prime;
    for (const auto& v : p) prime.support.push_back(v.get<std::size_t>() - 1);
    out.push_back(std::move(prime));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

void check_lex(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const auto inv = invariants(inst.ideal, options);
  const std::size_t n = inst.ideal.num_vars();
  const auto cls = classify_lexsegment(monomial_from_json(inst.params.at("u"), n), monomial_from_json(inst.params.at("v"), n));
  json obs = inv.observed();
  obs["case"] = to_string(cls.kind);
  if (!inv.betti) {
    rec.add("lex.minimal_depth", Status::indeterminate, obs, "depth_ideal = size + 1", depth_note(inv));
    return;
  }
  const std::size_t depth = *inv.depth_ideal();
  rec.expect("lex.minimal_depth", depth == inv.size.size + 1, obs, "depth_ideal = size + 1");
  if (cls.depth_ideal && cls.size) {
    obs["l"] = cls.l;
    obs["j"] = cls.j;
    obs["dropped_vars"] = cls.dropped_vars;
    obs["expected_depth_ideal"] = *cls.depth_ideal;
    obs["expected_size"] = *cls.size;
    rec.expect("lex.subcase_values", depth == *cls.depth_ideal && inv.size.size == *cls.size, obs,
               "depth_ideal and size match the case values");
  }
}

void check_star(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const std::size_t n = inst.ideal.num_vars();
  const std::size_t s = inst.params.at("s").get<std::size_t>();
  const auto primes = primes_from_json(inst.params.at("primes"));
  const auto inv = invariants(inst.ideal, options);
  json obs = inv.observed();
  obs["s"] = s;

  rec.expect("star.condition", is_star_condition(inv.ass) && inv.ass == primes, obs,
             "Ass(S/I) is the constructed prime set and each prime has a private variable");

  if (!inv.betti) {
    rec.add("star.depth_quotient", Status::indeterminate, obs, "depth_quotient = s - 1", depth_note(inv));
    return;
  }
  const std::size_t dq = *inv.depth_quotient();
  // All variables are used, so the primes sum to the maximal ideal and n - b = 0.
  const std::size_t expected_dq = s - 1 + (n - inv.size.b);
  rec.expect("star.depth_quotient", dq == expected_dq, obs, "depth_quotient = s - 1");
  rec.expect("star.minimal_depth", *inv.depth_ideal() == inv.size.size + 1, obs, "depth_ideal = size + 1");

  // The split uses the listed components, whatever s claims.
  const std::size_t listed = inst.params.at("primes").size();
  if (listed >= 2) {
    // depth(S/I) = min(depth(S/J), depth(S/Q_s), 1 + depth(S/K)) with J the
    // intersection of the first s-1 components and K that of the Q_i + Q_s.
    const auto exps = inst.params.at("exponents").get<std::vector<std::vector<Exponent>>>();
    std::vector<MonomialPrime> raw;
    for (const auto& p : inst.params.at("primes")) {
      MonomialPrime prime;
      for (const auto& v : p) prime.support.push_back(v.get<std::size_t>() - 1);
      raw.push_back(std::move(prime));
    }
    if (exps.size() != listed) throw InvalidArgument("star instance: primes and exponents differ in length");
    Ring ring(n);
    std::vector<MonomialIdeal> q;
    for (std::size_t i = 0; i < listed; ++i) q.push_back(intersect_pure_powers(n, {raw[i]}, {exps[i]}));
    MonomialIdeal j = MonomialIdeal::unit(ring), k = MonomialIdeal::unit(ring);
    for (std::size_t i = 0; i + 1 < listed; ++i) {
      j = intersect(j, q[i]);
      k = intersect(k, sum(q[i], q[listed - 1]));
    }
    json lobs = obs;
    try {
      const std::size_t dj = depth_quotient(j, options.field);
      const std::size_t dqs = depth_quotient(q[listed - 1], options.field);
      const std::size_t dk = depth_quotient(k, options.field);
      lobs["depth_first"] = dj;
      lobs["depth_last"] = dqs;
      lobs["depth_sums"] = dk;
      rec.expect("star.split_depth_formula", dq == std::min({dj, dqs, 1 + dk}), lobs,
                 "depth_quotient = min(depth(S/J), depth(S/Q_s), 1 + depth(S/K))");
    } catch (const CapExceeded& e) {
      rec.add("star.split_depth_formula", Status::indeterminate, lobs, "depth formula for the split", e.what());
    }
  }

  const auto part = partition_at_least(inst.ideal, PosetMode::quotient, dq, options);
  json sobs = obs;
  sobs["k"] = dq;
  rec.add("star.stanley_quotient", part.status, sobs, "sdepth_quotient >= depth_quotient", part.note);
}

void check_bigsize1(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const auto inv = invariants(inst.ideal, options);
  json obs = inv.observed();
  if (!inv.betti) {
    rec.add("bigsize1.depth_ideal", Status::indeterminate, obs, "depth_ideal = 2", depth_note(inv));
    return;
  }
  const std::size_t depth = *inv.depth_ideal();
  rec.expect("bigsize1.depth_ideal", inv.size.bigsize == 1 && inv.size.size == 1 && depth == 2, obs,
             "bigsize = size = 1 and depth_ideal = 2");
  rec.expect("bigsize1.minimal_depth", depth == inv.size.size + 1, obs, "depth_ideal = size + 1");
  const auto part = partition_at_least(inst.ideal, PosetMode::quotient, 1, options);
  rec.add("bigsize1.stanley_quotient", part.status, obs, "sdepth_quotient >= 1", part.note);
}

void check_bounds(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const auto inv = invariants(inst.ideal, options);
  json obs = inv.observed();
  if (inv.betti)
    rec.expect("bounds.lyubeznik", *inv.depth_ideal() >= inv.size.size + 1, obs, "depth_ideal >= size + 1");
  else
    rec.add("bounds.lyubeznik", Status::indeterminate, obs, "depth_ideal >= size + 1", depth_note(inv));

  const auto sd = full_sdepth(inst.ideal, PosetMode::ideal, options);
  if (sd.value) obs["sdepth_ideal"] = *sd.value;
  obs["sdepth_lower_bound"] = sd.lower_bound;
  Status st;
  if (!sd.certificate_ok || (sd.value && *sd.value < inv.size.size + 1))
    st = Status::violation;
  else if (sd.lower_bound >= inv.size.size + 1)
    st = Status::pass;
  else
    st = Status::indeterminate;
  rec.add("bounds.hpv", st, obs, "sdepth_ideal >= size + 1", st == Status::pass ? std::string() : sd.note);
}

void check_stanley(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const auto inv = invariants(inst.ideal, options);
  const std::string family = inst.params.at("family").get<std::string>();
  json obs = inv.observed();
  obs["family"] = family;
  bool hypothesis = true;
  if (family == "star") hypothesis = is_star_condition(inv.ass);
  else if (family == "bigsize1") hypothesis = inv.size.bigsize == 1;
  rec.expect("stanley.hypothesis", hypothesis, obs, "instance satisfies its family's hypothesis");
  if (!inv.betti) {
    rec.add("stanley.ideal", Status::indeterminate, obs, "sdepth_ideal >= depth_ideal", depth_note(inv));
    return;
  }
  const auto pi = partition_at_least(inst.ideal, PosetMode::ideal, *inv.depth_ideal(), options);
  rec.add("stanley.ideal", pi.status, obs, "sdepth_ideal >= depth_ideal", pi.note);
  const auto pq = partition_at_least(inst.ideal, PosetMode::quotient, *inv.depth_quotient(), options);
  rec.add("stanley.quotient", pq.status, obs, "sdepth_quotient >= depth_quotient", pq.note);
}

json sdepth_json(const SdepthOutcome& sd) {
  return sd.value ? json(*sd.value) : json(nullptr);
}

/// Exact sdepth equality; anything short of two exact values is indeterminate.
void expect_equal_sdepth(Recorder& rec, const std::string& claim, const MonomialIdeal& a, const MonomialIdeal& b,
                         json obs, const CheckOptions& options, const std::string& expected) {
  const auto sa = full_sdepth(a, PosetMode::ideal, options);
  const auto sb = full_sdepth(b, PosetMode::ideal, options);
  obs["sdepth_ideal"] = sdepth_json(sa);
  obs["sdepth_ideal_other"] = sdepth_json(sb);
  if (!sa.certificate_ok || !sb.certificate_ok) {
    rec.add(claim, Status::violation, obs, expected, sa.certificate_ok ? sb.note : sa.note);
  } else if (sa.value && sb.value) {
    rec.expect(claim, *sa.value == *sb.value, obs, expected);
  } else {
    rec.add(claim, Status::indeterminate, obs, expected, sa.value ? sb.note : sa.note);
  }
}

void check_modification_alpha(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const Alpha alpha(inst.params.at("alpha").get<std::vector<Exponent>>());
  const MonomialIdeal& ideal = inst.ideal;
  const MonomialIdeal modified = modify_trivial(ideal, alpha);
  json obs{{"modified", ideal_to_json(modified)["gens"]}};

  const auto images = substitute_powers(ideal.gens(), alpha);
  bool supports = images.size() == ideal.size();
  for (std::size_t i = 0; supports && i < images.size(); ++i) supports = images[i].support() == ideal.gens()[i].support();
  supports = supports && MonomialIdeal(ideal.ring(), images) == modified && modified.size() == ideal.size();
  rec.expect("modification.supports", supports, obs, "generator supports preserved, one image per generator");

  const auto sa = full_sdepth(ideal, PosetMode::ideal, options);
  const auto sb = full_sdepth(modified, PosetMode::ideal, options);
  obs["sdepth_ideal"] = sdepth_json(sa);
  obs["sdepth_ideal_modified"] = sdepth_json(sb);
  const std::string expected = "sdepth_ideal(I^alpha) = sdepth_ideal(I)";
  if (!sa.certificate_ok || !sb.certificate_ok)
    rec.add("modification.sdepth_equal", Status::violation, obs, expected, sa.certificate_ok ? sb.note : sa.note);
  else if (sa.value && sb.value)
    rec.expect("modification.sdepth_equal", *sa.value == *sb.value, obs, expected);
  else
    rec.add("modification.sdepth_equal", Status::indeterminate, obs, expected, sa.value ? sb.note : sa.note);

  // If sdepth(I) >= depth(I) then the same holds for I^alpha.
  std::optional<std::size_t> d, dm;
  std::string note;
  try {
    d = depth_ideal(ideal, options.field);
    dm = depth_ideal(modified, options.field);
  } catch (const CapExceeded& e) {
    note = e.what();
  }
  if (d) obs["depth_ideal"] = *d;
  if (dm) obs["depth_ideal_modified"] = *dm;
  const std::string transfer = "sdepth(I) >= depth(I) implies sdepth(I^alpha) >= depth(I^alpha)";
  if (!d || !dm || !sa.value || !sb.value)
    rec.add("modification.stanley_transfer", Status::indeterminate, obs, transfer, note.empty() ? "sdepth not exact" : note);
  else
    rec.expect("modification.stanley_transfer", *sa.value < *d || *sb.value >= *dm, obs, transfer);
}

void check_modification_bump(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const std::size_t n = inst.ideal.num_vars();
  const Exponent a = inst.params.at("a").get<Exponent>();
  const std::size_t r = inst.params.at("r").get<std::size_t>();
  std::vector<Monomial> v;
  for (const auto& m : inst.params.at("v")) v.push_back(monomial_from_json(m, n));
  std::vector<Monomial> gens, bumped;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Exponent e = i < r ? a : 0;
    gens.push_back(multiply(Monomial::variable(n, 0, e), v[i]));
    bumped.push_back(multiply(Monomial::variable(n, 0, i < r ? a + 1 : 0), v[i]));
  }
  const MonomialIdeal ideal(Ring(n), gens), other(Ring(n), bumped);
  json obs{{"bumped", ideal_to_json(other)["gens"]}};
  expect_equal_sdepth(rec, "modification.bump_sdepth_equal", ideal, other, obs, options,
                      "sdepth_ideal unchanged when the x1 exponent of the first r generators grows by one");
}

void check_modification_lex_shift(Recorder& rec, const Instance& inst, const CheckOptions&) {
  const std::size_t n = inst.ideal.num_vars();
  const std::size_t d = inst.params.at("d").get<std::size_t>();
  const Monomial u = monomial_from_json(inst.params.at("u"), n);
  const Monomial v = monomial_from_json(inst.params.at("v"), n);
  const MonomialIdeal reduced = lexsegment(Ring(n), d, u, v);
  const auto ass = associated_primes(inst.ideal);
  auto ass_reduced = associated_primes(reduced);
  const SizeReport s1 = size_bigsize(ass, n), s2 = size_bigsize(ass_reduced, n);
  json obs{{"size", s1.size}, {"size_reduced", s2.size}};
  ass_reduced.push_back(MonomialPrime{{0}});
  std::sort(ass_reduced.begin(), ass_reduced.end());
  ass_reduced.erase(std::unique(ass_reduced.begin(), ass_reduced.end()), ass_reduced.end());
  rec.expect("modification.lex_shift_size", s1.size == s2.size && ass == ass_reduced, obs,
             "size(x1^b I') = size(I') and Ass gains only (x1)");
}

void check_modification_example(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const auto ex = modification_example();
  const auto images = substitute_powers(ex.generators, ex.alpha);
  json printed = json::array(), got = json::array();
  for (const auto& m : ex.expected_images) printed.push_back(to_string(m));
  for (const auto& m : images) got.push_back(to_string(m));
  const MonomialIdeal modified = modify_trivial(inst.ideal, ex.alpha);
  const bool exact = images == ex.expected_images && modified == MonomialIdeal(inst.ideal.ring(), ex.expected_images);
  rec.expect("modification.example_generators", exact, {{"images", got}, {"printed", printed}},
             "images of the listed generators equal the printed ones");
  expect_equal_sdepth(rec, "modification.example_sdepth_equal", inst.ideal, modified, json::object(), options,
                      "sdepth_ideal(I^alpha) = sdepth_ideal(I)");
}

void check_modification(Recorder& rec, const Instance& inst, const CheckOptions& options) {
  const std::string family = inst.params.at("family").get<std::string>();
  if (family == "alpha") check_modification_alpha(rec, inst, options);
  else if (family == "bump") check_modification_bump(rec, inst, options);
  else if (family == "lex_shift") check_modification_lex_shift(rec, inst, options);
  else if (family == "example") check_modification_example(rec, inst, options);
  else throw InvalidArgument("unknown modification family '" + family + "'");
}

}  // namespace

std::vector<CheckResult> check_instance(Suite suite, const Instance& instance, const CheckOptions& options) {
  std::vector<CheckResult> out;
  Recorder rec(suite, instance, out);
  switch (suite) {
    case Suite::lex: check_lex(rec, instance, options); break;
    case Suite::star: check_star(rec, instance, options); break;
    case Suite::bigsize1: check_bigsize1(rec, instance, options); break;
    case Suite::bounds: check_bounds(rec, instance, options); break;
    case Suite::stanley: check_stanley(rec, instance, options); break;
    case Suite::modification: check_modification(rec, instance, options); break;
  }
  return out;
}

}  // namespace mideal::verify
