#include <algorithm>

#include "mideal/errors.hpp"
#include "mideal/io.hpp"
#include "mideal/verify.hpp"

namespace mideal::verify {

namespace {

using json = nlohmann::json;

template <class T>
void read_opt(const json& j, const char* key, T& field) {
  if (j.contains(key)) field = j.at(key).get<T>();
}

std::vector<Instance> modification_corpus(const CorpusSpec& spec) {
  std::vector<Instance> out;
  auto example = [] {
    const auto ex = modification_example();
    return Instance{"modification/example", MonomialIdeal(Ring(ex.alpha.size()), ex.generators), {{"family", "example"}}};
  };
  if (spec.worked_example) {
    out.push_back(example());
    return out;
  }

  std::mt19937_64 rng(spec.seed);
  for (auto inst : gen_random_ideals(spec, true)) {
    std::vector<Exponent> alpha;
    for (std::size_t i = 0; i < inst.ideal.num_vars(); ++i) alpha.push_back(static_cast<Exponent>(draw(rng, 1, spec.max_alpha)));
    inst.id = "modification/alpha/" + inst.id.substr(inst.id.find('/') + 1);
    inst.params["family"] = "alpha";
    inst.params["alpha"] = alpha;
    out.push_back(std::move(inst));
  }

  // Pairs (x1^a v_1..x1^a v_r, v_{r+1}..v_m) versus exponent a + 1, v_i free of x1.
  const std::size_t bumps = spec.count / 2;
  for (std::size_t b = 0; b < bumps; ++b) {
    const std::size_t n = draw(rng, std::max<std::size_t>(2, spec.n_min), std::max<std::size_t>(2, spec.n_max));
    const std::size_t m = draw(rng, 2, std::max<std::size_t>(2, spec.max_gens));
    const std::size_t r = draw(rng, 1, m - 1);
    const Exponent a = static_cast<Exponent>(draw(rng, 1, spec.max_exp));
    std::vector<Monomial> v;
    json vj = json::array();
    while (v.size() < m) {
      std::vector<Exponent> e(n, 0);
      for (std::size_t i = 1; i < n; ++i) e[i] = static_cast<Exponent>(draw(rng, 0, spec.max_exp));
      Monomial mon(std::move(e));
      if (v.size() >= r && mon.is_unit()) continue;  // keep the ideal proper
      vj.push_back(monomial_to_json(mon));
      v.push_back(std::move(mon));
    }
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(multiply(Monomial::variable(n, 0, i < r ? a : 0), v[i]));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04zu", b);
    out.push_back({std::string("modification/bump/") + buf, MonomialIdeal(Ring(n), gens),
                   {{"family", "bump"}, {"a", a}, {"r", r}, {"v", vj}}});
  }

  // x1^b * L(u', v') against L(u', v').
  const std::size_t shifts = spec.count / 4;
  for (std::size_t t = 0; t < shifts; ++t) {
    const std::size_t n = draw(rng, 2, std::max<std::size_t>(2, std::min<std::size_t>(spec.n_max, 4)));
    const std::size_t d = draw(rng, 2, 3);
    const auto mons = monomials_of_degree(n, d);
    std::size_t i = draw(rng, 0, mons.size() - 1), k = draw(rng, 0, mons.size() - 1);
    if (i > k) std::swap(i, k);
    const Exponent b1 = static_cast<Exponent>(draw(rng, 1, 2));
    const MonomialIdeal reduced = lexsegment(Ring(n), d, mons[i], mons[k]);
    const MonomialIdeal shifted = scale(reduced, Monomial::variable(n, 0, b1));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04zu", t);
    out.push_back({std::string("modification/lex_shift/") + buf, shifted,
                   {{"family", "lex_shift"}, {"d", d}, {"u", monomial_to_json(mons[i])}, {"v", monomial_to_json(mons[k])}, {"b1", b1}}});
  }
  out.push_back(example());
  return out;
}

std::vector<Instance> stanley_corpus(const CorpusSpec& spec) {
  std::vector<Instance> out;
  const std::size_t each = std::max<std::size_t>(1, spec.count / 3);
  auto tag = [&](std::vector<Instance> part, const std::string& family) {
    for (auto& inst : part) {
      inst.id = "stanley/" + inst.id;
      inst.params["family"] = family;
      out.push_back(std::move(inst));
    }
  };
  CorpusSpec star = spec;
  star.count = each;
  tag(gen_star_family(star), "star");

  CorpusSpec big = spec;
  big.count = each;
  big.seed = spec.seed + 1;
  big.n_min = std::max<std::size_t>(3, spec.n_min);
  big.s_min = std::max<std::size_t>(2, spec.s_min);
  big.s_max = std::max<std::size_t>(2, spec.s_max);
  tag(gen_bigsize_one(big), "bigsize1");

  CorpusSpec lex = spec;
  lex.n_min = 3;
  lex.n_max = std::min<std::size_t>(4, std::max<std::size_t>(3, spec.n_max));
  lex.d_min = 2;
  lex.d_max = 3;
  lex.exhaustive = true;
  lex.include_subcases = false;
  auto pool = gen_lexsegments(lex);
  std::mt19937_64 rng(spec.seed + 2);
  std::vector<Instance> picked;
  for (std::size_t i = 0; i < each && !pool.empty(); ++i) {
    const std::size_t at = draw(rng, 0, pool.size() - 1);
    picked.push_back(std::move(pool[at]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  std::sort(picked.begin(), picked.end(), [](const Instance& a, const Instance& b) { return a.id < b.id; });
  tag(std::move(picked), "lex");
  return out;
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::lex: return "lex";
    case Suite::star: return "star";
    case Suite::bigsize1: return "bigsize1";
    case Suite::bounds: return "bounds";
    case Suite::stanley: return "stanley";
    case Suite::modification: return "modification";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{Suite::lex, Suite::star, Suite::bigsize1, Suite::bounds, Suite::stanley, Suite::modification};
  return suites;
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  throw InvalidArgument("unknown suite '" + name + "' (expected lex, star, bigsize1, bounds, stanley or modification)");
}

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::violation: return "violation";
    case Status::indeterminate: return "indeterminate";
  }
  return "?";
}

CorpusSpec default_spec(Suite suite) {
  CorpusSpec s;
  s.suite = suite;
  switch (suite) {
    case Suite::lex:
      s.n_min = 3, s.n_max = 4, s.d_min = 2, s.d_max = 3;
      break;
    case Suite::star:
      s.n_min = 1, s.n_max = 6, s.s_min = 1, s.s_max = 4, s.max_exp = 2, s.max_gens = 20, s.count = 120;
      break;
    case Suite::bigsize1:
      s.n_min = 3, s.n_max = 5, s.s_min = 2, s.s_max = 4, s.max_exp = 2, s.max_gens = 20, s.count = 60;
      break;
    case Suite::bounds:
      s.n_min = 1, s.n_max = 4, s.max_gens = 5, s.max_exp = 3, s.count = 500;
      break;
    case Suite::stanley:
      s.n_min = 2, s.n_max = 5, s.s_min = 1, s.s_max = 3, s.max_exp = 2, s.max_gens = 16, s.count = 60;
      break;
    case Suite::modification:
      s.n_min = 2, s.n_max = 4, s.max_gens = 5, s.max_exp = 2, s.max_alpha = 3, s.count = 100;
      break;
  }
  return s;
}

json spec_to_json(const CorpusSpec& s) {
  return {{"suite", to_string(s.suite)}, {"n_min", s.n_min},       {"n_max", s.n_max},
          {"d_min", s.d_min},           {"d_max", s.d_max},       {"s_min", s.s_min},
          {"s_max", s.s_max},           {"max_gens", s.max_gens}, {"max_exp", s.max_exp},
          {"max_alpha", s.max_alpha},   {"seed", s.seed},         {"count", s.count},
          {"exhaustive", s.exhaustive}, {"include_subcases", s.include_subcases},
          {"worked_example", s.worked_example}, {"budget", s.budget}, {"box_cap", s.box_cap},
          {"characteristic", s.characteristic}};
}

CorpusSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("suite")) throw InvalidArgument("corpus spec needs a 'suite' field");
  CorpusSpec s = default_spec(parse_suite(j.at("suite").get<std::string>()));
  read_opt(j, "n_min", s.n_min);
  read_opt(j, "n_max", s.n_max);
  read_opt(j, "d_min", s.d_min);
  read_opt(j, "d_max", s.d_max);
  read_opt(j, "s_min", s.s_min);
  read_opt(j, "s_max", s.s_max);
  read_opt(j, "max_gens", s.max_gens);
  read_opt(j, "max_exp", s.max_exp);
  read_opt(j, "max_alpha", s.max_alpha);
  read_opt(j, "seed", s.seed);
  read_opt(j, "count", s.count);
  read_opt(j, "exhaustive", s.exhaustive);
  read_opt(j, "include_subcases", s.include_subcases);
  read_opt(j, "worked_example", s.worked_example);
  read_opt(j, "budget", s.budget);
  read_opt(j, "box_cap", s.box_cap);
  read_opt(j, "characteristic", s.characteristic);
  return s;
}

json instance_to_json(const Instance& instance) {
  return {{"id", instance.id}, {"ideal", ideal_to_json(instance.ideal)}, {"params", instance.params}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ideal")) throw InvalidArgument("instance needs an 'ideal' field");
  return {j.value("id", std::string("replay")), ideal_from_json(j.at("ideal")), j.value("params", json::object())};
}

json result_to_json(const CheckResult& r) {
  json j{{"instance", r.instance_id}, {"claim", r.claim}, {"status", to_string(r.status)},
         {"observed", r.observed}, {"expected", r.expected}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.payload) j["payload"] = *r.payload;
  return j;
}

bool SuiteReport::has_violation() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::violation; });
}

bool SuiteReport::has_indeterminate() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::indeterminate; });
}

Status SuiteReport::aggregate() const {
  if (has_violation()) return Status::violation;
  if (has_indeterminate()) return Status::indeterminate;
  return Status::pass;
}

std::vector<Instance> generate(const CorpusSpec& spec) {
  switch (spec.suite) {
    case Suite::lex: return gen_lexsegments(spec);
    case Suite::star: return gen_star_family(spec);
    case Suite::bigsize1: return gen_bigsize_one(spec);
    case Suite::bounds: return gen_random_ideals(spec, false);
    case Suite::stanley: return stanley_corpus(spec);
    case Suite::modification: return modification_corpus(spec);
  }
  return {};
}

SuiteReport run_suite(const CorpusSpec& spec) {
  SuiteReport report;
  report.spec = spec;
  const CheckOptions options{spec.budget, spec.box_cap, Field(spec.characteristic)};
  const auto instances = generate(spec);
  report.instances = instances.size();
  for (const auto& inst : instances) {
    for (auto& r : check_instance(spec.suite, inst, options)) {
      auto& tally = report.tallies[r.claim];
      switch (r.status) {
        case Status::pass: ++tally.pass; break;
        case Status::violation: ++tally.violation; break;
        case Status::indeterminate: ++tally.indeterminate; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

json report_to_json(const SuiteReport& report) {
  json tallies = json::object();
  for (const auto& [claim, t] : report.tallies)
    tallies[claim] = {{"pass", t.pass}, {"violation", t.violation}, {"indeterminate", t.indeterminate}};
  json results = json::array();
  for (const auto& r : report.results) results.push_back(result_to_json(r));
  return {{"schema_version", kReportSchemaVersion},
          {"suite", to_string(report.spec.suite)},
          {"spec", spec_to_json(report.spec)},
          {"instances", report.instances},
          {"aggregate", to_string(report.aggregate())},
          {"tallies", tallies},
          {"results", results}};
}

CheckResult replay(Suite suite, const json& payload, const std::string& claim, const CheckOptions& options) {
  const json& inst = payload.contains("instance") ? payload.at("instance") : payload;
  for (auto& r : check_instance(suite, instance_from_json(inst), options))
    if (r.claim == claim) return r;
  throw InvalidArgument("claim '" + claim + "' is not evaluated for this instance");
}

}  // namespace mideal::verify
