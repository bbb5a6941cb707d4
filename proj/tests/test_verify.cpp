#include <doctest.h>

#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"
#include "mideal/verify.hpp"
#include "support.hpp"

using namespace mideal;
using namespace mideal::verify;
using testing::ideal;

namespace {

CorpusSpec small_lex() {
  CorpusSpec s = default_spec(Suite::lex);
  s.n_min = s.n_max = 3;
  s.d_min = s.d_max = 2;
  s.include_subcases = false;
  return s;
}

const CheckResult& find_claim(const std::vector<CheckResult>& rs, const std::string& claim) {
  for (const auto& r : rs)
    if (r.claim == claim) return r;
  FAIL("claim not evaluated: " << claim);
  return rs.front();
}

}  // namespace

TEST_CASE("seeded draws") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 200; ++i) {
    const auto x = draw(a, 3, 7);
    CHECK(x == draw(b, 3, 7));
    CHECK(x >= 3);
    CHECK(x <= 7);
  }
  CHECK(draw(a, 5, 5) == 5);
  CHECK_THROWS_AS(draw(a, 2, 1), InvalidArgument);
}

TEST_CASE("monomials of a degree in lex order") {
  const auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == Monomial{2, 0, 0});
  CHECK(m.back() == Monomial{0, 0, 2});
  for (std::size_t i = 1; i < m.size(); ++i) CHECK(lex_greater(m[i - 1], m[i]));
  CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("lexsegment corpus") {
  const auto corpus = gen_lexsegments(small_lex());
  CHECK(corpus.size() == 21);
  std::size_t principal = 0;
  for (const auto& inst : corpus) principal += inst.ideal.size() == 1;
  CHECK(principal == 6);

  const auto full = gen_lexsegments(default_spec(Suite::lex));
  const auto target = lexsegment(Ring(6), 4, Monomial{1, 0, 0, 3, 0, 0}, Monomial{0, 4, 0, 0, 0, 0});
  CHECK(std::any_of(full.begin(), full.end(), [&](const Instance& i) { return i.ideal == target; }));

  auto sampled = small_lex();
  sampled.n_min = sampled.n_max = 4;
  sampled.d_min = sampled.d_max = 3;
  sampled.exhaustive = false;
  sampled.count = 15;
  const auto a = gen_lexsegments(sampled), b = gen_lexsegments(sampled);
  CHECK(a.size() == 15);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(instance_to_json(a[i]) == instance_to_json(b[i]));

  auto bad = small_lex();
  bad.d_min = 1;
  CHECK_THROWS_AS(gen_lexsegments(bad), InvalidArgument);
}

TEST_CASE("pure power intersections") {
  const auto I = intersect_pure_powers(4, {{{0, 1}}, {{2, 3}}}, {{1, 1}, {1, 1}});
  CHECK(I == ideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
  CHECK(is_star_condition(associated_primes(I)));
  CHECK(intersect_pure_powers(3, {{{0}}, {{1}}, {{2}}}, {{1}, {1}, {1}}) == ideal(3, {{1, 1, 1}}));
  CHECK(is_star_condition(associated_primes(intersect_pure_powers(3, {{{0, 2}}, {{1, 2}}}, {{1, 1}, {1, 1}}))));
  CHECK_THROWS_AS(intersect_pure_powers(3, {{{0, 2}}}, {{1}}), InvalidArgument);
}

TEST_CASE("star family") {
  auto spec = default_spec(Suite::star);
  spec.count = 30;
  const auto corpus = gen_star_family(spec);
  CHECK(corpus.size() == 30);
  for (const auto& inst : corpus) {
    const auto ass = associated_primes(inst.ideal);
    CHECK(ass.size() == inst.params["s"].get<std::size_t>());
    CHECK(is_star_condition(ass));
    CHECK(size_bigsize(ass, inst.ideal.num_vars()).b == inst.ideal.num_vars());
    CHECK(inst.ideal.num_vars() <= 6);
  }
  const auto again = gen_star_family(spec);
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(instance_to_json(corpus[i]) == instance_to_json(again[i]));

  spec.s_min = spec.s_max = 5;
  spec.n_max = 4;
  CHECK_THROWS_AS(gen_star_family(spec), InvalidArgument);
}

TEST_CASE("bigsize-one family") {
  CHECK(size_bigsize(std::vector<MonomialPrime>{{{0, 1}}, {{1, 2}}}, 3).bigsize == 1);
  auto spec = default_spec(Suite::bigsize1);
  spec.count = 20;
  for (const auto& inst : gen_bigsize_one(spec)) {
    const auto ass = associated_primes(inst.ideal);
    CHECK(size_bigsize(ass, inst.ideal.num_vars()).bigsize == 1);
    for (const auto& p : ass) CHECK(p.height() < inst.ideal.num_vars());
  }
}

TEST_CASE("random ideal stream") {
  auto spec = default_spec(Suite::bounds);
  spec.count = 100;
  const auto corpus = gen_random_ideals(spec);
  CHECK(corpus.size() == 100);
  for (const auto& inst : corpus) {
    CHECK(inst.ideal.is_proper_nonzero());
    CHECK(inst.ideal.num_vars() <= 4);
    CHECK(inst.ideal.size() <= 5);
    for (const auto& g : inst.ideal.gens())
      for (const auto& h : inst.ideal.gens())
        if (!(g == h)) CHECK_FALSE(g.divides(h));
    for (const auto& g : inst.ideal.gens())
      for (auto e : g.exponents()) CHECK(e <= 3);
  }
  for (const auto& inst : gen_random_ideals(spec, true)) CHECK(inst.ideal.is_squarefree());
}

TEST_CASE("lexsegment case classification") {
  auto cls = classify_lexsegment(Monomial{1, 1, 0}, Monomial{1, 1, 0});
  CHECK(cls.kind == LexCase::principal);

  cls = classify_lexsegment(Monomial{2, 0, 0}, Monomial{0, 1, 1});
  CHECK(cls.kind == LexCase::depth_one);
  CHECK(cls.depth_ideal == 1u);
  CHECK(cls.size == 0u);

  cls = classify_lexsegment(Monomial{1, 0, 0, 3, 0, 0}, Monomial{0, 4, 0, 0, 0, 0});
  CHECK(cls.kind == LexCase::x2_power);
  CHECK(cls.l == 4);
  CHECK(cls.depth_ideal == 3u);
  CHECK(cls.size == 2u);

  cls = classify_lexsegment(Monomial{1, 0, 0, 0, 1}, Monomial{0, 1, 1, 0, 0});
  CHECK(cls.kind == LexCase::x2_power_xj);
  CHECK(cls.j == 3);
  CHECK(cls.depth_ideal == 3u);
  CHECK(cls.size == 2u);

  cls = classify_lexsegment(Monomial{1, 0, 0, 1}, Monomial{0, 0, 2, 0});
  CHECK(cls.kind == LexCase::remaining);
  CHECK(cls.depth_ideal == 2u);

  // v = x2 x4 with j = n falls outside the stated subcase bounds.
  CHECK(classify_lexsegment(Monomial{1, 0, 0, 1}, Monomial{0, 1, 0, 1}).kind == LexCase::edge);

  // Common x1 power divided out first.
  cls = classify_lexsegment(Monomial{2, 1, 0}, Monomial{1, 1, 1});
  CHECK(cls.stripped_degree == 1);
  CHECK(cls.kind == LexCase::depth_one);

  // Leading variable absent from both endpoints.
  cls = classify_lexsegment(Monomial{0, 1, 1}, Monomial{0, 0, 2});
  CHECK(cls.dropped_vars == 1);
  CHECK(cls.kind == LexCase::depth_one);
  CHECK(cls.depth_ideal == 2u);
  CHECK(cls.size == 1u);

  CHECK_THROWS_AS(classify_lexsegment(Monomial{0, 1, 1}, Monomial{1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(classify_lexsegment(Monomial{2, 0}, Monomial{1, 0}), InvalidArgument);
}

TEST_CASE("classified values match computed invariants") {
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t d = 2; d <= 3; ++d) {
      if (n == 5 && d == 3) continue;
      const auto mons = monomials_of_degree(n, d);
      for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = i; j < mons.size(); ++j) {
          const auto cls = classify_lexsegment(mons[i], mons[j]);
          if (!cls.depth_ideal) continue;
          const auto I = lexsegment(Ring(n), d, mons[i], mons[j]);
          CHECK(depth_ideal(I) == *cls.depth_ideal);
          CHECK(size_bigsize(I).size == *cls.size);
        }
    }
}

TEST_CASE("lex suite on n=3, d=2") {
  const auto report = run_suite(small_lex());
  CHECK(report.instances == 21);
  CHECK(report.aggregate() == Status::pass);
  CHECK(report.tallies.at("lex.minimal_depth").pass == 21);
}

TEST_CASE("star suite instance with two disjoint primes") {
  Instance inst{"star/manual", intersect_pure_powers(4, {{{0, 1}}, {{2, 3}}}, {{1, 1}, {1, 1}}),
                {{"n", 4}, {"s", 2}, {"primes", {{1, 2}, {3, 4}}}, {"exponents", {{1, 1}, {1, 1}}}}};
  const auto rs = check_instance(Suite::star, inst, CheckOptions{});
  const auto& dq = find_claim(rs, "star.depth_quotient");
  CHECK(dq.status == Status::pass);
  CHECK(dq.observed["depth_quotient"] == 1);
  for (const auto& r : rs) CHECK(r.status == Status::pass);
}

TEST_CASE("violations carry a replayable payload") {
  // Claim three components where there are two.
  Instance forged{"star/forged", intersect_pure_powers(4, {{{0, 1}}, {{2, 3}}}, {{1, 1}, {1, 1}}),
                  {{"n", 4}, {"s", 3}, {"primes", {{1, 2}, {3, 4}}}, {"exponents", {{1, 1}, {1, 1}}}}};
  const auto rs = check_instance(Suite::star, forged, CheckOptions{});
  const auto& bad = find_claim(rs, "star.depth_quotient");
  REQUIRE(bad.status == Status::violation);
  REQUIRE(bad.payload.has_value());
  const auto payload = nlohmann::json::parse(bad.payload->dump());
  const auto again = replay(Suite::star, payload, "star.depth_quotient", CheckOptions{});
  CHECK(again.status == Status::violation);
  CHECK(again.observed == bad.observed);
  CHECK_THROWS_AS(replay(Suite::star, payload, "no.such.claim", CheckOptions{}), InvalidArgument);
  CHECK(result_to_json(bad).contains("payload"));
}

TEST_CASE("search limits give indeterminate results with reasons") {
  auto spec = default_spec(Suite::bounds);
  spec.count = 20;
  spec.box_cap = 4;
  const auto report = run_suite(spec);
  CHECK_FALSE(report.has_violation());
  CHECK(report.has_indeterminate());
  CHECK(report.aggregate() == Status::indeterminate);
  for (const auto& r : report.results)
    if (r.status == Status::indeterminate) {
      CHECK_FALSE(r.note.empty());
      CHECK(r.payload.has_value());
    }
}

TEST_CASE("worked modification example") {
  const auto ex = modification_example();
  CHECK(substitute_powers(ex.generators, ex.alpha) == ex.expected_images);
  auto spec = default_spec(Suite::modification);
  spec.worked_example = true;
  const auto report = run_suite(spec);
  CHECK(report.instances == 1);
  CHECK(report.aggregate() == Status::pass);
}

TEST_CASE("modification corpus families") {
  auto spec = default_spec(Suite::modification);
  spec.count = 8;
  std::map<std::string, int> families;
  for (const auto& inst : generate(spec)) ++families[inst.params["family"].get<std::string>()];
  CHECK(families["alpha"] == 8);
  CHECK(families["bump"] == 4);
  CHECK(families["lex_shift"] == 2);
  CHECK(families["example"] == 1);
  CHECK(run_suite(spec).aggregate() == Status::pass);
}

TEST_CASE("report json is deterministic and versioned") {
  auto spec = default_spec(Suite::stanley);
  spec.count = 9;
  const auto a = report_to_json(run_suite(spec)).dump();
  const auto b = report_to_json(run_suite(spec)).dump();
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["suite"] == "stanley");
  CHECK(j["aggregate"] == "pass");
  CHECK(spec_from_json(j["spec"]).count == 9);
  CHECK(spec_to_json(spec_from_json(j["spec"])) == j["spec"]);
}

TEST_CASE("spec and instance json") {
  CHECK(parse_suite("bigsize1") == Suite::bigsize1);
  CHECK_THROWS_AS(parse_suite("nope"), InvalidArgument);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::object()), InvalidArgument);
  const auto s = spec_from_json(nlohmann::json::parse(R"({"suite":"star","seed":42})"));
  CHECK(s.seed == 42);
  CHECK(s.count == default_spec(Suite::star).count);
  const Instance inst{"x", ideal(2, {{1, 1}}), {{"k", 1}}};
  const auto back = instance_from_json(instance_to_json(inst));
  CHECK(back.id == "x");
  CHECK(back.ideal == inst.ideal);
  CHECK(back.params == inst.params);
  for (Suite suite : all_suites()) CHECK(parse_suite(to_string(suite)) == suite);
}
