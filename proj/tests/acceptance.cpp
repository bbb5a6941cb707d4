// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "mideal/decomp.hpp"
#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"
#include "mideal/sdepth.hpp"
#include "mideal/verify.hpp"

using namespace mideal;
using namespace mideal::verify;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failures;
}

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

ClaimTally tally(const SuiteReport& r, const std::string& claim) {
  auto it = r.tallies.find(claim);
  return it == r.tallies.end() ? ClaimTally{} : it->second;
}

std::string describe(const ClaimTally& t) {
  return std::to_string(t.pass) + " pass, " + std::to_string(t.violation) + " violation, " +
         std::to_string(t.indeterminate) + " indeterminate";
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run_cli(args, out, err);
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  CorpusSpec spec = default_spec(Suite::lex);
  spec.n_min = 3;
  spec.n_max = 4;
  spec.d_min = 2;
  spec.d_max = 3;
  spec.exhaustive = true;
  spec.include_subcases = false;
  const auto r = run_suite(spec);
  const auto t = tally(r, "lex.minimal_depth");
  // Every exhaustive pair gets a definite answer.
  const bool ok = r.instances > 0 && t.violation == 0 && t.indeterminate == 0 && t.pass == r.instances;
  report(1, ok, std::to_string(r.instances) + " lexsegments, depth_ideal = size + 1: " + describe(t) + ", " +
                    seconds_since(t0));
}

void criterion_2() {
  const auto anchor = lexsegment(Ring(6), 4, Monomial{1, 0, 0, 3, 0, 0}, Monomial{0, 4, 0, 0, 0, 0});
  const std::size_t anchor_depth = depth_ideal(anchor);
  const std::size_t anchor_size = size_bigsize(anchor).size;
  bool ok = anchor_depth == 3 && anchor_size == 2;

  std::size_t checked = 0;
  for (const auto& inst : gen_lexsegments(default_spec(Suite::lex))) {
    if (inst.params.value("family", "") != "subcase") continue;
    const std::size_t n = inst.ideal.num_vars();
    const auto cls = classify_lexsegment(monomial_from_json(inst.params["u"], n), monomial_from_json(inst.params["v"], n));
    if (cls.kind != LexCase::x2_power || cls.l < 4) continue;
    ++checked;
    if (depth_ideal(inst.ideal) != cls.l - 1 || size_bigsize(inst.ideal).size != cls.l - 2) ok = false;
  }
  ok = ok && checked > 0;
  report(2, ok, "n=6 u=x1*x4^3 v=x2^4: depth_ideal " + std::to_string(anchor_depth) + ", size " +
                    std::to_string(anchor_size) + "; " + std::to_string(checked) +
                    " constructed x2^d instances with depth l-1 and size l-2");
}

void criterion_3() {
  const auto spec = default_spec(Suite::star);
  const auto corpus = gen_star_family(spec);
  std::size_t depth_ok = 0, sd_pass = 0, sd_skipped = 0, sd_fail = 0;
  bool shape_ok = true;
  for (const auto& inst : corpus) {
    const std::size_t s = inst.params["s"].get<std::size_t>();
    if (s > 4 || inst.ideal.num_vars() > 6) shape_ok = false;
    const std::size_t dq = depth_quotient(inst.ideal);
    if (dq == s - 1) ++depth_ok;
    try {
      const CharacteristicPoset P(inst.ideal, PosetMode::quotient);
      const auto r = admits_partition(P, s - 1);
      if (r.status == SearchStatus::found && check_certificate(P, *r.partition, s - 1).valid)
        ++sd_pass;
      else if (r.status == SearchStatus::indeterminate)
        ++sd_skipped;
      else
        ++sd_fail;
    } catch (const CapExceeded&) {
      ++sd_skipped;
    }
  }
  const bool ok = shape_ok && corpus.size() >= 100 && depth_ok == corpus.size() && sd_fail == 0;
  report(3, ok, std::to_string(corpus.size()) + " star instances: depth_quotient = s-1 on " + std::to_string(depth_ok) +
                    "; sdepth_quotient >= s-1 certified on " + std::to_string(sd_pass) + ", " +
                    std::to_string(sd_fail) + " refuted, " + std::to_string(sd_skipped) + " beyond budget");
}

void criterion_4() {
  const auto corpus = gen_bigsize_one(default_spec(Suite::bigsize1));
  std::size_t good = 0;
  for (const auto& inst : corpus) {
    const auto sz = size_bigsize(inst.ideal);
    if (sz.bigsize == 1 && sz.size == 1 && depth_ideal(inst.ideal) == 2) ++good;
  }
  report(4, corpus.size() >= 50 && good == corpus.size(),
         std::to_string(corpus.size()) + " bigsize-one instances, size 1 and depth_ideal 2 on " + std::to_string(good));
}

void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = default_spec(Suite::bounds);
  const auto r = run_suite(spec);
  const auto ly = tally(r, "bounds.lyubeznik");
  const auto hpv = tally(r, "bounds.hpv");
  const bool shape = spec.n_max <= 4 && spec.max_gens <= 5 && spec.max_exp <= 3;
  const bool ok = shape && r.instances >= 500 && ly.pass == r.instances && hpv.violation == 0 && !r.has_violation();
  report(5, ok, std::to_string(r.instances) + " random ideals; depth bound: " + describe(ly) + "; sdepth bound: " +
                    describe(hpv) + ", " + seconds_since(t0));
}

void criterion_6() {
  const auto spec = default_spec(Suite::modification);
  const auto r = run_suite(spec);
  const auto eq = tally(r, "modification.sdepth_equal");
  const auto bump = tally(r, "modification.bump_sdepth_equal");
  const bool shape = spec.n_max <= 4 && spec.max_alpha <= 3;
  const bool ok = shape && eq.pass >= 100 && eq.violation == 0 && eq.indeterminate == 0 && bump.pass > 0 &&
                  bump.violation == 0 && bump.indeterminate == 0 && !r.has_violation();
  report(6, ok, "sdepth(I^alpha) = sdepth(I): " + describe(eq) + "; bump pairs: " + describe(bump));
}

void criterion_7() {
  const auto ex = modification_example();
  const auto images = substitute_powers(ex.generators, ex.alpha);
  const bool exact = images == ex.expected_images;
  const std::vector<Exponent> stated{2, 3, 6, 3, 7, 8, 2};
  const bool alpha_ok = std::equal(stated.begin(), stated.end(), ex.alpha.values().begin(), ex.alpha.values().end());
  const int code = cli({"verify", "--suite", "modification", "--paper-example"});
  report(7, exact && alpha_ok && code == 0,
         std::to_string(images.size()) + " generator images " + (exact ? "identical" : "differ") +
             ", verify --paper-example exit " + std::to_string(code));
}

void criterion_8() {
  CorpusSpec spec = default_spec(Suite::bounds);
  spec.n_min = 1;
  spec.n_max = 4;
  spec.max_gens = 6;
  spec.max_exp = 3;
  spec.count = 200;
  spec.seed = 8;
  const auto corpus = gen_random_ideals(spec);
  std::size_t equal = 0, audit_equal = 0, audited = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& I = corpus[i].ideal;
    if (betti_lcm(I) == betti_taylor(I)) ++equal;
    if (i < 20) {
      ++audited;
      if (betti_lcm(I, Field(0)) == betti_taylor(I, Field(0))) ++audit_equal;
    }
  }
  report(8, corpus.size() >= 200 && equal == corpus.size() && audit_equal == audited,
         std::to_string(equal) + "/" + std::to_string(corpus.size()) + " tables equal at char 32003, " +
             std::to_string(audit_equal) + "/" + std::to_string(audited) + " at char 0");
}

struct Answer {
  MonomialIdeal ideal;
  PosetMode mode;
  SdepthResult result;
};

std::vector<Answer> answers;

void criterion_9() {
  const std::size_t expected[] = {0, 0, 1, 2, 2};
  bool ok = true;
  std::string detail;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
    const MonomialIdeal m(Ring(n), gens);
    const auto r = sdepth_ideal(m);
    const CharacteristicPoset P(m, PosetMode::ideal);
    const bool cert = check_certificate(P, r.certificate, r.lower_bound).valid;
    const bool good = r.exact && r.value() == expected[n] && cert;
    ok = ok && good;
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " -> " +
              (r.value() ? std::to_string(*r.value()) : ">= " + std::to_string(r.lower_bound)) +
              (cert ? " (certified)" : " (certificate rejected)");
    answers.push_back({m, PosetMode::ideal, r});
  }
  report(9, ok, "sdepth of the maximal ideal: " + detail);
}

void criterion_10() {
  std::mt19937_64 rng(10);
  CorpusSpec spec = default_spec(Suite::bounds);
  spec.n_max = 3;
  spec.max_gens = 4;
  spec.max_exp = 2;
  spec.count = 30;
  spec.seed = 10;
  for (const auto& inst : gen_random_ideals(spec))
    for (auto mode : {PosetMode::ideal, PosetMode::quotient})
      answers.push_back({inst.ideal, mode, stanley_depth(CharacteristicPoset(inst.ideal, mode))});

  const auto dir = fs::temp_directory_path() / ("mideal_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto cert_path = (dir / "cert.json").string();
  auto certify = [&](const MonomialIdeal& I, const nlohmann::json& cert) {
    std::ofstream(cert_path) << cert.dump();
    return cli({"certify", "--certificate", cert_path, "-i", render_ideal(I)});
  };

  std::size_t accepted = 0, cli_accepted = 0, mutants = 0, rejected = 0, cli_rejected = 0;
  for (const auto& a : answers) {
    const CharacteristicPoset P(a.ideal, a.mode);
    const auto& part = a.result.certificate;
    const std::size_t k = a.result.lower_bound;
    if (check_certificate(P, part, k).valid) ++accepted;
    if (certify(a.ideal, certificate_to_json(P, part, k)) == cli::kSuccess) ++cli_accepted;

    std::vector<IntervalPartition> bad;
    if (!part.intervals.empty()) {
      auto removed = part;
      const auto idx = static_cast<std::ptrdiff_t>(rng() % removed.intervals.size());
      removed.intervals.erase(removed.intervals.begin() + idx);
      bad.push_back(removed);
      auto overlap = part;
      overlap.intervals.push_back(part.intervals[rng() % part.intervals.size()]);
      bad.push_back(overlap);
    }
    for (const auto& b : bad) {
      ++mutants;
      if (!check_certificate(P, b, k).valid) ++rejected;
      if (certify(a.ideal, certificate_to_json(P, b, k)) == cli::kViolation) ++cli_rejected;
    }
  }
  fs::remove_all(dir);
  const bool ok = accepted == answers.size() && cli_accepted == answers.size() && rejected == mutants &&
                  cli_rejected == mutants && mutants > 0;
  report(10, ok, std::to_string(accepted) + "/" + std::to_string(answers.size()) + " certificates valid (" +
                     std::to_string(cli_accepted) + " via certify); " + std::to_string(rejected) + "/" +
                     std::to_string(mutants) + " mutants rejected (" + std::to_string(cli_rejected) + " via certify)");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << " in "
            << seconds_since(t0) << std::endl;
  return failures == 0 ? 0 : 1;
}
