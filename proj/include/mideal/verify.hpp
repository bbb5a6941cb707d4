#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "mideal/decomp.hpp"
#include "mideal/ideal.hpp"
#include "mideal/linalg.hpp"
#include "mideal/sdepth.hpp"

namespace mideal::verify {

inline constexpr int kReportSchemaVersion = 1;

enum class Suite { lex, star, bigsize1, bounds, stanley, modification };

std::string to_string(Suite suite);
Suite parse_suite(const std::string& name);
const std::vector<Suite>& all_suites();

/// Parameters of a generated corpus. The same spec always yields the same
/// instance stream.
struct CorpusSpec {
  Suite suite = Suite::bounds;
  std::size_t n_min = 2;
  std::size_t n_max = 4;
  std::size_t d_min = 2;           ///< lexsegment degrees
  std::size_t d_max = 3;
  std::size_t s_min = 1;           ///< number of associated primes (star, bigsize1)
  std::size_t s_max = 4;
  std::size_t max_gens = 5;        ///< generator cap for random ideals
  Exponent max_exp = 3;
  Exponent max_alpha = 3;
  std::uint64_t seed = 1;
  std::size_t count = 100;         ///< instance cap for sampled streams
  bool exhaustive = true;          ///< lex: all pairs u >= v instead of a sample
  bool include_subcases = true;    ///< lex: constructed boundary subcases
  bool worked_example = false;     ///< modification: only the worked example
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t box_cap = CharacteristicPoset::kDefaultBoxCap;
  std::uint32_t characteristic = Field::kDefault;
};

/// Defaults sized to the acceptance corpora of each suite.
CorpusSpec default_spec(Suite suite);

nlohmann::json spec_to_json(const CorpusSpec& spec);
CorpusSpec spec_from_json(const nlohmann::json& j);

/// One generated ideal plus the suite-specific construction data needed to
/// re-check it (lexsegment endpoints, number of components, alpha, ...).
struct Instance {
  std::string id;
  MonomialIdeal ideal;
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Generators

/// Seeded draw in [lo, hi], independent of the standard library's distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// All degree-d monomials in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d);

std::vector<Instance> gen_lexsegments(const CorpusSpec& spec);

/// Intersection of the irreducible ideals (x_j^{e_ij} : j in P_i).
MonomialIdeal intersect_pure_powers(std::size_t n, const std::vector<MonomialPrime>& primes,
                                    const std::vector<std::vector<Exponent>>& exponents);

/// Primes each owning a private variable; every variable is used so the sum of
/// the primes is the maximal ideal.
std::vector<Instance> gen_star_family(const CorpusSpec& spec);
std::vector<Instance> gen_random_ideals(const CorpusSpec& spec, bool squarefree = false);
/// Ass sets where every two primes span all variables but no single one does.
std::vector<Instance> gen_bigsize_one(const CorpusSpec& spec);

// ---------------------------------------------------------------------------
// Lexsegment case analysis

enum class LexCase { principal, degree_one, depth_one, x2_power, x2_power_xj, remaining, edge };
std::string to_string(LexCase c);

/// Where a lexsegment ideal falls in the minimal-depth case analysis, with the
/// depth and size that analysis predicts (when it predicts them).
struct LexClassification {
  LexCase kind = LexCase::edge;
  std::size_t dropped_vars = 0;    ///< leading variables absent from u
  std::size_t stripped_degree = 0; ///< common power of the first variable divided out
  std::size_t l = 0;               ///< u = x1 * x_l^... in the reduced ring (1-based)
  std::size_t j = 0;               ///< v = x2^{d-1} x_j in the reduced ring (1-based)
  std::optional<std::size_t> depth_ideal;
  std::optional<std::size_t> size;
};

LexClassification classify_lexsegment(const Monomial& u, const Monomial& v);

// ---------------------------------------------------------------------------
// Checks and reports

enum class Status { pass, violation, indeterminate };
std::string to_string(Status status);

struct CheckResult {
  std::string instance_id;
  std::string claim;
  Status status = Status::pass;
  nlohmann::json observed = nlohmann::json::object();
  std::string expected;
  std::string note;
  /// Serialized instance; always present for violations and indeterminates.
  std::optional<nlohmann::json> payload;
};

nlohmann::json result_to_json(const CheckResult& r);

struct CheckOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t box_cap = CharacteristicPoset::kDefaultBoxCap;
  Field field;
};

/// Every claim of the suite evaluated on one instance.
std::vector<CheckResult> check_instance(Suite suite, const Instance& instance, const CheckOptions& options);

struct ClaimTally {
  std::size_t pass = 0;
  std::size_t violation = 0;
  std::size_t indeterminate = 0;
};

struct SuiteReport {
  CorpusSpec spec;
  std::size_t instances = 0;
  std::vector<CheckResult> results;
  std::map<std::string, ClaimTally> tallies;

  bool has_violation() const;
  bool has_indeterminate() const;
  Status aggregate() const;
};

std::vector<Instance> generate(const CorpusSpec& spec);
SuiteReport run_suite(const CorpusSpec& spec);

nlohmann::json report_to_json(const SuiteReport& report);

/// Re-runs the claim recorded in a violation (or any) payload.
CheckResult replay(Suite suite, const nlohmann::json& payload, const std::string& claim, const CheckOptions& options);

// ---------------------------------------------------------------------------
// Worked trivial-modification example in seven variables

struct ModificationExample {
  std::vector<Monomial> generators;         ///< as listed, including one redundant generator
  Alpha alpha;
  std::vector<Monomial> expected_images;    ///< listed images, same order
};

ModificationExample modification_example();

}  // namespace mideal::verify
