#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mideal/decomp.hpp"
#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"
#include "mideal/sdepth.hpp"
#include "mideal/verify.hpp"

namespace mideal::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string inline_text;
  std::string file;
  std::string format = "table";
  std::uint32_t characteristic = Field::kDefault;
  std::string mode = "ideal";
  std::string cert_mode;
  std::string g;
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t box_cap = CharacteristicPoset::kDefaultBoxCap;
  std::string certificate_out;
  std::string method = "lcm";
  // lex
  std::size_t vars = 0;
  std::string u, v;
  // modify
  std::string alpha;
  bool worked_example = false;
  // verify
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::string spec_file;
  std::string report_file;
  std::string replay_file;
  std::string claim;
  bool emit_corpus = false;
  bool strict = false;
  // certify
  std::string certificate;
  std::optional<std::size_t> k;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

MonomialIdeal load_ideal(const Options& o) {
  if (!o.inline_text.empty()) return parse_ideal(o.inline_text);
  if (!o.file.empty()) return parse_ideal(read_file(o.file));
  throw InvalidArgument("an ideal is required (-i TEXT or -f FILE)");
}

std::vector<Exponent> parse_vector(std::string text, const char* what) {
  for (char& c : text)
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(text);
  std::vector<Exponent> out;
  long long x;
  while (in >> x) {
    if (x < 0 || x > 0xffffffffLL) throw InvalidArgument(std::string(what) + " entries must be non-negative 32-bit integers");
    out.push_back(static_cast<Exponent>(x));
  }
  if (!in.eof()) throw InvalidArgument(std::string("malformed ") + what + " '" + text + "'");
  return out;
}

std::optional<Monomial> parse_g(const Options& o, std::size_t n) {
  if (o.g.empty()) return std::nullopt;
  auto e = parse_vector(o.g, "--g");
  if (e.size() != n) throw InvalidArgument("--g needs " + std::to_string(n) + " entries");
  return Monomial(std::move(e));
}

std::string prime_string(const MonomialPrime& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.support.size(); ++i) s += (i ? ", x" : "x") + std::to_string(p.support[i] + 1);
  return s + ")";
}

std::string gens_string(const MonomialIdeal& ideal) {
  std::string s;
  for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? ", " : "") + to_string(ideal.gens()[i]);
  return s;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto ideal = load_ideal(o);
  const auto d = primary_decomposition(ideal);
  if (o.format == "json") {
    print_json(out, {{"ideal", ideal_to_json(ideal)}, {"components", decomposition_to_json(d)}});
    return kSuccess;
  }
  for (const auto& c : d.components) out << gens_string(c.ideal) << "    radical " << prime_string(c.radical) << "\n";
  return kSuccess;
}

int cmd_ass(const Options& o, std::ostream& out) {
  const auto ass = associated_primes(load_ideal(o));
  if (o.format == "json") {
    json j = json::array();
    for (const auto& p : ass) j.push_back(prime_to_json(p));
    print_json(out, {{"ass", j}});
    return kSuccess;
  }
  for (const auto& p : ass) out << prime_string(p) << "\n";
  return kSuccess;
}

int cmd_size(const Options& o, std::ostream& out) {
  const auto r = size_bigsize(load_ideal(o));
  if (o.format == "json") {
    print_json(out, {{"a", r.a}, {"a_every", r.a_every}, {"b", r.b}, {"size", r.size}, {"bigsize", r.bigsize}});
    return kSuccess;
  }
  out << "a=" << r.a << " b=" << r.b << " size=" << r.size << " bigsize=" << r.bigsize << "\n";
  return kSuccess;
}

int cmd_depth(const Options& o, std::ostream& out) {
  const auto ideal = load_ideal(o);
  const Field field(o.characteristic);
  const BettiTable t = o.method == "taylor" ? betti_taylor(ideal, field) : betti_lcm(ideal, field);
  if (o.format == "json") {
    print_json(out, betti_to_json(t));
    return kSuccess;
  }
  for (const auto& [key, beta] : t.entries)
    out << "beta_" << key.first << "  " << to_string(key.second) << "  " << beta << "\n";
  out << "pd=" << t.projective_dimension() << " depth_quotient=" << t.depth_quotient()
      << " depth_ideal=" << t.depth_ideal() << " char=" << t.characteristic << "\n";
  return kSuccess;
}

int cmd_sdepth(const Options& o, std::ostream& out, std::ostream& err) {
  const auto ideal = load_ideal(o);
  const PosetMode mode = parse_mode(o.mode);
  const CharacteristicPoset poset(ideal, mode, parse_g(o, ideal.num_vars()), o.box_cap);
  const auto r = stanley_depth(poset, o.budget);
  const auto cert = certificate_to_json(poset, r.certificate, r.lower_bound);
  if (!o.certificate_out.empty()) {
    std::ofstream f(o.certificate_out);
    if (!f) throw InvalidArgument("cannot write '" + o.certificate_out + "'");
    f << cert.dump(2) << "\n";
  }
  if (o.format == "json") {
    print_json(out, {{"mode", to_string(mode)},
                     {"value", r.exact ? json(r.lower_bound) : json(nullptr)},
                     {"lower_bound", r.lower_bound},
                     {"exact", r.exact},
                     {"nodes", r.nodes},
                     {"note", r.note},
                     {"certificate", cert}});
  } else {
    out << (r.exact ? "" : ">= ") << r.lower_bound << "\n";
    out << "certificate (" << to_string(mode) << " mode, k=" << r.lower_bound << ", "
        << r.certificate.intervals.size() << " intervals):\n";
    for (const auto& [b, c] : r.certificate.intervals) out << "  [" << to_string(b) << ", " << to_string(c) << "]\n";
  }
  if (!r.exact) {
    err << "indeterminate: " << r.note << "\n";
    return o.strict ? kIndeterminate : kSuccess;
  }
  return kSuccess;
}

int cmd_lex(const Options& o, std::ostream& out) {
  if (o.vars == 0 || o.u.empty() || o.v.empty()) throw InvalidArgument("lex needs --vars, --u and --v");
  const Monomial u = parse_monomial(o.u, o.vars), v = parse_monomial(o.v, o.vars);
  const MonomialIdeal ideal = lexsegment(Ring(o.vars), u.degree(), u, v);
  const auto cls = verify::classify_lexsegment(u, v);
  const auto sz = size_bigsize(ideal);
  const auto depth = depth_ideal(ideal, Field(o.characteristic));
  if (o.format == "json") {
    json j{{"ideal", ideal_to_json(ideal)}, {"case", verify::to_string(cls.kind)}, {"size", sz.size},
           {"depth_ideal", depth}, {"minimal_depth", depth == sz.size + 1}};
    if (cls.depth_ideal) j["case_depth_ideal"] = *cls.depth_ideal;
    if (cls.size) j["case_size"] = *cls.size;
    print_json(out, j);
    return kSuccess;
  }
  out << render_ideal(ideal) << "\n";
  out << "case=" << verify::to_string(cls.kind) << " size=" << sz.size << " depth_ideal=" << depth
      << " minimal_depth=" << (depth == sz.size + 1 ? "yes" : "no") << "\n";
  return kSuccess;
}

int cmd_modify(const Options& o, std::ostream& out) {
  MonomialIdeal ideal = MonomialIdeal::zero(Ring(1));
  std::optional<Alpha> alpha;
  std::vector<Monomial> listed;
  if (o.worked_example) {
    const auto ex = verify::modification_example();
    ideal = MonomialIdeal(Ring(ex.alpha.size()), ex.generators);
    alpha = ex.alpha;
    listed = ex.generators;
  } else {
    ideal = load_ideal(o);
    if (o.alpha.empty()) throw InvalidArgument("modify needs --alpha");
    alpha = Alpha(parse_vector(o.alpha, "--alpha"));
    listed = ideal.gens();
  }
  const auto images = substitute_powers(listed, *alpha);
  const auto modified = modify_trivial(ideal, *alpha);
  if (o.format == "json") {
    json im = json::array();
    for (const auto& m : images) im.push_back(to_string(m));
    print_json(out, {{"images", im}, {"ideal", ideal_to_json(modified)}});
    return kSuccess;
  }
  for (std::size_t i = 0; i < listed.size(); ++i) out << to_string(listed[i]) << " -> " << to_string(images[i]) << "\n";
  out << render_ideal(modified) << "\n";
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  verify::CorpusSpec spec;
  if (!o.spec_file.empty()) {
    spec = verify::spec_from_json(read_json_file(o.spec_file));
  } else if (!o.suite.empty()) {
    spec = verify::default_spec(verify::parse_suite(o.suite));
  } else if (o.worked_example) {
    spec = verify::default_spec(verify::Suite::modification);
  } else {
    throw InvalidArgument("verify needs --suite NAME or --spec FILE");
  }
  if (!o.suite.empty() && verify::parse_suite(o.suite) != spec.suite) throw InvalidArgument("--suite disagrees with --spec");
  if (o.worked_example) {
    if (spec.suite != verify::Suite::modification) throw InvalidArgument("--paper-example applies to the modification suite");
    spec.worked_example = true;
  }
  if (o.seed) spec.seed = *o.seed;
  if (o.count) spec.count = *o.count;
  spec.budget = o.budget;
  spec.characteristic = o.characteristic;
  Field(spec.characteristic);  // validates

  if (!o.replay_file.empty()) {
    if (o.claim.empty()) throw InvalidArgument("--replay needs --claim");
    const verify::CheckOptions opts{spec.budget, spec.box_cap, Field(spec.characteristic)};
    const auto r = verify::replay(spec.suite, read_json_file(o.replay_file), o.claim, opts);
    print_json(out, verify::result_to_json(r));
    if (r.status == verify::Status::violation) return kViolation;
    return r.status == verify::Status::indeterminate && o.strict ? kIndeterminate : kSuccess;
  }

  if (o.emit_corpus) {
    json j = json::array();
    for (const auto& inst : verify::generate(spec)) j.push_back(verify::instance_to_json(inst));
    print_json(out, {{"spec", verify::spec_to_json(spec)}, {"instances", j}});
    return kSuccess;
  }

  const auto report = verify::run_suite(spec);
  const json rj = verify::report_to_json(report);
  if (!o.report_file.empty()) {
    std::ofstream f(o.report_file);
    if (!f) throw InvalidArgument("cannot write '" + o.report_file + "'");
    f << rj.dump(2) << "\n";
  }
  if (o.format == "json") {
    print_json(out, rj);
  } else {
    out << "suite " << verify::to_string(spec.suite) << ": " << report.instances << " instances, seed " << spec.seed
        << ", char " << spec.characteristic << "\n";
    for (const auto& [claim, t] : report.tallies)
      out << "  " << claim << "  pass=" << t.pass << " violation=" << t.violation << " indeterminate=" << t.indeterminate << "\n";
    for (const auto& r : report.results)
      if (r.status != verify::Status::pass)
        out << "  " << verify::to_string(r.status) << ": " << r.instance_id << " " << r.claim << " (" << r.expected << ")"
            << (r.note.empty() ? "" : " " + r.note) << "\n";
    out << verify::to_string(report.aggregate()) << "\n";
  }
  if (report.has_violation()) return kViolation;
  if (report.has_indeterminate()) {
    err << "indeterminate results present\n";
    if (o.strict) return kIndeterminate;
  }
  return kSuccess;
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.certificate.empty()) throw InvalidArgument("certify needs --certificate FILE");
  const auto ideal = load_ideal(o);
  const std::size_t n = ideal.num_vars();
  const auto cert = certificate_from_json(read_json_file(o.certificate), n);
  PosetMode mode = cert.mode.value_or(PosetMode::ideal);
  if (!o.cert_mode.empty()) mode = parse_mode(o.cert_mode);
  std::optional<Monomial> g = parse_g(o, n);
  if (!g) g = cert.g;
  const std::size_t k = o.k.value_or(cert.k);
  const CharacteristicPoset poset(ideal, mode, g, o.box_cap);
  const auto check = check_certificate(poset, cert.partition, k);
  if (check.valid) {
    out << "valid: " << cert.partition.intervals.size() << " intervals, all values >= " << k << "\n";
    return kSuccess;
  }
  out << "invalid: " << check.reason;
  if (check.offending_point) out << " at " << to_string(*check.offending_point);
  out << "\n";
  return kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of monomial ideals and checks of minimal-depth and Stanley-depth statements", "mideal"};
  app.require_subcommand(1, 1);

  auto input = [&](CLI::App* sub) {
    auto* i = sub->add_option("-i,--inline", o.inline_text, "ideal text, '/' separates lines");
    auto* f = sub->add_option("-f,--file", o.file, "ideal file");
    i->excludes(f);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* decompose = app.add_subcommand("decompose", "irredundant primary decomposition");
  auto* ass = app.add_subcommand("ass", "associated primes");
  auto* size = app.add_subcommand("size", "size and bigsize");
  auto* depth = app.add_subcommand("depth", "multigraded Betti numbers and depth");
  auto* sdepth = app.add_subcommand("sdepth", "Stanley depth by exhaustive partition search");
  auto* lex = app.add_subcommand("lex", "lexsegment ideal L(u, v) and its depth case");
  auto* modify = app.add_subcommand("modify", "trivial modification x_i -> x_i^a_i");
  auto* ver = app.add_subcommand("verify", "run a theorem suite on a generated corpus");
  auto* certify = app.add_subcommand("certify", "check an interval-partition certificate");

  for (auto* sub : {decompose, ass, size, depth, sdepth, modify, certify}) input(sub);
  lex->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));
  ver->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

  for (auto* sub : {depth, lex, ver}) sub->add_option("--char", o.characteristic, "field characteristic, 0 for Q");
  depth->add_option("--method", o.method, "lcm (lattice) or taylor (oracle)")->check(CLI::IsMember({"lcm", "taylor"}));

  sdepth->add_option("--mode", o.mode, "ideal or quotient")->check(CLI::IsMember({"ideal", "quotient"}));
  certify->add_option("--mode", o.cert_mode, "overrides the certificate's mode")->check(CLI::IsMember({"ideal", "quotient"}));
  for (auto* sub : {sdepth, certify}) {
    sub->add_option("--g", o.g, "box corner, comma separated");
    sub->add_option("--box-cap", o.box_cap, "largest box searched");
  }
  for (auto* sub : {sdepth, ver}) {
    sub->add_option("--budget", o.budget, "search node budget per k");
    sub->add_flag("--strict", o.strict, "exit 3 when results are indeterminate");
  }
  sdepth->add_option("--certificate-out", o.certificate_out, "write the certificate as JSON");

  lex->add_option("--vars", o.vars, "number of variables")->required();
  lex->add_option("--u", o.u, "upper endpoint, e.g. x1*x4^3")->required();
  lex->add_option("--v", o.v, "lower endpoint, e.g. x2^4")->required();

  modify->add_option("--alpha", o.alpha, "exponents a_1,...,a_n");
  for (auto* sub : {modify, ver}) sub->add_flag("--paper-example", o.worked_example, "the seven-variable worked example");

  ver->add_option("--suite", o.suite, "lex, star, bigsize1, bounds, stanley or modification");
  ver->add_option("--seed", o.seed, "corpus seed");
  ver->add_option("--count", o.count, "instance count for sampled corpora");
  ver->add_option("--spec", o.spec_file, "corpus spec as JSON");
  ver->add_option("--report", o.report_file, "write the JSON report");
  ver->add_option("--replay", o.replay_file, "re-run one payload from a report");
  ver->add_option("--claim", o.claim, "claim to replay");
  ver->add_flag("--emit-corpus", o.emit_corpus, "print the generated instances instead of checking them");

  certify->add_option("--certificate", o.certificate, "certificate JSON")->required();
  certify->add_option("--k", o.k, "required value (defaults to the certificate's k)");

  std::vector<std::string> storage{"mideal"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (ass->parsed()) return cmd_ass(o, out);
    if (size->parsed()) return cmd_size(o, out);
    if (depth->parsed()) return cmd_depth(o, out);
    if (sdepth->parsed()) return cmd_sdepth(o, out, err);
    if (lex->parsed()) return cmd_lex(o, out);
    if (modify->parsed()) return cmd_modify(o, out);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (certify->parsed()) return cmd_certify(o, out);
  } catch (const mideal::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const mideal::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mideal::cli
