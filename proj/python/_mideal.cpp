// Thin bindings: ideals travel as text, structured results as JSON strings
// that the Python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mideal/decomp.hpp"
#include "mideal/errors.hpp"
#include "mideal/homology.hpp"
#include "mideal/io.hpp"
#include "mideal/sdepth.hpp"
#include "mideal/verify.hpp"

namespace py = pybind11;
using namespace mideal;
using nlohmann::json;

namespace {

std::string decompose(const std::string& text) {
  return decomposition_to_json(primary_decomposition(parse_ideal(text))).dump();
}

std::vector<std::vector<std::size_t>> ass(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : associated_primes(parse_ideal(text))) {
    std::vector<std::size_t> vars;
    for (auto v : p.support) vars.push_back(v + 1);
    out.push_back(std::move(vars));
  }
  return out;
}

std::string size(const std::string& text) {
  const auto r = size_bigsize(parse_ideal(text));
  return json{{"a", r.a}, {"b", r.b}, {"size", r.size}, {"bigsize", r.bigsize}}.dump();
}

std::string betti(const std::string& text, const std::string& method, std::uint32_t characteristic) {
  const auto I = parse_ideal(text);
  const Field f(characteristic);
  if (method == "lcm") return betti_to_json(betti_lcm(I, f)).dump();
  if (method == "taylor") return betti_to_json(betti_taylor(I, f)).dump();
  throw InvalidArgument("method must be lcm or taylor");
}

std::string sdepth(const std::string& text, const std::string& mode_name, std::uint64_t budget) {
  const auto I = parse_ideal(text);
  const auto mode = parse_mode(mode_name);
  const CharacteristicPoset P(I, mode);
  const auto r = stanley_depth(P, budget);
  json j{{"exact", r.exact}, {"lower_bound", r.lower_bound}, {"nodes", r.nodes},
         {"certificate", certificate_to_json(P, r.certificate, r.lower_bound)}};
  j["value"] = r.value() ? json(*r.value()) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

bool certify(const std::string& text, const std::string& certificate) {
  const auto I = parse_ideal(text);
  const auto cert = certificate_from_json(json::parse(certificate), I.num_vars());
  const CharacteristicPoset P(I, cert.mode.value_or(PosetMode::ideal), cert.g);
  return check_certificate(P, cert.partition, cert.k).valid;
}

std::string modify(const std::string& text, const std::vector<Exponent>& alpha) {
  return render_ideal(modify_trivial(parse_ideal(text), Alpha(alpha)));
}

std::string run_suite(const std::string& spec) {
  return verify::report_to_json(verify::run_suite(verify::spec_from_json(json::parse(spec)))).dump();
}

}  // namespace

PYBIND11_MODULE(_mideal, m) {
  static py::exception<Error> error(m, "MidealError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    } catch (const json::exception& e) {
      error(e.what());
    }
  });

  m.def("render", [](const std::string& text) { return render_ideal(parse_ideal(text)); });
  m.def("decompose", &decompose);
  m.def("ass", &ass);
  m.def("size", &size);
  m.def("betti", &betti, py::arg("text"), py::arg("method") = "lcm", py::arg("characteristic") = Field::kDefault);
  m.def("depth_quotient", [](const std::string& text, std::uint32_t c) { return depth_quotient(parse_ideal(text), Field(c)); },
        py::arg("text"), py::arg("characteristic") = Field::kDefault);
  m.def("sdepth", &sdepth, py::arg("text"), py::arg("mode") = "ideal", py::arg("budget") = kDefaultNodeBudget);
  m.def("certify", &certify);
  m.def("modify", &modify);
  m.def("run_suite", &run_suite);
}
