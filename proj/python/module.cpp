#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympharm/json_io.hpp"
#include "sympharm/parse.hpp"
#include "sympharm/verify.hpp"

namespace py = pybind11;
using namespace sympharm;

namespace {

std::string decompose_json(int p, const std::string& mode, const std::string& input) {
  Context ctx(p);
  Poly f = parse_poly(input, ctx);
  BasisCache cache{ctx};
  std::vector<PartRecord> parts;
  if (mode == "symplectic") {
    parts = part_records(symplectic_decompose(f, cache));
  } else if (mode == "harmonic") {
    for (const auto& [bd, component] : bidegree_split(f))
      for (PartRecord& r : part_records(harmonic_decompose(component, cache)))
        parts.push_back(std::move(r));
  } else if (mode == "full") {
    parts = part_records(full_decompose(f, cache));
  } else {
    throw std::invalid_argument("mode must be harmonic, symplectic or full");
  }
  bool ok = reassemble_parts(ctx, parts) == f;
  return decomposition_json(ctx, to_string(f), mode, parts, ok).dump();
}

py::dict dims_dict(int p, int a, int b) {
  BasisCache cache{Context(p)};
  DimReport r = dims(cache, {a, b});
  py::dict d;
  d["p"] = r.p;
  d["bidegree"] = py::make_tuple(r.bd.a, r.bd.b);
  d["dim_H"] = std::stoll(r.dim_H.str());
  d["dim_HS_formula"] = std::stoll(r.dim_HS_formula.str());
  d["dim_HS_rank"] = std::stoll(r.dim_HS_rank.str());
  d["dim_weyl"] = std::stoll(r.dim_weyl.str());
  d["branching_sum"] = std::stoll(r.branching.str());
  d["consistent"] = r.consistent();
  return d;
}

std::vector<std::string> basis_strings(int p, int a, int b, const std::string& space) {
  Context ctx(p);
  Bidegree bd{a, b};
  GradedBasis basis = [&] {
    if (space == "H") return harmonic_basis(ctx, bd);
    if (space == "HS") return symplectic_harmonic_basis(ctx, bd, false);
    if (space == "HSdag") return symplectic_harmonic_basis(ctx, bd, true);
    throw std::invalid_argument("space must be H, HS or HSdag");
  }();
  std::vector<std::string> out;
  for (const Poly& e : basis.elements) out.push_back(to_string(e));
  return out;
}

std::string apply_op(int p, const std::string& op_text, const std::string& input) {
  Context ctx(p);
  return to_string(parse_op_expr(op_text).apply(parse_poly(input, ctx)));
}

py::tuple verify_suite(const std::string& suite, int p, int degree_cap) {
  auto reports = run_suites(suite, p, degree_cap);
  bool ok = true;
  std::ostringstream os;
  for (const SuiteReport& rep : reports) {
    ok = ok && rep.passed();
    os << "== suite " << rep.suite << "\n";
    for (const std::string& n : rep.notes) os << "   " << n << "\n";
    for (const CheckResult& c : rep.checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.pass && !c.detail.empty()) os << " - " << c.detail;
      os << "\n";
    }
  }
  return py::make_tuple(ok, os.str());
}

std::string fischer(int p, const std::string& f, const std::string& g) {
  Context ctx(p);
  return to_string(fischer_inner(parse_poly(f, ctx), parse_poly(g, ctx)));
}

std::string canonical(int p, const std::string& f) {
  Context ctx(p);
  return to_string(parse_poly(f, ctx));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact harmonic and symplectic Fischer decompositions on R^{4p} ~ C^{2p}";
  m.def("decompose_json", &decompose_json, py::arg("p"), py::arg("mode"), py::arg("input"),
        "Decompose a polynomial; returns the report as a JSON string.");
  m.def("dims", &dims_dict, py::arg("p"), py::arg("a"), py::arg("b"),
        "Dimension concordance for one bidegree.");
  m.def("basis", &basis_strings, py::arg("p"), py::arg("a"), py::arg("b"), py::arg("space"),
        "Basis of H, HS or HSdag at a bidegree, as polynomial strings.");
  m.def("apply_op", &apply_op, py::arg("p"), py::arg("op"), py::arg("input"),
        "Apply an operator expression such as 'Edag^2.E' to a polynomial.");
  m.def("verify", &verify_suite, py::arg("suite") = "all", py::arg("p") = 2,
        py::arg("degree_cap") = 6, "Run verification suites; returns (passed, report).");
  m.def("fischer_inner", &fischer, py::arg("p"), py::arg("f"), py::arg("g"),
        "Fischer inner product of two polynomials, as a scalar string.");
  m.def("canonical", &canonical, py::arg("p"), py::arg("poly"),
        "Canonical printed form of a polynomial.");
}
