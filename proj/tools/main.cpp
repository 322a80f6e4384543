#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sympharm/json_io.hpp"
#include "sympharm/parse.hpp"
#include "sympharm/verify.hpp"

namespace {

using namespace sympharm;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  int p = 2;
  std::string mode = "full";
  std::string input;
  std::string suite = "all";
  int degree_cap = 6;
  std::string output = "text";
  std::string out_path;
};

void emit(const Options& opt, const std::string& body) {
  if (opt.out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream os(opt.out_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + opt.out_path);
  os << body;
}

int cmd_decompose(const Options& opt) {
  Context ctx(opt.p);
  Poly f = parse_poly(opt.input, ctx);
  std::string canonical = to_string(f);
  BasisCache cache{ctx};

  std::vector<PartRecord> parts;
  if (opt.mode == "symplectic") {
    parts = part_records(symplectic_decompose(f, cache));
  } else if (opt.mode == "harmonic") {
    std::vector<PartRecord> acc;
    for (const auto& [bd, component] : bidegree_split(f))
      for (PartRecord& r : part_records(harmonic_decompose(component, cache)))
        acc.push_back(std::move(r));
    std::sort(acc.begin(), acc.end(), [](const PartRecord& x, const PartRecord& y) {
      return std::tie(x.bd, x.j, x.t) < std::tie(y.bd, y.j, y.t);
    });
    parts = std::move(acc);
  } else {
    parts = part_records(full_decompose(f, cache));
  }
  bool ok = reassemble_parts(ctx, parts) == f;

  if (opt.output == "json")
    emit(opt, decomposition_json(ctx, canonical, opt.mode, parts, ok).dump(2) + "\n");
  else
    emit(opt, decomposition_text(ctx, canonical, opt.mode, parts, ok));
  return ok ? kExitOk : kExitVerifyFailure;
}

int cmd_basis(const Options& opt) {
  Context ctx(opt.p);
  Bidegree bd = parse_bidegree(opt.input);
  GradedBasis basis = [&] {
    if (opt.mode == "harmonic") return harmonic_basis(ctx, bd);
    if (opt.mode == "symplectic")
      return symplectic_harmonic_basis(ctx, bd, bd.a < bd.b);
    GradedBasis all{ctx, bd, "P", monomial_basis(ctx, bd), {}, {}};
    all.coords = CMatrix::identity(all.monomials.size());
    for (const Monomial& m : all.monomials)
      all.elements.push_back(Poly::term(ctx, m, GaussianRational(1)));
    return all;
  }();

  if (opt.output == "json") {
    Json j;
    j["context"] = Json{{"p", ctx.p}};
    j["bidegree"] = Json::array({bd.a, bd.b});
    j["space"] = basis.space;
    j["dimension"] = basis.dim();
    Json arr = Json::array();
    for (const Poly& e : basis.elements) arr.push_back(to_string(e));
    j["elements"] = std::move(arr);
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "space " << basis.space << to_string(bd) << " over p=" << ctx.p
       << ", dimension " << basis.dim() << "\n";
    for (const Poly& e : basis.elements) os << to_string(e) << "\n";
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_dims(const Options& opt) {
  Context ctx(opt.p);
  BasisCache cache{ctx};
  std::vector<DimReport> rows;
  for (int d = 0; d <= opt.degree_cap; ++d)
    for (int a = d; a >= 0; --a) rows.push_back(dims(cache, {a, d - a}));
  bool all_ok = true;
  for (const DimReport& r : rows) all_ok = all_ok && r.consistent();

  if (opt.output == "json") {
    Json j = dims_json(rows);
    j["context"] = Json{{"p", ctx.p}};
    j["consistent"] = all_ok;
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, dims_table_text(rows));
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(const Options& opt) {
  auto reports = run_suites(opt.suite, opt.p, opt.degree_cap);
  bool all_ok = true;
  size_t checks = 0;
  for (const SuiteReport& rep : reports) {
    all_ok = all_ok && rep.passed();
    checks += rep.checks.size();
  }

  if (opt.output == "json") {
    Json j;
    j["suite"] = opt.suite;
    j["p"] = opt.p;
    j["degree_cap"] = opt.degree_cap;
    Json arr = Json::array();
    for (const SuiteReport& rep : reports) {
      Json rj;
      rj["suite"] = rep.suite;
      rj["passed"] = rep.passed();
      Json cs = Json::array();
      for (const CheckResult& c : rep.checks)
        cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      rj["checks"] = std::move(cs);
      rj["notes"] = rep.notes;
      arr.push_back(std::move(rj));
    }
    j["reports"] = std::move(arr);
    j["passed"] = all_ok;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const SuiteReport& rep : reports) {
      os << "== suite " << rep.suite << "\n";
      for (const std::string& note : rep.notes) os << "   " << note << "\n";
      for (const CheckResult& c : rep.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) os << " - " << c.detail;
        os << "\n";
      }
    }
    os << (all_ok ? "OK" : "FAILED") << " (" << checks << " checks)\n";
    emit(opt, os.str());
  }
  return all_ok ? kExitOk : kExitVerifyFailure;
}

int cmd_apply(const Options& opt, const std::string& op_text) {
  Context ctx(opt.p);
  OpExpr op = parse_op_expr(op_text);
  Poly f = parse_poly(opt.input, ctx);
  Poly result = op.apply(f);
  if (opt.output == "json") {
    Json j;
    j["context"] = Json{{"p", ctx.p}};
    j["op"] = op_text;
    j["input"] = to_string(f);
    j["result"] = to_string(result);
    emit(opt, j.dump(2) + "\n");
  } else {
    emit(opt, to_string(result) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact harmonic and symplectic Fischer decompositions on R^{4p} ~ C^{2p}"};
  app.require_subcommand(1);

  Options opt;
  std::string op_text;

  auto add_common = [&](CLI::App* sub, bool with_cap) {
    sub->add_option("--p", opt.p, "quaternionic dimension p (variables z1..z2p)")
        ->check(CLI::Range(1, 16));
    if (with_cap)
      sub->add_option("--degree-cap", opt.degree_cap, "total-degree bound for sweeps")
          ->check(CLI::Range(0, 12));
    sub->add_option("--output", opt.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out_path, "write the report to a file");
  };

  CLI::App* dec = app.add_subcommand("decompose", "decompose a polynomial");
  dec->add_option("--mode", opt.mode, "harmonic | symplectic | full")
      ->check(CLI::IsMember({"harmonic", "symplectic", "full"}));
  dec->add_option("--input", opt.input, "polynomial (grammar: see README)")->required();
  add_common(dec, false);

  CLI::App* bas = app.add_subcommand("basis", "print a graded basis");
  bas->add_option("--mode", opt.mode,
                  "harmonic (H) | symplectic (HS or HSdag by orientation) | full (P)")
      ->check(CLI::IsMember({"harmonic", "symplectic", "full"}));
  bas->add_option("--input", opt.input, "bidegree \"a,b\"")->required();
  add_common(bas, false);

  CLI::App* dim = app.add_subcommand("dims", "dimension concordance table");
  add_common(dim, true);

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", opt.suite, "suite name or \"all\"")
      ->check(CLI::IsMember(sympharm::suite_names()));
  add_common(ver, true);

  CLI::App* apl = app.add_subcommand("apply", "apply an operator expression");
  apl->add_option("--op", op_text, "e.g. \"Edag^2.E\", \"Laplace\", \"T\"")->required();
  apl->add_option("--input", opt.input, "polynomial")->required();
  add_common(apl, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dec->parsed()) return cmd_decompose(opt);
    if (bas->parsed()) return cmd_basis(opt);
    if (dim->parsed()) return cmd_dims(opt);
    if (ver->parsed()) return cmd_verify(opt);
    if (apl->parsed()) return cmd_apply(opt, op_text);
  } catch (const sympharm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
