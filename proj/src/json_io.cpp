#include "sympharm/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "sympharm/parse.hpp"

namespace sympharm {

std::vector<PartRecord> part_records(const HarmonicDecomp& d) {
  std::vector<PartRecord> out;
  for (const auto& [j, h] : d.parts)
    out.push_back({*h.homogeneous_bidegree(), j, 0, "none", to_string(h)});
  return out;
}

std::vector<PartRecord> part_records(const SymplecticDecomp& d) {
  std::vector<PartRecord> out;
  const std::string op = d.orientation == Orientation::EdagOnHS ? "Edag" : "E";
  for (const auto& [t, h] : d.parts)
    out.push_back({*h.homogeneous_bidegree(), 0, t, t == 0 ? "none" : op, to_string(h)});
  return out;
}

std::vector<PartRecord> part_records(const FullDecomp& d) {
  std::vector<PartRecord> out;
  for (const auto& part : d.parts) {
    const std::string op = part.orientation == Orientation::EdagOnHS ? "Edag" : "E";
    out.push_back(
        {part.bd, part.j, part.t, part.t == 0 ? "none" : op, to_string(part.h)});
  }
  return out;
}

Json decomposition_json(const Context& ctx, const std::string& input_text,
                        const std::string& mode, const std::vector<PartRecord>& parts,
                        bool reassembly_ok) {
  Json j;
  j["context"] = Json{{"p", ctx.p}};
  j["input"] = input_text;
  j["mode"] = mode;
  Json arr = Json::array();
  for (const PartRecord& part : parts) {
    Json pj;
    pj["bidegree"] = Json::array({part.bd.a, part.bd.b});
    pj["r2_power"] = part.j;
    pj["op_power"] = part.t;
    pj["op"] = part.op;
    pj["component"] = part.component;
    arr.push_back(std::move(pj));
  }
  j["parts"] = std::move(arr);
  j["reassembly_ok"] = reassembly_ok;
  return j;
}

std::string decomposition_text(const Context& ctx, const std::string& input_text,
                               const std::string& mode, const std::vector<PartRecord>& parts,
                               bool reassembly_ok) {
  std::ostringstream os;
  os << "p: " << ctx.p << "\n";
  os << "input: " << input_text << "\n";
  os << "mode: " << mode << "\n";
  for (const PartRecord& part : parts) {
    os << "part bidegree=" << to_string(part.bd)
       << " r2_power=" << part.j << " op_power=" << part.t << " op=" << part.op
       << " component= " << part.component << "\n";
  }
  os << "reassembly_ok: " << (reassembly_ok ? "true" : "false") << "\n";
  return os.str();
}

Poly reassemble_parts(const Context& ctx, const std::vector<PartRecord>& parts) {
  Poly acc(ctx);
  Poly r2 = r2_poly(ctx);
  for (const PartRecord& part : parts) {
    Poly h = parse_poly(part.component, ctx);
    if (part.op == "Edag")
      for (int k = 0; k < part.t; ++k) h = OpExpr::edag().apply(h);
    else if (part.op == "E")
      for (int k = 0; k < part.t; ++k) h = OpExpr::e().apply(h);
    else if (part.t != 0)
      throw std::invalid_argument("part with op=none has nonzero op_power");
    for (int k = 0; k < part.j; ++k) h = h * r2;
    acc += h;
  }
  return acc;
}

std::pair<Poly, std::vector<PartRecord>> parse_decomposition(const Json& j) {
  Context ctx(j.at("context").at("p").get<int>());
  Poly input = parse_poly(j.at("input").get<std::string>(), ctx);
  std::vector<PartRecord> parts;
  for (const Json& pj : j.at("parts")) {
    PartRecord r;
    r.bd = Bidegree{pj.at("bidegree").at(0).get<int>(), pj.at("bidegree").at(1).get<int>()};
    r.j = pj.at("r2_power").get<int>();
    r.t = pj.at("op_power").get<int>();
    r.op = pj.at("op").get<std::string>();
    r.component = pj.at("component").get<std::string>();
    parts.push_back(std::move(r));
  }
  return {std::move(input), std::move(parts)};
}

Json dims_json(const std::vector<DimReport>& rows) {
  Json arr = Json::array();
  for (const DimReport& r : rows) {
    Json rj;
    rj["p"] = r.p;
    rj["bidegree"] = Json::array({r.bd.a, r.bd.b});
    rj["dim_H"] = r.dim_H.str();
    rj["dim_HS_formula"] = r.dim_HS_formula.str();
    rj["dim_HS_rank"] = r.dim_HS_rank.str();
    rj["dim_weyl"] = r.dim_weyl.str();
    rj["branching_sum"] = r.branching.str();
    rj["consistent"] = r.consistent();
    arr.push_back(std::move(rj));
  }
  Json out;
  out["rows"] = std::move(arr);
  return out;
}

std::string dims_table_text(const std::vector<DimReport>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(4) << "p" << std::setw(8) << "(a,b)" << std::right
     << std::setw(10) << "dim_H" << std::setw(10) << "dim_HS" << std::setw(10) << "rank"
     << std::setw(10) << "weyl" << std::setw(12) << "branching" << std::setw(6) << "ok"
     << "\n";
  for (const DimReport& r : rows) {
    os << std::left << std::setw(4) << r.p << std::setw(8) << to_string(r.bd) << std::right
       << std::setw(10) << r.dim_H.str() << std::setw(10) << r.dim_HS_formula.str()
       << std::setw(10) << r.dim_HS_rank.str() << std::setw(10) << r.dim_weyl.str()
       << std::setw(12) << r.branching.str() << std::setw(6)
       << (r.consistent() ? "yes" : "NO") << "\n";
  }
  return os.str();
}

}  // namespace sympharm
