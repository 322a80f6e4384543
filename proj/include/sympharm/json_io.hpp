#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "sympharm/symplectic.hpp"

namespace sympharm {

using Json = nlohmann::ordered_json;

/// One serialized component: input == sum |z|^{2j} op^t(component).
struct PartRecord {
  Bidegree bd;
  int j = 0;           // power of |z|^2
  int t = 0;           // power of op
  std::string op;      // "Edag", "E" or "none"
  std::string component;
};

std::vector<PartRecord> part_records(const HarmonicDecomp& d);
std::vector<PartRecord> part_records(const SymplecticDecomp& d);
std::vector<PartRecord> part_records(const FullDecomp& d);

Json decomposition_json(const Context& ctx, const std::string& input_text,
                        const std::string& mode, const std::vector<PartRecord>& parts,
                        bool reassembly_ok);

std::string decomposition_text(const Context& ctx, const std::string& input_text,
                               const std::string& mode, const std::vector<PartRecord>& parts,
                               bool reassembly_ok);

/// Rebuilds sum |z|^{2j} op^t(component) from serialized parts.
Poly reassemble_parts(const Context& ctx, const std::vector<PartRecord>& parts);

/// Inverse of decomposition_json for round-trips: (input, parts).
std::pair<Poly, std::vector<PartRecord>> parse_decomposition(const Json& j);

Json dims_json(const std::vector<DimReport>& rows);
std::string dims_table_text(const std::vector<DimReport>& rows);

}  // namespace sympharm
