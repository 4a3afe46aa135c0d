#pragma once

#include <vector>

#include "json.hpp"

#include "abelorb/anr.hpp"
#include "abelorb/chevalley.hpp"
#include "abelorb/normal_form.hpp"
#include "abelorb/orbits.hpp"

namespace abelorb {

using Json = nlohmann::ordered_json;

/// {"coeffs": [...], "eps": "e1-e4" | null}; coeffs follow `numbering`.
Json coeffs_json(const RootSystem& rs, const Coeffs& c, Numbering numbering);
Json root_json(const RootSystem& rs, int root, Numbering numbering);
/// Signed root code (see chevalley.hpp).
Json signed_root_json(const RootSystem& rs, int code, Numbering numbering);
Json root_set_json(const RootSystem& rs, const RootSet& s, Numbering numbering);

/// Cartan data and every positive root with index, height and length class.
Json roots_table_json(const RootSystem& rs, Numbering numbering);

Json ideals_json(const RootSystem& rs, const std::vector<RootSet>& ideals, Numbering numbering);

Json involution_json(const RootSystem& rs, const RootSet& orth_set, int length, int abs_length,
                     Numbering numbering);
Json orbit_record_json(const RootSystem& rs, const OrbitRecord& record, Numbering numbering);
Json orbit_table_json(const RootSystem& rs, const RootSet& ideal,
                      const std::vector<OrbitRecord>& records, Numbering numbering);

Json count_table_json(const RootSystem& rs, const CountTable& table, Numbering numbering);

/// Every N(a, b) != 0 over signed roots.
Json structure_table_json(const StructureTable& table, Numbering numbering);

Json conjecture_report_json(const RootSystem& rs, const ConjectureReport& report, Numbering numbering);

Json reduction_json(const RootSystem& rs, const IdealVector& input, const Reduction& reduction,
                    Side side, Numbering numbering);

}  // namespace abelorb
