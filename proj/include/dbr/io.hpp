#ifndef DBR_IO_HPP
#define DBR_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dbr/fusion.hpp"

namespace dbr {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Jsonf, Csv };
OutputFormat parse_format(const std::string& name);

// Exact rationals are always emitted as numerator/denominator strings;
// no value ever passes through floating point.
Json rational_json(const Rational& r);

Json group_json(const FiniteGroup& g);
Json subgroups_json(const GroupPtr& g, bool classes_only);
Json basis_json(const SubgroupSystem& system);
Json element_json(const BurnsideElement& a);
Json ghost_json(const GhostElement& x);
Json mark_matrix_json(const SubgroupSystem& system);
Json equivariant_matrix_json(const EquivariantMatrix& m);
Json fusion_json(const FusionSystem& f);
Json idempotent_report_json(const IdempotentReport& rep, const FusionSystem& f,
                            bool saturated);
Json verdicts_json(const IdempotentVerdicts& v);
Json saturation_json(const SaturationResult& r, const FusionSystem& f);
Json stats_json(const SaturationStats& s, const FusionSystem& f);

// Deterministic human-readable label for a basis class: the Goursat
// shape of the representative.
std::string class_label(const PairContext& ctx, int cls);

// Fixed-width text table; first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);
std::string render_csv(const std::vector<std::vector<std::string>>& rows);

}  // namespace dbr

#endif
