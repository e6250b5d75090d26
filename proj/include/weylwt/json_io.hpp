#pragma once

#include <json.hpp>

#include <optional>

#include "weylwt/induced.hpp"
#include "weylwt/localization.hpp"
#include "weylwt/modules.hpp"
#include "weylwt/quiver.hpp"

namespace weylwt {

using nlohmann::json;

// All from_json parsers throw std::invalid_argument naming the offending
// field.

json coord_to_json(const CoordValue& v);
CoordValue coord_from_json(const json& j);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json shift_to_json(const Shift& s);
Shift shift_from_json(const json& j);

json scalar_to_json(const Scalar& a);
Scalar scalar_from_json(const json& j);

json a0poly_to_json(const A0Poly& q);
A0Poly a0poly_from_json(const json& j);

json weyl_to_json(const WeylElement& a);
WeylElement weyl_from_json(const json& j);

json indexset_to_json(const IndexSet& s);
IndexSet indexset_from_json(const json& j);
// "{1,2}", "~{3}" (complement), or "all".
IndexSet indexset_from_string(const std::string& s);

json vector_to_json(const WeightVector& v);
WeightVector vector_from_json(const json& j);

// Flat module descriptor: a named construction with optional twist, dual
// and localization applied in that order.
struct ModuleDescriptor {
    std::string label;  // "B" | "N" | "Nprime" | "L"
    Weight base;
    std::set<Index> twist;
    bool dual = false;
    std::optional<IndexSet> localize_at;

    MonomialModule build() const;
};

json descriptor_to_json(const ModuleDescriptor& d);
ModuleDescriptor descriptor_from_json(const json& j);

// Realized per-coordinate data of a module, for reporting.
json module_realization_to_json(const MonomialModule& m);

json quiver_to_json(const std::set<Index>& E);

json localization_report_to_json(const LocalizationReport& rep);

}  // namespace weylwt
