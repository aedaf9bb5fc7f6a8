#pragma once

#include <json.hpp>

#include <functional>

#include "bpcat/fusion.hpp"
#include "bpcat/gring.hpp"
#include "bpcat/modular.hpp"
#include "bpcat/qseries.hpp"

namespace bpcat {

using json = nlohmann::json;

/// { "conductor": N, "coeffs": ["p/q", ...], "approx": [re, im] }
json to_json(const CycScalar& z);
CycScalar cyc_from_json(const json& j);

/// { label, p, weights, E, F }
json to_json(const WeightModule& m);

json to_json(const Report& r);
json to_json(const ExtLabel& l);
json to_json(const CatLabel& l);

/// { "lhs", "rhs", "summands": [{label, mult, braid_scalar, nilpotent}] }
json fusion_entry_json(const ExtLabel& a, const ExtLabel& b,
                       const std::vector<SummandScalar>& sc, int p);

/// { "index_set": [...], "entries": [[...]] }
json smatrix_json(const std::vector<SS>& idx,
                  const std::function<CycScalar(const SS&, const SS&)>& entry);

json structure_constants_json(int p, bool even0);

}  // namespace bpcat
