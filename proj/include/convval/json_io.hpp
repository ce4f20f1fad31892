#ifndef CONVVAL_JSON_IO_HPP_
#define CONVVAL_JSON_IO_HPP_

#include <json.hpp>

#include "convval/classifier.hpp"
#include "convval/harness.hpp"
#include "convval/measures.hpp"

namespace convval {

using nlohmann::json;

// Polytope files: {"n": 3, "vertices": [[0,"1/2","0.25"], ...]}; coordinates
// may be numbers, decimal strings or "p/q" strings.
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

json measure_to_json(const AtomicSphereMeasure& m);

json zeta_to_json(const ZetaSpec& z);
ZetaSpec zeta_from_json(const json& j);

json valuation_spec_to_json(const ValuationSpec& s);
ValuationSpec valuation_spec_from_json(const json& j);

// Black-box oracles as composition trees over the built-in families:
// {"scope":"P_o","terms":[{"kind":"zeta","zeta":{...}},
//                         {"kind":"projection","coeff":2}, ...]}.
BlackBoxValuation oracle_from_json(const json& j);

json fit_report_to_json(const FitReport& r);
json property_report_to_json(const PropertyReport& r);

// Rejects unknown keys; every parser here goes through this.
void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* what);

}  // namespace convval

#endif  // CONVVAL_JSON_IO_HPP_
