#pragma once

// JSON views of library results. Field order is fixed so equal inputs give
// byte-identical documents.

#include <json.hpp>

#include "gelfand/analysis.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/model.hpp"
#include "gelfand/rsk.hpp"
#include "gelfand/tableaux.hpp"

namespace gelfand {

using Json = nlohmann::ordered_json;

Json to_json(const GroupParams& params);
/// {order, coeffs}
Json to_json(const Cyclotomic& value);
/// {group, classes: [{rep, size, value}]}
Json to_json(const Character& chi);
Json to_json(const FerrersMulti& mu);
/// One array of rows per slot.
Json to_json(const MultiTableau& t);
Json to_json(const TableauPair& pq);
Json to_json(const RsReport& report);
/// Timings are left out on purpose.
Json to_json(const VerificationReport& report);

}  // namespace gelfand
