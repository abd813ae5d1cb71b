#ifndef LOOPDEC_SERIALIZE_HPP
#define LOOPDEC_SERIALIZE_HPP

#include <json.hpp>

#include "loopdec/series.hpp"

namespace loopdec {

/* Integers ride as JSON numbers while they fit in 64 bits and as decimal
 * strings beyond, so large coefficients survive the round trip exactly. */
nlohmann::json json_from_int(const Int& v);

/* Accepts either encoding; anything else is an invalid_argument. */
Int int_from_json(const nlohmann::json& j);

/* {"cutoff": N, "coeffs": {"0": c0, "3": c3, ...}} with zero coefficients
 * omitted. Degree keys are strings because JSON object keys must be. */
nlohmann::json json_from_series(const TruncatedSeries& s);

TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace loopdec

#endif
