#pragma once

#include <optional>

#include <json.hpp>

#include "pfh/groebner.hpp"
#include "pfh/pfaffian.hpp"
#include "pfh/series.hpp"

namespace pfh {

using Json = nlohmann::ordered_json;

/// {"n":..,"t":..,"hn":[ints],"multiplicity":"int-as-string","HN":[ints],
///  "betti":[{"N":..,"summands":[{"xdeg":..,"ydeg":..,"mult":"str"}]}]}
/// plus "series" when an ambient dimension is given. Coefficients that
/// may exceed 64 bits are decimal strings.
Json series_report_json(const ProblemShape& shape, std::optional<long> ambient_dim = {});

Json oracle_report_json(const OracleReport& report);

Json generators_json(const AlmostAlternatingMatrix& rho, const IdealGenerators& gens);

/// {"n":..,"t":..,"vars":["x1",..],"entries":[[[coeff per var],..],..]};
/// skew-symmetry of the X block is validated on load. Coefficients are
/// integers or "p/q" strings.
AlmostAlternatingMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const AlmostAlternatingMatrix& rho);

std::vector<std::string> default_var_names(int dim);

}  // namespace pfh
