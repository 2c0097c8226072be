#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logbehave/model.hpp"

namespace logbehave {

/// Looks up a built-in sequence by name. Parameterized families take their
/// parameters in order (e_k/c_k/sec_struct*: one integer; gegenbauer and
/// gegenbauer_deriv: nu, t; chebyshev_u/legendre/laguerre: t).
CatalogEntry catalog_get(const std::string& name,
                         const std::vector<Rat>& parameters = {});

/// All catalog names with their reference anchors, for `catalog list`.
std::vector<std::pair<std::string, std::string>> catalog_names();

/// True if the name needs parameters.
bool catalog_is_parameterized(const std::string& name);

}  // namespace logbehave
