#pragma once

#include <string>

#include "x0eis/qseries.hpp"

namespace x0eis {

// {"schema","level","truncation","disc","coeffs"} with each coefficient as
// four decimal strings [rat num, rat den, irr num, irr den]
std::string qexp_to_json(const QExpansion& s);
QExpansion qexp_from_json(const std::string& text);

} // namespace x0eis
