#pragma once

#include <json.hpp>

#include "syntomic/zpn_square.hpp"

namespace syntomic {

nlohmann::json monomial_to_json(const Monomial& m);

/// Self-contained record of a vanishing certificate: every monomial,
/// exponent, side-condition evaluation and the termination reason.
nlohmann::json certificate_to_json(const VanishingCertificate& c);

}  // namespace syntomic
