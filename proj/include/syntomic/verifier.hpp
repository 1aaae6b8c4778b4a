#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace syntomic {

struct VerifierResult {
    bool ok = false;
    std::vector<std::string> failures;
};

/// Re-checks a serialized vanishing certificate from scratch. Deliberately
/// independent of the producer: it reads only the JSON record and redoes
/// every exponent computation with its own integer arithmetic.
VerifierResult verify_certificate_json(const nlohmann::json& record);

}  // namespace syntomic
