#include "syntomic/certificate.hpp"

namespace syntomic {

nlohmann::json monomial_to_json(const Monomial& m)
{
    nlohmann::json f = nlohmann::json::array();
    for (auto [u, e] : m.fExp) f.push_back({u, e});
    return {{"E", m.ePow}, {"z", m.zPow}, {"f", f}, {"dz", m.nablaZ}, {"twist", m.twist}, {"text", m.to_string()}};
}

nlohmann::json certificate_to_json(const VanishingCertificate& c)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& w : c.steps) {
        steps.push_back({
            {"j", w.j},
            {"element", monomial_to_json(w.element)},
            {"can_image", monomial_to_json(w.can_image)},
            {"phi_image", monomial_to_json(w.phi_image)},
            {"phi_unit", "lambda_" + std::to_string(w.lambda_index)},
            {"can_degree", w.can_degree.value},
            {"phi_degree", w.phi_degree.value},
            {"side_conditions",
             {{"index_in_range", w.side.index_in_range},
              {"power_lhs", w.side.power_lhs},
              {"power_rhs", w.side.power_rhs},
              {"exponents_nonnegative", w.side.exponents_nonnegative},
              {"in_nygaard_level", w.side.in_nygaard_level}}},
        });
    }
    nlohmann::json out = {
        {"p", c.p},
        {"n", c.n},
        {"weight", c.weight},
        {"truncation", c.truncation.value},
        {"target", monomial_to_json(c.target)},
        {"target_rewritten", monomial_to_json(c.target_rewritten)},
        {"steps", steps},
        {"last_generator_degree", c.last_generator_degree.value},
        {"verified", c.verified},
    };
    if (c.termination_step >= 0)
        out["termination"] = {{"reason", "HIGH_FILTRATION"}, {"step", c.termination_step}, {"degree", c.termination_degree.value}};
    else
        out["termination"] = nullptr;
    if (!c.failure.empty()) out["failure"] = c.failure;
    return out;
}

}  // namespace syntomic
