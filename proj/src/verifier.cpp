// Independent re-check of a serialized vanishing certificate. Nothing from
// the producer is used here: monomials are re-read from JSON and every
// exponent is recomputed with local checked integer arithmetic.
#include "syntomic/verifier.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace syntomic {

namespace {

using i64 = std::int64_t;

struct Overflow : std::runtime_error {
    Overflow() : std::runtime_error("integer overflow") {}
};

i64 mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
    return r;
}

i64 add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow();
    return r;
}

i64 power(i64 b, i64 e)
{
    i64 r = 1;
    for (i64 k = 0; k < e; ++k) r = mul(r, b);
    return r;
}

bool prime(i64 v)
{
    if (v < 2) return false;
    for (i64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

struct Mono {
    i64 e = 0, z = 0, twist = 0;
    bool dz = false;
    std::map<i64, i64> f;

    bool operator==(const Mono&) const = default;
};

Mono read(const nlohmann::json& j)
{
    Mono m;
    m.e = j.at("E").get<i64>();
    m.z = j.at("z").get<i64>();
    m.twist = j.at("twist").get<i64>();
    m.dz = j.at("dz").get<bool>();
    for (const auto& pair : j.at("f")) {
        const i64 u = pair.at(0).get<i64>(), ex = pair.at(1).get<i64>();
        if (ex != 0) m.f[u] += ex;
    }
    return m;
}

Mono zf(i64 z, i64 u, i64 twist)
{
    Mono m;
    m.z = z;
    m.f[u] = 1;
    m.twist = twist;
    return m;
}

// deg E = deg z = 1, deg f_u = n p^u.
i64 degree(const Mono& m, i64 p, i64 n)
{
    i64 d = add(m.e, m.z);
    for (auto [u, ex] : m.f) d = add(d, mul(ex, mul(n, power(p, u))));
    return d;
}

i64 credit(const Mono& m, i64 p)
{
    i64 s = 0;
    for (auto [u, ex] : m.f) s = add(s, mul(power(p, u), ex));
    return s;
}

}  // namespace

VerifierResult verify_certificate_json(const nlohmann::json& rec)
{
    VerifierResult res;
    auto check = [&](bool cond, const std::string& what) {
        if (!cond) res.failures.push_back(what);
    };

    try {
        const i64 p = rec.at("p").get<i64>();
        const i64 n = rec.at("n").get<i64>();
        if (!prime(p)) throw std::runtime_error("p is not prime");
        if (n < 2) throw std::runtime_error("n < 2");
        const i64 i = power(p, n - 1) - power(p, n - 2);
        const i64 in = mul(i, n);
        check(rec.at("weight").get<i64>() == i, "weight is not p^(n-1) - p^(n-2)");
        check(rec.at("truncation").get<i64>() == in, "truncation is not i*n");

        const Mono target = read(rec.at("target"));
        Mono expected_target;
        expected_target.z = power(p, n - 1);
        expected_target.twist = i;
        check(target == expected_target, "target is not z^(p^(n-1)) t^-i");

        // f_0 = z^n, applied once.
        const Mono rewritten = read(rec.at("target_rewritten"));
        Mono undone = rewritten;
        const i64 e0 = undone.f.count(0) ? undone.f[0] : 0;
        undone.f.erase(0);
        undone.z = add(undone.z, mul(e0, n));
        check(e0 == 1 && undone == target, "target_rewritten does not rewrite back to the target");

        const auto& steps = rec.at("steps");
        check(static_cast<i64>(steps.size()) == n - 1, "expected steps j = 0..n-2");

        std::optional<Mono> previous_phi;
        std::optional<i64> first_high;
        i64 last_phi_degree = -1;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto& s = steps[k];
            const i64 j = s.at("j").get<i64>();
            const std::string tag = "step " + std::to_string(j) + ": ";
            check(j == static_cast<i64>(k), tag + "out of order");
            check(j >= 0 && j <= n - 2, tag + "index out of range");

            const i64 lhs = power(p, n - 2 - j), rhs = n - 1 - j;
            const auto& side = s.at("side_conditions");
            check(side.at("power_lhs").get<i64>() == lhs && side.at("power_rhs").get<i64>() == rhs,
                  tag + "recorded side condition values are wrong");
            check(lhs >= rhs, tag + "p^(n-2-j) < n-1-j");

            const Mono el = read(s.at("element"));
            const i64 pj = power(p, j);
            const Mono want_free = zf(power(p, n - 2) - mul(n - j - 1, pj), j, i);
            Mono free_part = el;
            free_part.e = 0;
            check(free_part == want_free, tag + "element's E-free part is wrong");
            check(el.e == power(p, n - 1) - power(p, n - 2) - pj, tag + "element's E-power is wrong");
            check(el.e >= 0 && el.z >= 0, tag + "negative exponent");
            const i64 level_gap = i - credit(el, p);
            check(el.e == (level_gap > 0 ? level_gap : 0), tag + "element is not the Nygaard basis element of level i");

            // can: E -> z.
            Mono can = el;
            can.z = add(can.z, can.e);
            can.e = 0;
            const Mono can_img = read(s.at("can_image"));
            check(can == can_img, tag + "can image mismatch");
            check(can_img == zf(power(p, n - 1) - mul(n - j, pj), j, i), tag + "can image is not the displayed formula");

            // phi: E -> z^p (mod p), z -> z^p, f_u -> lambda_u f_(u+1), t^-1 -> t^-1 / phi(E).
            const i64 excess = el.e + credit(el, p) - i;
            check(excess >= 0, tag + "phi undefined below level i");
            Mono phi;
            phi.z = mul(p, add(excess, el.z));
            phi.twist = i;
            for (auto [u, ex] : el.f) phi.f[u + 1] = ex;
            const Mono phi_img = read(s.at("phi_image"));
            check(phi == phi_img, tag + "phi image mismatch");
            check(s.at("phi_unit").get<std::string>() == "lambda_" + std::to_string(j), tag + "phi unit is not lambda_j");

            const i64 cd = degree(can_img, p, n), pd = degree(phi_img, p, n);
            check(s.at("can_degree").get<i64>() == cd, tag + "recorded can degree is wrong");
            check(s.at("phi_degree").get<i64>() == pd, tag + "recorded phi degree is wrong");
            check(pd == add(mul(power(p, j + 1), lhs - rhs), mul(n, power(p, j + 1))), tag + "phi degree formula fails");
            check(pd > cd, tag + "chain does not ascend");

            if (k == 0) check(can_img == rewritten, "step 0's can image is not the rewritten target");
            if (previous_phi) check(*previous_phi == can_img, tag + "previous phi image does not match this can image");
            previous_phi = phi_img;
            if (!first_high && pd >= in) first_high = j;
            last_phi_degree = pd;
        }

        const auto& term = rec.at("termination");
        check(first_high.has_value(), "no step reaches F^(>= in)");
        if (first_high) {
            check(!term.is_null() && term.at("reason").get<std::string>() == "HIGH_FILTRATION", "termination reason missing");
            if (!term.is_null()) {
                check(term.at("step").get<i64>() == *first_high, "termination step is not the first high one");
                check(term.at("degree").get<i64>() >= in, "termination degree below the truncation");
            }
        }
        const i64 fdeg = mul(n, power(p, n - 1));
        check(rec.at("last_generator_degree").get<i64>() == fdeg, "f_(n-1) degree is not n p^(n-1)");
        check(fdeg >= in, "f_(n-1) lies below the truncation");
        check(last_phi_degree >= fdeg, "final phi image is below F^(n p^(n-1))");
        check(rec.at("verified").get<bool>(), "producer did not mark the certificate verified");
    } catch (const std::exception& e) {
        res.failures.push_back(std::string("malformed record: ") + e.what());
    }
    res.ok = res.failures.empty();
    return res;
}

}  // namespace syntomic
