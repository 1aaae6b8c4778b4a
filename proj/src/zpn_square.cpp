#include "syntomic/zpn_square.hpp"

#include <algorithm>

namespace syntomic {

namespace {

void require_n(std::uint32_t p, std::uint32_t n)
{
    if (!is_prime(p)) throw Error("p is not prime");
    if (n < 2) throw Error("n must be at least 2");
}

Monomial z_f(std::int64_t zPow, std::int64_t u, std::int64_t twist)
{
    Monomial m;
    m.zPow = zPow;
    m.set_f(u, 1);
    m.twist = twist;
    return m;
}

}  // namespace

FDegree nygaard_truncation_bound(std::uint32_t p, std::uint32_t n, std::int64_t i)
{
    if (!is_prime(p)) throw Error("p is not prime");
    if (n < 1) throw Error("n must be positive");
    if (i < 1) throw Error("weight must be positive");
    return {i * static_cast<std::int64_t>(n)};
}

std::int64_t telescoping_weight(std::uint32_t p, std::uint32_t n)
{
    require_n(p, n);
    return ipow(p, n - 1) - ipow(p, n - 2);
}

Monomial v1_power_partial_representative(std::uint32_t p, std::uint32_t n)
{
    Monomial m;
    m.zPow = ipow(p, n - 1);
    m.twist = telescoping_weight(p, n);
    return m;
}

Monomial v1_power_partial_by_action(std::uint32_t p, std::uint32_t n)
{
    require_n(p, n);
    Monomial v1;
    v1.zPow = p;
    v1.twist = p - 1;
    Monomial m;  // 1, the representative of ∂
    for (std::int64_t k = 0; k < ipow(p, n - 2); ++k) m = m * v1;
    return m;
}

Monomial apply_can(const Monomial& m)
{
    Monomial r = m;
    r.zPow += r.ePow;
    r.ePow = 0;
    return r;
}

PhiImage apply_phi(const Monomial& m, std::uint32_t p)
{
    if (m.nablaZ) throw Error("apply_phi acts on the untwisted column");
    const std::int64_t excess = m.ePow + m.nygaard_weight(p) - m.twist;
    if (excess < 0) throw Error("element is not in Nygaard level " + std::to_string(m.twist) + ": " + m.to_string());
    PhiImage out;
    out.monomial.zPow = static_cast<std::int64_t>(p) * (excess + m.zPow);
    out.monomial.twist = m.twist;
    for (auto [u, e] : m.fExp) {
        out.monomial.set_f(u + 1, e);
        out.lambda[u] = e;
    }
    return out;
}

StepWitness telescoping_step(std::uint32_t p, std::uint32_t n, std::int64_t j)
{
    require_n(p, n);
    const auto ctx = PrimeContext::quotient(p, n);
    const std::int64_t N = n;
    const std::int64_t i = telescoping_weight(p, n);
    StepWitness w;
    w.j = j;
    w.side.index_in_range = j >= 0 && j <= N - 2;
    if (!w.side.index_in_range) throw Error("step index out of range: j = " + std::to_string(j));
    w.side.power_lhs = ipow(p, N - 2 - j);
    w.side.power_rhs = N - 1 - j;
    if (w.side.power_lhs < w.side.power_rhs)
        throw Error("side condition p^(n-2-j) >= n-1-j fails at j = " + std::to_string(j));

    const std::int64_t pj = ipow(p, j), pj1 = ipow(p, j + 1);
    const std::int64_t ePow = ipow(p, N - 1) - ipow(p, N - 2) - pj;
    const std::int64_t zPow = ipow(p, N - 2) - (N - j - 1) * pj;
    w.side.exponents_nonnegative = ePow >= 0 && zPow >= 0;
    if (!w.side.exponents_nonnegative) throw Error("negative exponent in step " + std::to_string(j));

    Monomial free_part = z_f(zPow, j, i);
    w.side.in_nygaard_level = nygaard_E_power(i, free_part, p) == ePow;
    w.element = free_part;
    w.element.ePow = ePow;

    w.can_image = z_f(ipow(p, N - 1) - (N - j) * pj, j, i);
    w.phi_image = z_f(ipow(p, N - 1) - (N - j - 1) * pj1, j + 1, i);
    w.lambda_index = j;

    w.can_matches = apply_can(w.element) == w.can_image;
    const auto phi = apply_phi(w.element, p);
    w.phi_matches = phi.monomial == w.phi_image && phi.lambda == std::map<std::int64_t, std::int64_t>{{j, 1}};

    w.can_degree = f_degree(w.can_image, ctx);
    w.phi_degree = f_degree(w.phi_image, ctx);
    w.phi_degree_matches = w.phi_degree.value == pj1 * (w.side.power_lhs - w.side.power_rhs) + N * pj1;
    return w;
}

VanishingCertificate certify_vanishing(std::uint32_t p, std::uint32_t n)
{
    require_n(p, n);
    const auto ctx = PrimeContext::quotient(p, n);
    const std::int64_t N = n;
    VanishingCertificate c;
    c.p = p;
    c.n = n;
    c.weight = telescoping_weight(p, n);
    c.truncation = nygaard_truncation_bound(p, n, c.weight);
    c.target = v1_power_partial_representative(p, n);
    c.target_rewritten = z_f(ipow(p, N - 1) - N, 0, c.weight);

    auto fail = [&](const std::string& why) {
        c.verified = false;
        c.failure = why;
        return c;
    };

    if (c.target != v1_power_partial_by_action(p, n))
        return fail("v1-action and substitution disagree on the target");

    // One f_0 = z^n rewrite takes the target to step 0's can image.
    Monomial f0 = z_f(0, 0, 0);
    Monomial zn;
    zn.zPow = N;
    if (f_degree(zn, ctx) != f_degree(f0, ctx)) return fail("f_0 = z^n is not degree preserving");
    Monomial back = c.target_rewritten;
    back.fExp.clear();
    back.zPow += N;
    if (back != c.target) return fail("target rewriting does not invert");

    for (std::int64_t j = 0; j <= N - 2; ++j) {
        StepWitness w;
        try {
            w = telescoping_step(p, n, j);
        } catch (const Error& e) {
            return fail(e.what());
        }
        if (!w.ok()) return fail("step " + std::to_string(j) + " failed its checks");
        if (w.phi_degree <= w.can_degree) return fail("step " + std::to_string(j) + " does not ascend");
        c.steps.push_back(w);
    }

    if (c.steps.front().can_image != c.target_rewritten) return fail("target is not step 0's can image");
    for (std::size_t k = 0; k + 1 < c.steps.size(); ++k)
        if (c.steps[k].phi_image != c.steps[k + 1].can_image)
            return fail("step " + std::to_string(k) + " phi image does not feed step " + std::to_string(k + 1));

    for (const auto& w : c.steps)
        if (w.phi_degree >= c.truncation) {
            c.termination_step = w.j;
            c.termination_degree = w.phi_degree;
            break;
        }
    if (c.termination_step < 0) return fail("no step reaches the truncation");

    // The last step leaves lambda * f_(n-1) * (...), which lies in F^(>= n p^(n-1)).
    c.last_generator_degree = f_degree(z_f(0, N - 1, 0), ctx);
    if (c.last_generator_degree.value != N * ipow(p, N - 1)) return fail("f_(n-1) has unexpected degree");
    if (c.steps.back().phi_degree < c.last_generator_degree) return fail("final discarded term below F^(n p^(n-1))");
    if (c.last_generator_degree < c.truncation) return fail("f_(n-1) lies below the truncation");

    c.verified = true;
    return c;
}

bool sample_chain_membership(const VanishingCertificate& cert, std::mt19937_64& rng)
{
    if (!cert.verified) throw Error("sampling needs a verified certificate");
    const std::uint32_t p = cert.p;
    const std::int64_t N = cert.n;
    const std::int64_t in = cert.truncation.value;

    // Block j holds the rows z^c f_j with c + n p^j < in.
    std::vector<std::vector<std::uint64_t>> residual(N);
    std::vector<std::int64_t> A(N);
    for (std::int64_t j = 0; j < N; ++j) {
        const std::int64_t rows = std::max<std::int64_t>(in - N * ipow(p, j), 0);
        residual[j].assign(static_cast<std::size_t>(rows), 0);
        A[j] = ipow(p, N - 1) - (N - j) * ipow(p, j);
    }
    if (A[0] < static_cast<std::int64_t>(residual[0].size())) residual[0][A[0]] = 1;

    std::vector<std::uint64_t> lambda;
    for (std::int64_t j = 0; j < N; ++j) {
        auto& R = residual[j];
        for (auto& v : R) v %= p;
        for (std::int64_t c = 0; c < std::min<std::int64_t>(A[j], R.size()); ++c)
            if (R[c] != 0) return false;
        if (j + 1 >= N || residual[j + 1].empty()) continue;

        // Clearing z^c f_j with u x_j z^(c - A_j) pushes u lambda_j(z) z^(A_(j+1) + p(c - A_j)) into block j+1.
        auto& next = residual[j + 1];
        const std::size_t len = next.size();
        lambda.assign(len, 0);
        lambda[0] = 1 + rng() % (p - 1);
        for (std::size_t t = 1; t < len; ++t) lambda[t] = rng() % p;
        for (std::int64_t c = A[j]; c < static_cast<std::int64_t>(R.size()); ++c) {
            const std::uint64_t u = R[c];
            if (u == 0) continue;
            const std::int64_t base = A[j + 1] + static_cast<std::int64_t>(p) * (c - A[j]);
            if (base >= static_cast<std::int64_t>(len)) break;
            std::uint64_t* dst = next.data() + base;
            const std::size_t count = len - static_cast<std::size_t>(base);
            for (std::size_t t = 0; t < count; ++t) dst[t] += u * lambda[t];
            R[c] = 0;
        }
    }
    return true;
}

ZpnLeftColumn build_zpn_left_column(std::uint32_t p, std::uint32_t n, std::int64_t i, FDegree bound)
{
    const auto ctx = PrimeContext::quotient(p, n);
    const auto in = nygaard_truncation_bound(p, n, i);
    if (bound > in) throw Error("bound exceeds the Nygaard truncation i*n");
    if (bound.value < 0) throw Error("negative bound");

    ZpnLeftColumn lc;
    lc.p = p;
    lc.n = n;
    lc.weight = i;
    lc.bound = bound;
    for (std::int64_t d = 0; d < bound.value; ++d) {
        auto m = mixed_radix_monomial({d}, ctx);
        m.twist = i;
        lc.bl.push_back(m);
    }

    std::map<std::map<std::int64_t, std::int64_t>, VarId> unit_ids;
    VarId next_id = 0;
    for (std::int64_t d = 0; d < bound.value; ++d) {
        Monomial free_part = lc.bl[d];
        Monomial t = free_part;
        t.ePow = nygaard_E_power(i, mixed_radix_monomial({d}, ctx), p);
        lc.tl.push_back(t);

        SymbolicSeries col;
        const auto can = normal_form(apply_can(t), ctx);
        const auto phi = apply_phi(t, p);
        const auto phi_nf = normal_form(phi.monomial, ctx);
        if (!can || !phi_nf) {
            lc.v_left.push_back(col);
            lc.resolved.push_back(false);
            continue;
        }
        const std::int64_t cd = f_degree(*can, ctx).value;
        const std::int64_t pd = f_degree(*phi_nf, ctx).value;
        const bool can_in = cd < bound.value, phi_in = pd < bound.value;
        const auto idx = [](std::int64_t v) { return static_cast<std::size_t>(v); };

        if (phi.lambda.empty()) {
            // phi is exact here: no f-generators, no unit factor.
            if (can_in && phi_in && cd == pd) {
                col.set(idx(cd), SymbolicScalar::known(0));
            } else {
                if (can_in) col.set(idx(cd), SymbolicScalar::known(1));
                if (phi_in) col.set(idx(pd), SymbolicScalar::known(p - 1));
            }
        } else {
            // -prod lambda_u^e_u is a unit power series: unit leading coefficient, unknown tail.
            auto [it, fresh] = unit_ids.try_emplace(phi.lambda, next_id);
            if (fresh) ++next_id;
            if (can_in && (!phi_in || cd < pd)) col.set(idx(cd), SymbolicScalar::known(1));
            if (phi_in) {
                if (cd == pd)
                    col.set(idx(pd), SymbolicScalar::unknown(next_id++));
                else
                    col.set(idx(pd), SymbolicScalar::unit(it->second));
                if (pd + 1 < bound.value) col.tail_from = idx(pd + 1);
            }
        }
        lc.v_left.push_back(col);
        lc.resolved.push_back(true);
    }
    return lc;
}

bool sample_left_column_membership(const ZpnLeftColumn& lc, const Monomial& target, std::mt19937_64& rng)
{
    const auto ctx = PrimeContext::quotient(lc.p, lc.n);
    Monomial t = target;
    t.twist = 0;
    const auto row = mixed_radix_index(t, ctx);
    if (row >= lc.bound) return true;  // zero modulo the truncation

    SeriesMatrix m;
    for (std::int64_t d = 0; d < lc.bound.value; ++d) m.row_degree.push_back({d});
    for (std::size_t c = 0; c < lc.v_left.size(); ++c)
        if (lc.resolved[c]) m.columns.push_back(lc.v_left[c]);

    VarRegistry reg;
    const auto pm = materialize(m, reg, lc.p);
    const auto values = random_assignment(reg, lc.p, rng);
    auto num = instantiate(pm, values, lc.p);
    const auto before = plain_eliminate(num, m.row_degree, lc.p).rank;
    std::vector<std::uint32_t> e(num.rows, 0);
    e[static_cast<std::size_t>(row.value)] = 1;
    num.columns.push_back(std::move(e));
    return plain_eliminate(num, m.row_degree, lc.p).rank == before;
}

}  // namespace syntomic
