#include "syntomic/arith.hpp"

#include <limits>
#include <sstream>

namespace syntomic {

bool is_prime(std::int64_t v)
{
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::int64_t ipow(std::int64_t base, std::int64_t exp)
{
    if (exp < 0) throw Error("ipow: negative exponent");
    std::int64_t r = 1;
    for (std::int64_t e = 0; e < exp; ++e) {
        if (base != 0 && std::abs(r) > std::numeric_limits<std::int64_t>::max() / std::abs(base))
            throw Error("ipow: overflow");
        r *= base;
    }
    return r;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    a %= p;
    if (a == 0) throw Error("inverse_mod: zero has no inverse");
    // Fermat: a^(p-2)
    std::uint64_t r = 1, b = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

PrimeContext::PrimeContext(std::uint32_t p_, std::uint32_t n_, RingMode mode_) : p(p_), n(n_), mode(mode_)
{
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    if (n < 1) throw Error("ring exponent n must be >= 1");
}

Monomial& Monomial::set_f(std::int64_t u, std::int64_t e)
{
    if (u < 0 || e < 0) throw Error("f exponent data must be nonnegative");
    if (e == 0)
        fExp.erase(u);
    else
        fExp[u] = e;
    return *this;
}

std::int64_t Monomial::f(std::int64_t u) const
{
    auto it = fExp.find(u);
    return it == fExp.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    if (nablaZ && o.nablaZ) throw Error("product of two nabla-z monomials");
    Monomial r = *this;
    r.ePow += o.ePow;
    r.zPow += o.zPow;
    for (auto [u, e] : o.fExp) r.fExp[u] += e;
    r.nablaZ = nablaZ || o.nablaZ;
    r.twist += o.twist;
    return r;
}

std::int64_t Monomial::nygaard_weight(std::uint32_t p) const
{
    std::int64_t s = 0;
    for (auto [u, e] : fExp) s += ipow(p, u) * e;
    return s;
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    bool any = false;
    auto sep = [&] {
        if (any) os << '*';
        any = true;
    };
    if (ePow) {
        sep();
        os << "E^" << ePow;
    }
    if (zPow) {
        sep();
        os << "z^" << zPow;
    }
    for (auto [u, e] : fExp) {
        sep();
        os << "f" << u;
        if (e != 1) os << '^' << e;
    }
    if (nablaZ) {
        sep();
        os << "dz";
    }
    if (!any) os << '1';
    os << "*t^-" << twist;
    return os.str();
}

FDegree f_degree(const Monomial& m, const PrimeContext& ctx)
{
    if (ctx.mode == RingMode::Base && !m.fExp.empty())
        throw Error("f-generators are not defined over Z_p");
    std::int64_t d = m.ePow + m.zPow + (m.nablaZ ? 1 : 0);
    for (auto [u, e] : m.fExp) d += e * static_cast<std::int64_t>(ctx.n) * ipow(ctx.p, u);
    return {d};
}

bool is_normal_form(const Monomial& m, const PrimeContext& ctx)
{
    if (ctx.mode == RingMode::Base) return m.fExp.empty();
    if (m.zPow >= ctx.n) return false;
    for (auto [u, e] : m.fExp)
        if (e >= ctx.p) return false;
    return true;
}

std::optional<Monomial> normal_form(const Monomial& m, const PrimeContext& ctx)
{
    if (ctx.mode == RingMode::Base) {
        if (!m.fExp.empty()) throw Error("f-generators are not defined over Z_p");
        return m;
    }
    Monomial r = m;
    if (r.zPow >= ctx.n) {
        r.fExp[0] += r.zPow / ctx.n;
        r.zPow %= ctx.n;
    }
    for (auto [u, e] : r.fExp)
        if (e >= ctx.p) return std::nullopt;
    return r;
}

Monomial mixed_radix_monomial(FDegree j, const PrimeContext& ctx)
{
    if (ctx.mode != RingMode::Quotient) throw Error("mixed-radix basis needs a Z/p^n context");
    if (j.value < 0) throw Error("negative F-degree");
    Monomial m;
    m.zPow = j.value % ctx.n;
    std::int64_t rest = j.value / ctx.n;
    for (std::int64_t u = 0; rest > 0; ++u, rest /= ctx.p)
        m.set_f(u, rest % ctx.p);
    return m;
}

FDegree mixed_radix_index(const Monomial& m, const PrimeContext& ctx)
{
    if (m.ePow != 0 || m.nablaZ || !is_normal_form(m, ctx)) throw Error("not an E-free normal-form monomial");
    return f_degree(m, ctx);
}

std::int64_t nygaard_E_power(std::int64_t j_target, const Monomial& m, std::uint32_t p)
{
    if (m.ePow != 0) throw Error("nygaard_E_power expects an E-free monomial");
    return std::max<std::int64_t>(j_target - m.nygaard_weight(p), 0);
}

}  // namespace syntomic
