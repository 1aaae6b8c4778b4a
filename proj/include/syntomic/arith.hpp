#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace syntomic {

/// Raised for violated preconditions (bad prime, mode mismatch, ...).
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation whose answer would depend on the value of an unknown.
class Indeterminate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t v);

/// Exact integer power; throws on overflow.
std::int64_t ipow(std::int64_t base, std::int64_t exp);

/// Residues mod p live in [0, p).
inline std::uint32_t mod_p(std::int64_t v, std::uint32_t p)
{
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

enum class RingMode { Base, Quotient };

/// The ring under study: Z_p (Base) or Z/p^n (Quotient).
struct PrimeContext {
    std::uint32_t p;
    std::uint32_t n;
    RingMode mode;

    PrimeContext(std::uint32_t p_, std::uint32_t n_, RingMode mode_);

    static PrimeContext base(std::uint32_t p) { return {p, 1, RingMode::Base}; }
    static PrimeContext quotient(std::uint32_t p, std::uint32_t n) { return {p, n, RingMode::Quotient}; }
};

struct FDegree {
    std::int64_t value = 0;

    auto operator<=>(const FDegree&) const = default;
    FDegree operator+(FDegree o) const { return {value + o.value}; }
};

/// A basis label E(z)^e z^k prod f_u^{e_u} [nabla z] t^{-i}.
///
/// zPow is not forced below n here: monomials built by exponent arithmetic
/// are formal until passed through normal_form().
struct Monomial {
    std::int64_t ePow = 0;
    std::int64_t zPow = 0;
    std::map<std::int64_t, std::int64_t> fExp;  // u -> e_u, zero exponents never stored
    bool nablaZ = false;
    std::int64_t twist = 0;

    bool operator==(const Monomial&) const = default;

    Monomial& set_f(std::int64_t u, std::int64_t e);
    std::int64_t f(std::int64_t u) const;

    /// Formal product: exponents add, nabla flags must not both be set.
    Monomial operator*(const Monomial& o) const;

    /// Sum_u p^u e_u, the Nygaard credit carried by the f-part.
    std::int64_t nygaard_weight(std::uint32_t p) const;

    std::string to_string() const;
};

FDegree f_degree(const Monomial& m, const PrimeContext& ctx);

/// True when zPow < n and every e_u < p (the Z/p^n basis constraints).
bool is_normal_form(const Monomial& m, const PrimeContext& ctx);

/// Rewrites z^n = f_0. Returns nullopt when the result would need f_u^p,
/// a reduction the engine does not model.
std::optional<Monomial> normal_form(const Monomial& m, const PrimeContext& ctx);

/// The unique E-free monomial z^k prod f_u^{e_u} of F-degree j with k < n, e_u < p.
Monomial mixed_radix_monomial(FDegree j, const PrimeContext& ctx);

/// Index of a normal-form E-free monomial in the mixed-radix enumeration
/// (inverse of mixed_radix_monomial).
FDegree mixed_radix_index(const Monomial& m, const PrimeContext& ctx);

/// E-power max(j - sum p^u e_u, 0) that puts m into Nygaard level j.
std::int64_t nygaard_E_power(std::int64_t j_target, const Monomial& m, std::uint32_t p);

}  // namespace syntomic
