#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "syntomic/linalg.hpp"

namespace syntomic {

/// i*n: below F-degree i*n the left column of Z/p^n computes the same
/// cohomology as the untruncated one, since F^(>=nk) lies in N^(>=k).
FDegree nygaard_truncation_bound(std::uint32_t p, std::uint32_t n, std::int64_t i);

/// The weight p^(n-1) - p^(n-2) in which the telescoping argument runs.
std::int64_t telescoping_weight(std::uint32_t p, std::uint32_t n);

/// z^(p^(n-1)) t^-(p^(n-1)-p^(n-2)) by direct substitution (formal, not reduced).
Monomial v1_power_partial_representative(std::uint32_t p, std::uint32_t n);

/// The same representative obtained by applying the bottom-row v1-action
/// (multiplication by z^p t^-(p-1)) p^(n-2) times to the representative 1 of ∂.
Monomial v1_power_partial_by_action(std::uint32_t p, std::uint32_t n);

/// can: E -> z (mod p).
Monomial apply_can(const Monomial& m);

/// phi on E^a z^k prod f_u^e_u t^-i, for elements of Nygaard level i:
/// (prod lambda_u^e_u) phi(E)^(a + sum p^u e_u - i) z^(pk) prod f_(u+1)^e_u t^-i
/// with phi(E) = z^p mod p. The unit factor is returned as lambda exponents.
struct PhiImage {
    Monomial monomial;
    std::map<std::int64_t, std::int64_t> lambda;  // u -> exponent
};
PhiImage apply_phi(const Monomial& m, std::uint32_t p);

struct SideConditions {
    bool index_in_range = false;      // j <= n-2
    std::int64_t power_lhs = 0;       // p^(n-2-j)
    std::int64_t power_rhs = 0;       // n-1-j
    bool exponents_nonnegative = false;
    bool in_nygaard_level = false;    // E-power equals max(i - p^j, 0)

    bool hold() const { return index_in_range && power_lhs >= power_rhs && exponents_nonnegative && in_nygaard_level; }
};

/// One link of the chain: (can - phi)(element) = can_image - lambda_j * phi_image.
struct StepWitness {
    std::int64_t j = 0;
    Monomial element;
    Monomial can_image;
    Monomial phi_image;
    std::int64_t lambda_index = 0;  // phi_image carries the unit lambda_j
    FDegree can_degree, phi_degree;
    SideConditions side;
    bool can_matches = false;  // apply_can(element) equals the displayed can image
    bool phi_matches = false;  // apply_phi(element) equals the displayed phi image
    bool phi_degree_matches = false;

    bool ok() const { return side.hold() && can_matches && phi_matches && phi_degree_matches; }
};

/// Throws Error when the side conditions fail.
StepWitness telescoping_step(std::uint32_t p, std::uint32_t n, std::int64_t j);

enum class Termination { HighFiltration };

struct VanishingCertificate {
    std::uint32_t p = 2, n = 2;
    std::int64_t weight = 0;
    FDegree truncation;             // i*n
    Monomial target;                // z^(p^(n-1)) t^-i, bottom-left
    Monomial target_rewritten;      // z^(p^(n-1)-n) f_0 t^-i
    std::vector<StepWitness> steps; // j = 0 .. n-2
    Termination termination = Termination::HighFiltration;
    std::int64_t termination_step = -1;  // first j whose phi image is at or beyond the truncation
    FDegree termination_degree;
    FDegree last_generator_degree;  // degree of f_(n-1), discarded by the final step
    bool verified = false;
    std::string failure;
};

/// Chains telescoping_step over j = 0..n-2 and checks every link,
/// establishing that v1^(p^(n-2))∂ is supported in the top right corner.
VanishingCertificate certify_vanishing(std::uint32_t p, std::uint32_t n);

/// Membership of the target in the image of can - phi modulo F^(>=in), on
/// the columns u * element_j with u running through z^m (every u of the
/// chain argument). Each lambda_j is a random unit power series; the
/// triangular solve is plain elimination in filtration order.
bool sample_chain_membership(const VanishingCertificate& cert, std::mt19937_64& rng);

/// The normal-form left column (can - phi: N^(>=i) -> prismatic) of Z/p^n below `bound`.
struct ZpnLeftColumn {
    std::uint32_t p = 2, n = 2;
    std::int64_t weight = 0;
    FDegree bound;
    std::vector<Monomial> tl;  // Nygaard basis, ordered by F-degree of the E-free part
    std::vector<Monomial> bl;  // mixed-radix basis; BL index == F-degree
    std::vector<SymbolicSeries> v_left;
    /// False where the image needs an f_u^p reduction; such columns are
    /// left empty and never used.
    std::vector<bool> resolved;
};

ZpnLeftColumn build_zpn_left_column(std::uint32_t p, std::uint32_t n, std::int64_t i, FDegree bound);

/// Plain-elimination check, on one random instantiation of the lambda units
/// and tails, that `target` (normal form, degree < bound) lies in the span
/// of the resolved columns.
bool sample_left_column_membership(const ZpnLeftColumn& lc, const Monomial& target, std::mt19937_64& rng);

}  // namespace syntomic
