#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syntomic/square.hpp"

namespace syntomic {

/// Truncation of the Z_p square in weight i:
///   TL  z^k E^i t^-i              for k <= tl_max_k
///   TR  z^(k-1) E^(i-1) dz t^-i   for 1 <= k <= tr_max_k
///   BL  z^m t^-i                  of F-degree <= bl_max_degree
///   BR  z^m dz t^-i               of F-degree m+1 <= br_max_degree
struct ZpCutoffs {
    std::int64_t tl_max_k = 0;
    std::int64_t tr_max_k = 0;
    std::int64_t bl_max_degree = 0;
    std::int64_t br_max_degree = 0;

    bool operator==(const ZpCutoffs&) const = default;
};

/// floor(i/(p-1)), floor((i-1)/(p-1)), floor(pi/(p-1)), floor(p(i-1)/(p-1)),
/// each raised by `extra`.
ZpCutoffs zp_cutoffs(std::uint32_t p, std::int64_t i, std::int64_t extra = 0);

/// Keep-counts of the smaller cutoffs inside a square built with larger ones.
CornerCounts corner_counts(const ZpCutoffs& c);

/// The mod-p square of Z_p in weight i. Exact entries for can and phi,
/// leading term plus unknown tail for nabla and phi^nabla.
SquareComplex build_zp_square(std::uint32_t p, std::int64_t i, const ZpCutoffs& cutoffs);
SquareComplex build_zp_square(std::uint32_t p, std::int64_t i);

/// A named syntomic class with its expected support in the truncated square.
struct NamedClass {
    std::string name;
    std::int64_t weight = 0;
    int cohom_degree = 0;
    Corner corner = Corner::TL;
    std::size_t index = 0;  // position in the corner basis of the default truncation
    Monomial label;
    /// Full representative; classes only known up to an undetermined
    /// correction carry it as an unknown series in the extra corner.
    std::vector<std::pair<Corner, SymbolicSeries>> representative;

    GeneratorRep as_generator() const { return {name, cohom_degree, corner, index, label}; }
};

/// Basis v1^k, v1^k∂, v1^k γ_j (1 <= j <= p-1), v1^k λ1, v1^k ∂λ1 restricted to weight i.
std::vector<NamedClass> predicted_classes(std::uint32_t p, std::int64_t i);

CohomologyDims closed_form_dims(std::uint32_t p, std::int64_t i);

struct ZpCohomology {
    CohomologyReport report;
    std::vector<NamedClass> classes;
    GeneratorCheck generator_check;
};

/// Cohomology of F_p(i)(Z_p) with the predicted generators verified.
/// Throws when the report is indeterminate or the generators do not match.
ZpCohomology zp_cohomology(std::uint32_t p, std::int64_t i);

/// The square of F_p(*)(Z_p)/v1 in weight i (equal to the plain square below p-1).
SquareComplex mod_v1_square(std::uint32_t p, std::int64_t i);
std::vector<NamedClass> predicted_mod_v1_classes(std::uint32_t p, std::int64_t i);
ZpCohomology mod_v1_cohomology(std::uint32_t p, std::int64_t i);

struct WeightRow {
    std::int64_t weight = 0;
    CohomologyDims dims;
    std::vector<NamedClass> classes;
};

/// Enumerates the basis weight by weight and cross-checks every weight
/// against zp_cohomology; throws naming the first mismatching weight.
std::vector<WeightRow> syntomic_basis_table(std::uint32_t p, std::int64_t i_max);

/// A cochain supported in one corner.
struct CornerCochain {
    Corner corner = Corner::TL;
    SymbolicSeries series;
};

/// Product with ∂: phi on TL, -phi^nabla on TR; zero on the bottom row.
std::optional<CornerCochain> multiply_by_partial(std::uint32_t p, std::int64_t i, const CornerCochain& x);

/// Product with v1: z E^(p-1) t^-(p-1) on the top row, z^p t^-(p-1) on the
/// bottom row, as index shifts in the default bases of weight i + p - 1.
CornerCochain multiply_by_v1(std::uint32_t p, const CornerCochain& x);

}  // namespace syntomic
