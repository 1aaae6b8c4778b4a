#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "syntomic/linalg.hpp"

namespace syntomic {

enum class Corner { TL, TR, BL, BR };

std::string to_string(Corner c);

struct CornerBasis {
    Corner corner = Corner::TL;
    std::int64_t weight = 0;
    std::vector<Monomial> entries;  // ordered by F-degree
    std::vector<FDegree> degrees;

    std::size_t size() const { return entries.size(); }
    void push(Monomial m, FDegree d)
    {
        entries.push_back(std::move(m));
        degrees.push_back(d);
    }
};

/// The truncated four-corner square
///
///   TL --nabla_top--> TR
///   |                 |
///   v_left            v_right
///   v                 v
///   BL --nabla_bot--> BR
///
/// Every map is stored column by column as series over the target basis.
struct SquareComplex {
    std::uint32_t p = 2;
    std::int64_t weight = 0;
    CornerBasis tl, tr, bl, br;
    std::vector<SymbolicSeries> nabla_top, nabla_bot, v_left, v_right;

    /// Throws when a map's column count or target indices disagree with the bases.
    void validate() const;
};

/// Number of basis elements kept per corner.
struct CornerCounts {
    std::size_t tl = 0, tr = 0, bl = 0, br = 0;
};

/// Quotient by everything beyond the first `keep` basis elements of each corner.
/// Only meaningful when the dropped elements span a subcomplex.
SquareComplex truncate(const SquareComplex& sq, const CornerCounts& keep);

/// Total complex C0 = TL -> C1 = BL (+) TR -> C2 = BR with
/// d0 = (v_left, nabla_top) and d1(y, x) = v_right(x) - nabla_bot(y).
/// C1 lists BL first, then TR.
struct TotalComplex {
    VarRegistry reg;
    PolyMatrix d0, d1;
    std::size_t bl_size = 0, tr_size = 0;

    std::size_t c1_index(Corner c, std::size_t i) const { return c == Corner::BL ? i : bl_size + i; }
};

TotalComplex assemble_total_complex(const SquareComplex& sq);

struct CohomologyDims {
    std::size_t h0 = 0, h1 = 0, h2 = 0;
    bool operator==(const CohomologyDims&) const = default;
};

struct GeneratorRep {
    std::string name;
    int cohom_degree = 0;
    Corner corner = Corner::TL;
    std::size_t index = 0;
    Monomial label;
};

struct CohomologyReport {
    CohomologyDims dims;
    std::vector<GeneratorRep> generators;
    CertStatus status = CertStatus::Certified;
    std::string blocking;  // empty when certified

    bool certified() const { return status == CertStatus::Certified; }
};

/// Ranks and pivot data behind a report; d1 is only evaluated on the
/// complement of im d0, since d1 vanishes on coboundaries.
struct CohomologyComputation {
    TotalComplex complex;
    EliminationResult d0, d1_on_complement;
    std::vector<std::size_t> complement;  // C1 indices outside the d0 pivot rows
    CohomologyReport report;
};

CohomologyComputation compute_cohomology(const SquareComplex& sq);
CohomologyReport square_cohomology(const SquareComplex& sq);

/// Same pipeline on one random instantiation of every unknown, with plain
/// elimination.
CohomologyDims sampled_dims(const TotalComplex& tc, std::uint32_t p, std::mt19937_64& rng);

std::int64_t euler_characteristic(const SquareComplex& sq);

/// Checks that a proposed family of representatives is a basis of the
/// cohomology: degree-0 and degree-1 candidates must be certified cocycles,
/// candidates must stay independent modulo coboundaries, and their number
/// must equal the dimension.
struct GeneratorCheck {
    bool ok = false;
    std::string failure;
};
GeneratorCheck check_generators(const CohomologyComputation& comp, const SquareComplex& sq,
                                const std::vector<GeneratorRep>& candidates);

/// Compares d1 * d0 entry by entry wherever both of its halves
/// (v_right * nabla_top and nabla_bot * v_left) are constants.
/// Returns the number of disagreeing entries.
std::size_t known_part_dd_violations(const TotalComplex& tc, std::uint32_t p);

struct TruncationCheck {
    bool ok = false;
    std::string failure;
};

/// Verifies that the dropped part of `full` (everything beyond `keep`) is a
/// subcomplex on which both vertical maps are isomorphisms: each dropped
/// column has a certified-nonzero leading term on the matching dropped row,
/// nothing below it, and the horizontal maps send dropped columns to dropped rows.
TruncationCheck verify_truncation(const SquareComplex& full, const CornerCounts& keep);

}  // namespace syntomic
