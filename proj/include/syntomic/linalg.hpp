#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "syntomic/symbolic.hpp"

namespace syntomic {

/// A finite filtered map given column by column. row_degree orders the
/// target basis for pivot selection.
struct SeriesMatrix {
    std::vector<FDegree> row_degree;
    std::vector<SymbolicSeries> columns;

    std::size_t rows() const { return row_degree.size(); }
};

using PolyColumn = std::map<std::size_t, Poly>;

/// Sparse matrix of Laurent polynomials; the working form of the engine.
struct PolyMatrix {
    std::vector<FDegree> row_degree;
    std::vector<PolyColumn> columns;

    std::size_t rows() const { return row_degree.size(); }
    const Poly* at(std::size_t row, std::size_t col) const;
};

/// Turns series into polynomials, giving every tail position its own fresh
/// Free variable. Explicit unknown ids are declared in `reg`.
PolyMatrix materialize(const SeriesMatrix& m, VarRegistry& reg, std::uint32_t p);

enum class CertStatus { Certified, Indeterminate };

struct EliminationResult {
    std::size_t rank = 0;
    CertStatus status = CertStatus::Certified;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column) in pivot order
    std::vector<PolyColumn> kernel;                          // coefficient vectors over columns
    std::optional<std::pair<std::size_t, std::size_t>> blocking;

    bool certified() const { return status == CertStatus::Certified; }
    std::vector<std::size_t> pivot_rows() const;
};

/// Column elimination that only ever divides by entries nonzero under every
/// instantiation. Rows are scanned by (degree, index); within a row the
/// lowest certified-nonzero column wins. The rank is certified when the
/// residual after the last pivot is identically zero.
EliminationResult certified_eliminate(const PolyMatrix& m, const VarRegistry& reg, std::uint32_t p);
EliminationResult certified_eliminate(const SeriesMatrix& m, std::uint32_t p);

/// Dense F_p matrix stored by columns.
struct NumericMatrix {
    std::size_t rows = 0;
    std::vector<std::vector<std::uint32_t>> columns;
};

struct PlainElimination {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

/// Ordinary Gaussian elimination with the same pivot order as the certified engine.
PlainElimination plain_eliminate(const NumericMatrix& m, const std::vector<FDegree>& row_degree, std::uint32_t p);

NumericMatrix instantiate(const PolyMatrix& m, const std::vector<std::uint32_t>& values, std::uint32_t p);

/// Random values for every registered variable: Unit ones drawn from 1..p-1.
std::vector<std::uint32_t> random_assignment(const VarRegistry& reg, std::uint32_t p, std::mt19937_64& rng);

/// Restriction to a subset of columns (in the given order).
PolyMatrix select_columns(const PolyMatrix& m, const std::vector<std::size_t>& cols);
NumericMatrix select_columns(const NumericMatrix& m, const std::vector<std::size_t>& cols);

/// Row indices sorted by (degree, index).
std::vector<std::size_t> filtration_order(const std::vector<FDegree>& row_degree);

}  // namespace syntomic
