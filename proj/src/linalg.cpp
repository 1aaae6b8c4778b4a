#include "syntomic/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace syntomic {

const Poly* PolyMatrix::at(std::size_t row, std::size_t col) const
{
    auto it = columns.at(col).find(row);
    return it == columns[col].end() ? nullptr : &it->second;
}

std::vector<std::size_t> filtration_order(const std::vector<FDegree>& row_degree)
{
    std::vector<std::size_t> order(row_degree.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row_degree[a] < row_degree[b]; });
    return order;
}

PolyMatrix materialize(const SeriesMatrix& m, VarRegistry& reg, std::uint32_t p)
{
    PolyMatrix out;
    out.row_degree = m.row_degree;
    out.columns.reserve(m.columns.size());
    // Explicit ids first, so that fresh tail ids never collide with them.
    for (const auto& s : m.columns)
        for (const auto& [row, c] : s.terms) {
            if (c.kind == ScalarKind::UnitUnknown) reg.declare(c.id, VarKind::Unit);
            if (c.kind == ScalarKind::Unknown) reg.declare(c.id, VarKind::Free);
        }
    for (const auto& s : m.columns) {
        PolyColumn col;
        for (const auto& [row, c] : s.terms) {
            if (row >= m.rows()) throw Error("series term outside the target basis");
            auto poly = Poly::from_scalar(c, p);
            if (!poly.is_zero()) col[row] = poly;
        }
        if (s.tail_from)
            for (std::size_t row = *s.tail_from; row < m.rows(); ++row) col[row] = Poly::var(reg.fresh(VarKind::Free), p);
        out.columns.push_back(std::move(col));
    }
    return out;
}

std::vector<std::size_t> EliminationResult::pivot_rows() const
{
    std::vector<std::size_t> r;
    for (auto [row, col] : pivots) r.push_back(row);
    return r;
}

EliminationResult certified_eliminate(const PolyMatrix& m, const VarRegistry& reg, std::uint32_t p)
{
    const std::size_t ncols = m.columns.size();
    auto cols = m.columns;
    std::vector<PolyColumn> transform(ncols);
    for (std::size_t c = 0; c < ncols; ++c) transform[c][c] = Poly::constant(1, p);

    const auto order = filtration_order(m.row_degree);
    std::vector<bool> row_done(m.rows(), false), col_done(ncols, false);
    EliminationResult res;

    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        for (auto r : order) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < ncols && !pivot; ++c) {
                if (col_done[c]) continue;
                auto it = cols[c].find(r);
                if (it != cols[c].end() && it->second.certified_nonzero(reg)) pivot = {r, c};
            }
            if (pivot) break;
        }
        if (!pivot) break;

        auto [r, c] = *pivot;
        const Poly inv = cols[c].at(r).inverse_monomial(p);
        for (std::size_t o = 0; o < ncols; ++o) {
            if (o == c || col_done[o]) continue;
            auto it = cols[o].find(r);
            if (it == cols[o].end()) continue;
            const Poly factor = it->second * inv;
            for (const auto& [row, v] : cols[c]) {
                auto& slot = cols[o][row];
                slot -= factor * v;
                if (slot.is_zero()) cols[o].erase(row);
            }
            for (const auto& [k, v] : transform[c]) {
                auto& slot = transform[o][k];
                slot -= factor * v;
                if (slot.is_zero()) transform[o].erase(k);
            }
        }
        row_done[r] = col_done[c] = true;
        res.pivots.push_back({r, c});
    }

    res.rank = res.pivots.size();
    for (auto r : order) {
        if (row_done[r]) continue;
        for (std::size_t c = 0; c < ncols && !res.blocking; ++c)
            if (!col_done[c] && cols[c].count(r)) res.blocking = {r, c};
        if (res.blocking) break;
    }
    res.status = res.blocking ? CertStatus::Indeterminate : CertStatus::Certified;
    if (res.certified())
        for (std::size_t c = 0; c < ncols; ++c)
            if (!col_done[c]) res.kernel.push_back(transform[c]);
    return res;
}

EliminationResult certified_eliminate(const SeriesMatrix& m, std::uint32_t p)
{
    VarRegistry reg;
    auto pm = materialize(m, reg, p);
    return certified_eliminate(pm, reg, p);
}

PlainElimination plain_eliminate(const NumericMatrix& m, const std::vector<FDegree>& row_degree, std::uint32_t p)
{
    auto cols = m.columns;
    const auto order = filtration_order(row_degree);
    std::vector<bool> col_done(cols.size(), false);
    PlainElimination res;
    for (auto r : order) {
        std::size_t c = 0;
        while (c < cols.size() && (col_done[c] || cols[c][r] == 0)) ++c;
        if (c == cols.size()) continue;
        const std::uint64_t inv = inverse_mod(cols[c][r], p);
        for (std::size_t o = 0; o < cols.size(); ++o) {
            if (o == c || col_done[o] || cols[o][r] == 0) continue;
            const std::uint64_t f = cols[o][r] * inv % p;
            for (std::size_t row = 0; row < m.rows; ++row)
                cols[o][row] = static_cast<std::uint32_t>((cols[o][row] + (p - f) * cols[c][row]) % p);
        }
        col_done[c] = true;
        res.pivot_rows.push_back(r);
    }
    res.rank = res.pivot_rows.size();
    return res;
}

NumericMatrix instantiate(const PolyMatrix& m, const std::vector<std::uint32_t>& values, std::uint32_t p)
{
    NumericMatrix out;
    out.rows = m.rows();
    for (const auto& col : m.columns) {
        std::vector<std::uint32_t> v(m.rows(), 0);
        for (const auto& [row, poly] : col) v[row] = poly.evaluate(values, p);
        out.columns.push_back(std::move(v));
    }
    return out;
}

std::vector<std::uint32_t> random_assignment(const VarRegistry& reg, std::uint32_t p, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> values(reg.size(), 0);
    for (VarId id = 0; id < reg.size(); ++id) {
        if (!reg.contains(id)) continue;
        if (reg.kind(id) == VarKind::Unit)
            values[id] = 1 + static_cast<std::uint32_t>(rng() % (p - 1));
        else
            values[id] = static_cast<std::uint32_t>(rng() % p);
    }
    return values;
}

PolyMatrix select_columns(const PolyMatrix& m, const std::vector<std::size_t>& cols)
{
    PolyMatrix out;
    out.row_degree = m.row_degree;
    for (auto c : cols) out.columns.push_back(m.columns.at(c));
    return out;
}

NumericMatrix select_columns(const NumericMatrix& m, const std::vector<std::size_t>& cols)
{
    NumericMatrix out;
    out.rows = m.rows;
    for (auto c : cols) out.columns.push_back(m.columns.at(c));
    return out;
}

}  // namespace syntomic
