#include "syntomic/square.hpp"

#include <algorithm>
#include <sstream>

namespace syntomic {

std::string to_string(Corner c)
{
    switch (c) {
    case Corner::TL: return "TL";
    case Corner::TR: return "TR";
    case Corner::BL: return "BL";
    case Corner::BR: return "BR";
    }
    return "?";
}

namespace {

void check_map(const std::vector<SymbolicSeries>& cols, const CornerBasis& src, const CornerBasis& dst, const char* what)
{
    if (cols.size() != src.size())
        throw Error(std::string(what) + ": column count does not match the source basis");
    for (const auto& s : cols)
        for (const auto& [row, c] : s.terms)
            if (row >= dst.size()) throw Error(std::string(what) + ": target index outside the basis");
}

void add_block(PolyColumn& col, const SymbolicSeries& s, std::size_t offset, std::size_t block_rows, VarRegistry& reg,
               std::uint32_t p, bool negate)
{
    auto put = [&](std::size_t row, Poly v) {
        if (negate) v = Poly::constant(0, p) - v;
        if (!v.is_zero()) col[offset + row] = std::move(v);
    };
    for (const auto& [row, c] : s.terms) {
        if (row >= block_rows) continue;
        if (c.kind == ScalarKind::UnitUnknown) reg.declare(c.id, VarKind::Unit);
        if (c.kind == ScalarKind::Unknown) reg.declare(c.id, VarKind::Free);
        put(row, Poly::from_scalar(c, p));
    }
    if (s.tail_from)
        for (std::size_t row = *s.tail_from; row < block_rows; ++row) put(row, Poly::var(reg.fresh(VarKind::Free), p));
}

PolyMatrix with_unit_columns(PolyMatrix m, const std::vector<std::size_t>& rows, std::uint32_t p)
{
    for (auto r : rows) m.columns.push_back({{r, Poly::constant(1, p)}});
    return m;
}

}  // namespace

void SquareComplex::validate() const
{
    check_map(nabla_top, tl, tr, "nabla_top");
    check_map(nabla_bot, bl, br, "nabla_bot");
    check_map(v_left, tl, bl, "v_left");
    check_map(v_right, tr, br, "v_right");
}

SquareComplex truncate(const SquareComplex& sq, const CornerCounts& keep)
{
    auto cut_basis = [](const CornerBasis& b, std::size_t n) {
        CornerBasis r = b;
        n = std::min(n, b.size());
        r.entries.resize(n);
        r.degrees.resize(n);
        return r;
    };
    auto cut_map = [](const std::vector<SymbolicSeries>& cols, std::size_t ncols, std::size_t nrows) {
        std::vector<SymbolicSeries> r;
        for (std::size_t c = 0; c < std::min(ncols, cols.size()); ++c) r.push_back(cols[c].truncated(nrows));
        return r;
    };
    SquareComplex out;
    out.p = sq.p;
    out.weight = sq.weight;
    out.tl = cut_basis(sq.tl, keep.tl);
    out.tr = cut_basis(sq.tr, keep.tr);
    out.bl = cut_basis(sq.bl, keep.bl);
    out.br = cut_basis(sq.br, keep.br);
    out.nabla_top = cut_map(sq.nabla_top, out.tl.size(), out.tr.size());
    out.nabla_bot = cut_map(sq.nabla_bot, out.bl.size(), out.br.size());
    out.v_left = cut_map(sq.v_left, out.tl.size(), out.bl.size());
    out.v_right = cut_map(sq.v_right, out.tr.size(), out.br.size());
    return out;
}

TotalComplex assemble_total_complex(const SquareComplex& sq)
{
    sq.validate();
    TotalComplex tc;
    const auto p = sq.p;
    tc.bl_size = sq.bl.size();
    tc.tr_size = sq.tr.size();

    tc.d0.row_degree = sq.bl.degrees;
    tc.d0.row_degree.insert(tc.d0.row_degree.end(), sq.tr.degrees.begin(), sq.tr.degrees.end());
    for (std::size_t t = 0; t < sq.tl.size(); ++t) {
        PolyColumn col;
        add_block(col, sq.v_left[t], 0, tc.bl_size, tc.reg, p, false);
        add_block(col, sq.nabla_top[t], tc.bl_size, tc.tr_size, tc.reg, p, false);
        tc.d0.columns.push_back(std::move(col));
    }

    tc.d1.row_degree = sq.br.degrees;
    for (std::size_t b = 0; b < sq.bl.size(); ++b) {
        PolyColumn col;
        add_block(col, sq.nabla_bot[b], 0, sq.br.size(), tc.reg, p, true);
        tc.d1.columns.push_back(std::move(col));
    }
    for (std::size_t r = 0; r < sq.tr.size(); ++r) {
        PolyColumn col;
        add_block(col, sq.v_right[r], 0, sq.br.size(), tc.reg, p, false);
        tc.d1.columns.push_back(std::move(col));
    }
    return tc;
}

CohomologyComputation compute_cohomology(const SquareComplex& sq)
{
    CohomologyComputation comp{assemble_total_complex(sq), {}, {}, {}, {}};
    const auto& tc = comp.complex;
    comp.d0 = certified_eliminate(tc.d0, tc.reg, sq.p);

    const auto pivots = comp.d0.pivot_rows();
    for (std::size_t c = 0; c < tc.d0.rows(); ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) comp.complement.push_back(c);
    comp.d1_on_complement = certified_eliminate(select_columns(tc.d1, comp.complement), tc.reg, sq.p);

    auto& rep = comp.report;
    const std::size_t c1 = tc.d0.rows();
    rep.dims.h0 = sq.tl.size() - comp.d0.rank;
    rep.dims.h1 = c1 - comp.d0.rank - comp.d1_on_complement.rank;
    rep.dims.h2 = sq.br.size() - comp.d1_on_complement.rank;

    auto describe = [&](const char* which, const EliminationResult& e, bool on_complement) {
        std::ostringstream os;
        auto [row, col] = *e.blocking;
        if (on_complement) col = comp.complement[col];
        os << which << ": no certified pivot for row " << row << " (column " << col << ")";
        return os.str();
    };
    if (!comp.d0.certified()) {
        rep.status = CertStatus::Indeterminate;
        rep.blocking = describe("d0", comp.d0, false);
    } else if (!comp.d1_on_complement.certified()) {
        rep.status = CertStatus::Indeterminate;
        rep.blocking = describe("d1", comp.d1_on_complement, true);
    }
    return comp;
}

CohomologyReport square_cohomology(const SquareComplex& sq)
{
    return compute_cohomology(sq).report;
}

CohomologyDims sampled_dims(const TotalComplex& tc, std::uint32_t p, std::mt19937_64& rng)
{
    const auto values = random_assignment(tc.reg, p, rng);
    const auto d0 = instantiate(tc.d0, values, p);
    const auto d1 = instantiate(tc.d1, values, p);
    const auto e0 = plain_eliminate(d0, tc.d0.row_degree, p);
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < tc.d0.rows(); ++c)
        if (std::find(e0.pivot_rows.begin(), e0.pivot_rows.end(), c) == e0.pivot_rows.end()) complement.push_back(c);
    const auto e1 = plain_eliminate(select_columns(d1, complement), tc.d1.row_degree, p);
    return {d0.columns.size() - e0.rank, tc.d0.rows() - e0.rank - e1.rank, tc.d1.rows() - e1.rank};
}

std::int64_t euler_characteristic(const SquareComplex& sq)
{
    return static_cast<std::int64_t>(sq.tl.size()) - static_cast<std::int64_t>(sq.tr.size()) -
           static_cast<std::int64_t>(sq.bl.size()) + static_cast<std::int64_t>(sq.br.size());
}

GeneratorCheck check_generators(const CohomologyComputation& comp, const SquareComplex& sq,
                                const std::vector<GeneratorRep>& candidates)
{
    const auto& tc = comp.complex;
    const auto& dims = comp.report.dims;
    if (!comp.report.certified()) return {false, "cohomology is not certified"};

    std::vector<std::size_t> deg1_rows, deg2_rows;
    std::size_t n0 = 0;
    for (const auto& g : candidates) {
        switch (g.cohom_degree) {
        case 0:
            if (g.corner != Corner::TL || g.index >= sq.tl.size()) return {false, g.name + ": bad degree-0 support"};
            if (!tc.d0.columns[g.index].empty()) return {false, g.name + ": not a cocycle"};
            ++n0;
            break;
        case 1: {
            if ((g.corner != Corner::BL && g.corner != Corner::TR) ||
                g.index >= (g.corner == Corner::BL ? tc.bl_size : tc.tr_size))
                return {false, g.name + ": bad degree-1 support"};
            const auto idx = tc.c1_index(g.corner, g.index);
            if (!tc.d1.columns[idx].empty()) return {false, g.name + ": not a cocycle"};
            deg1_rows.push_back(idx);
            break;
        }
        case 2:
            if (g.corner != Corner::BR || g.index >= sq.br.size()) return {false, g.name + ": bad degree-2 support"};
            deg2_rows.push_back(g.index);
            break;
        default: return {false, g.name + ": cohomological degree out of range"};
        }
    }
    if (n0 != dims.h0 || deg1_rows.size() != dims.h1 || deg2_rows.size() != dims.h2)
        return {false, "candidate count differs from the dimensions"};

    auto e1 = certified_eliminate(with_unit_columns(tc.d0, deg1_rows, sq.p), tc.reg, sq.p);
    if (!e1.certified() || e1.rank != comp.d0.rank + deg1_rows.size())
        return {false, "degree-1 candidates are dependent modulo coboundaries"};
    auto e2 = certified_eliminate(with_unit_columns(select_columns(tc.d1, comp.complement), deg2_rows, sq.p), tc.reg,
                                  sq.p);
    if (!e2.certified() || e2.rank != comp.d1_on_complement.rank + deg2_rows.size())
        return {false, "degree-2 candidates are dependent modulo coboundaries"};
    return {true, {}};
}

std::size_t known_part_dd_violations(const TotalComplex& tc, std::uint32_t p)
{
    std::size_t bad = 0;
    for (std::size_t t = 0; t < tc.d0.columns.size(); ++t) {
        const auto& col = tc.d0.columns[t];
        std::vector<Poly> via_top(tc.d1.rows()), via_bottom(tc.d1.rows());
        for (const auto& [row, v] : col) {
            auto& target = row < tc.bl_size ? via_bottom : via_top;
            for (const auto& [r2, w] : tc.d1.columns[row]) target[r2] += w * v;
        }
        for (std::size_t r = 0; r < tc.d1.rows(); ++r)
            if (via_top[r].is_constant() && via_bottom[r].is_constant() && !(via_top[r] + via_bottom[r]).is_zero())
                ++bad;
    }
    (void)p;
    return bad;
}

TruncationCheck verify_truncation(const SquareComplex& full, const CornerCounts& keep)
{
    full.validate();
    auto fail = [](const std::string& what, std::size_t col) {
        return TruncationCheck{false, what + " column " + std::to_string(col)};
    };
    // A dropped column must reach exactly the expected dropped row first, with a
    // certified coefficient, and nothing outside the dropped block.
    auto check_vertical = [&](const std::vector<SymbolicSeries>& cols, std::size_t keep_src, std::size_t keep_dst,
                              std::size_t dst_size, const char* name) -> std::optional<TruncationCheck> {
        for (std::size_t c = keep_src; c < cols.size(); ++c) {
            const std::size_t expected = keep_dst + (c - keep_src);
            if (expected >= dst_size) break;
            const auto lead = cols[c].leading_term();
            if (!lead || lead->first != expected || !lead->second.certified_nonzero())
                return fail(std::string(name) + ": leading term fails at", c);
        }
        return std::nullopt;
    };
    auto check_closed = [&](const std::vector<SymbolicSeries>& cols, std::size_t keep_src, std::size_t keep_dst,
                            const char* name) -> std::optional<TruncationCheck> {
        for (std::size_t c = keep_src; c < cols.size(); ++c) {
            for (const auto& [row, v] : cols[c].terms)
                if (row < keep_dst && !v.is_known_zero()) return fail(std::string(name) + ": leaves the dropped part at", c);
            if (cols[c].tail_from && *cols[c].tail_from < keep_dst)
                return fail(std::string(name) + ": tail leaves the dropped part at", c);
        }
        return std::nullopt;
    };
    if (auto r = check_vertical(full.v_left, keep.tl, keep.bl, full.bl.size(), "can-phi")) return *r;
    if (auto r = check_vertical(full.v_right, keep.tr, keep.br, full.br.size(), "can-phi^nabla")) return *r;
    if (auto r = check_closed(full.v_left, keep.tl, keep.bl, "can-phi")) return *r;
    if (auto r = check_closed(full.v_right, keep.tr, keep.br, "can-phi^nabla")) return *r;
    if (auto r = check_closed(full.nabla_top, keep.tl, keep.tr, "nabla top")) return *r;
    if (auto r = check_closed(full.nabla_bot, keep.bl, keep.br, "nabla bottom")) return *r;
    return {true, {}};
}

}  // namespace syntomic
