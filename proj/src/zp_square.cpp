#include "syntomic/zp_square.hpp"

#include <map>
#include <stdexcept>

namespace syntomic {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b)
{
    auto q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

void check_weight(std::uint32_t p, std::int64_t i)
{
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    if (i < 0) throw Error("weight must be nonnegative");
}

Monomial tl_label(std::int64_t i, std::int64_t k) { return Monomial{i, k, {}, false, i}; }
Monomial tr_label(std::int64_t i, std::int64_t k) { return Monomial{i - 1, k - 1, {}, true, i}; }
Monomial bl_label(std::int64_t i, std::int64_t m) { return Monomial{0, m, {}, false, i}; }
Monomial br_label(std::int64_t i, std::int64_t m) { return Monomial{0, m, {}, true, i}; }

SymbolicSeries exact(const std::map<std::int64_t, std::int64_t>& coeffs, std::size_t rows, std::uint32_t p)
{
    SymbolicSeries s;
    for (auto [idx, c] : coeffs)
        if (idx >= 0 && static_cast<std::size_t>(idx) < rows && mod_p(c, p) != 0)
            s.set(static_cast<std::size_t>(idx), SymbolicScalar::known(mod_p(c, p)));
    return s;
}

std::string v1_prefix(std::int64_t k)
{
    if (k == 0) return "";
    if (k == 1) return "v1";
    return "v1^" + std::to_string(k);
}

std::string class_name(std::int64_t k, const std::string& body)
{
    auto pre = v1_prefix(k);
    if (pre.empty() && body.empty()) return "1";
    return pre + body;
}

SymbolicSeries single(std::size_t idx)
{
    SymbolicSeries s;
    s.set(idx, SymbolicScalar::known(1));
    return s;
}

ZpCohomology run(const SquareComplex& sq, std::vector<NamedClass> classes)
{
    auto comp = compute_cohomology(sq);
    if (!comp.report.certified())
        throw Indeterminate("weight " + std::to_string(sq.weight) + ": " + comp.report.blocking);
    std::vector<GeneratorRep> cands;
    for (const auto& c : classes) cands.push_back(c.as_generator());
    auto check = check_generators(comp, sq, cands);
    if (!check.ok)
        throw std::logic_error("weight " + std::to_string(sq.weight) + ": generator matching failed: " + check.failure);
    comp.report.generators = cands;
    return {comp.report, std::move(classes), check};
}

}  // namespace

ZpCutoffs zp_cutoffs(std::uint32_t p, std::int64_t i, std::int64_t extra)
{
    const std::int64_t q = p - 1;
    return {floordiv(i, q) + extra, floordiv(i - 1, q) + extra, floordiv(p * i, q) + extra,
            floordiv(p * (i - 1), q) + extra};
}

CornerCounts corner_counts(const ZpCutoffs& c)
{
    auto nonneg = [](std::int64_t v) { return static_cast<std::size_t>(std::max<std::int64_t>(v, 0)); };
    return {nonneg(c.tl_max_k + 1), nonneg(c.tr_max_k), nonneg(c.bl_max_degree + 1), nonneg(c.br_max_degree)};
}

SquareComplex build_zp_square(std::uint32_t p, std::int64_t i)
{
    return build_zp_square(p, i, zp_cutoffs(p, i));
}

SquareComplex build_zp_square(std::uint32_t p, std::int64_t i, const ZpCutoffs& cut)
{
    check_weight(p, i);
    const auto base = zp_cutoffs(p, i);
    if (cut.tl_max_k < base.tl_max_k || cut.tr_max_k < base.tr_max_k || cut.bl_max_degree < base.bl_max_degree ||
        cut.br_max_degree < base.br_max_degree)
        throw Error("truncation bound below the quasi-isomorphism cutoff");
    // The dropped part must be a subcomplex.
    if (cut.bl_max_degree > cut.tl_max_k + i || cut.br_max_degree > cut.tr_max_k + i - 1 ||
        cut.br_max_degree > cut.bl_max_degree || cut.tr_max_k > cut.tl_max_k + 1)
        throw Error("cutoffs do not define a quotient complex");
    if (i == 0 && !(cut == base)) throw Error("weight 0 is only modelled at its minimal truncation");

    SquareComplex sq;
    sq.p = p;
    sq.weight = i;
    sq.tl.corner = Corner::TL;
    sq.tr.corner = Corner::TR;
    sq.bl.corner = Corner::BL;
    sq.br.corner = Corner::BR;
    sq.tl.weight = sq.tr.weight = sq.bl.weight = sq.br.weight = i;

    for (std::int64_t k = 0; k <= cut.tl_max_k; ++k) sq.tl.push(tl_label(i, k), {k + i});
    if (i >= 1)
        for (std::int64_t k = 1; k <= cut.tr_max_k; ++k) sq.tr.push(tr_label(i, k), {k + i - 1});
    for (std::int64_t m = 0; m <= cut.bl_max_degree; ++m) sq.bl.push(bl_label(i, m), {m});
    for (std::int64_t m = 0; m + 1 <= cut.br_max_degree; ++m) sq.br.push(br_label(i, m), {m + 1});

    const std::int64_t P = p;
    const auto n_tr = sq.tr.size(), n_bl = sq.bl.size(), n_br = sq.br.size();

    for (std::int64_t k = 0; k <= cut.tl_max_k; ++k) {
        // can(z^k E^i) = z^(k+i), phi(z^k E^i) = z^(pk)
        std::map<std::int64_t, std::int64_t> c;
        c[k + i] += 1;
        c[P * k] -= 1;
        sq.v_left.push_back(exact(c, n_bl, p));

        // nabla(z^k E^i) = 0 mod F^(k+1); v1^k itself is a cocycle on the nose.
        SymbolicSeries top;
        if (P * k != k + i && static_cast<std::size_t>(k) < n_tr) top.tail_from = static_cast<std::size_t>(k);
        sq.nabla_top.push_back(top);
    }
    for (std::int64_t m = 0; m <= cut.bl_max_degree; ++m) {
        // nabla(z^m) = m z^(m-1) dz mod F^(m+1)
        SymbolicSeries bot;
        if (i > 0) {
            if (m >= 1) bot = exact({{m - 1, m}}, n_br, p);
            if (static_cast<std::size_t>(m) < n_br) bot.tail_from = static_cast<std::size_t>(m);
        }
        sq.nabla_bot.push_back(bot);
    }
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(n_tr); ++k) {
        // can = z^(k+i-2) dz exactly; phi^nabla = z^(pk-1) dz mod F^(pk+1)
        const std::int64_t tail = P * k;
        std::map<std::int64_t, std::int64_t> c;
        if (k + i - 2 < tail) c[k + i - 2] += 1;
        c[P * k - 1] -= 1;
        auto s = exact(c, n_br, p);
        if (static_cast<std::size_t>(tail) < n_br) s.tail_from = static_cast<std::size_t>(tail);
        sq.v_right.push_back(s);
    }
    sq.validate();
    return sq;
}

std::vector<NamedClass> predicted_classes(std::uint32_t p, std::int64_t i)
{
    check_weight(p, i);
    const std::int64_t P = p, q = p - 1;
    const auto tr_size = corner_counts(zp_cutoffs(p, i)).tr;
    std::vector<NamedClass> out;
    auto add = [&](std::string name, int deg, Corner c, std::int64_t idx, Monomial label) {
        NamedClass nc{std::move(name), i, deg, c, static_cast<std::size_t>(idx), std::move(label), {}};
        out.push_back(std::move(nc));
        return &out.back();
    };
    if (i % q == 0) {
        const auto k = i / q;
        add(class_name(k, ""), 0, Corner::TL, k, tl_label(i, k))->representative = {{Corner::TL, single(k)}};
        add(class_name(k, "∂"), 1, Corner::BL, P * k, bl_label(i, P * k))->representative = {
            {Corner::BL, single(P * k)}};
    }
    for (std::int64_t j = 1; j <= q; ++j) {
        if (i < j || (i - j) % q != 0) continue;
        const auto k = (i - j) / q;
        auto* nc = add(class_name(k, "γ" + std::to_string(j)), 1, Corner::BL, j + P * k, bl_label(i, j + P * k));
        nc->representative = {{Corner::BL, single(j + P * k)}};
        if (tr_size > 0) {
            SymbolicSeries corr;
            corr.tail_from = 0;
            nc->representative.push_back({Corner::TR, corr});
        }
    }
    if (i >= P && (i - P) % q == 0) {
        const auto k = (i - P) / q;
        auto* lam = add(class_name(k, "λ1"), 1, Corner::TR, k, tr_label(i, k + 1));
        auto s = single(k);
        s.tail_from = k + 1;
        lam->representative = {{Corner::TR, s}};
        add(class_name(k, "∂λ1"), 2, Corner::BR, P * (k + 1) - 1, br_label(i, P * (k + 1) - 1))->representative = {
            {Corner::BR, single(P * (k + 1) - 1)}};
    }
    return out;
}

CohomologyDims closed_form_dims(std::uint32_t p, std::int64_t i)
{
    CohomologyDims d;
    for (const auto& c : predicted_classes(p, i)) {
        if (c.cohom_degree == 0) ++d.h0;
        if (c.cohom_degree == 1) ++d.h1;
        if (c.cohom_degree == 2) ++d.h2;
    }
    return d;
}

ZpCohomology zp_cohomology(std::uint32_t p, std::int64_t i)
{
    return run(build_zp_square(p, i), predicted_classes(p, i));
}

SquareComplex mod_v1_square(std::uint32_t p, std::int64_t i)
{
    check_weight(p, i);
    auto sq = build_zp_square(p, i);
    if (i < static_cast<std::int64_t>(p) - 1) return sq;
    // v1 multiplication from weight i-(p-1) hits TL_(k>=1), TR_(k>=2), and z^(m>=p)
    // in both bottom corners; what is left is the quotient.
    CornerCounts keep{1, std::min<std::size_t>(sq.tr.size(), 1), p, std::min<std::size_t>(sq.br.size(), p)};
    return truncate(sq, keep);
}

std::vector<NamedClass> predicted_mod_v1_classes(std::uint32_t p, std::int64_t i)
{
    check_weight(p, i);
    const std::int64_t P = p;
    if (i < P - 1) return predicted_classes(p, i);
    std::vector<NamedClass> out;
    for (auto& c : predicted_classes(p, i)) {
        const bool keep = (i == P - 1 && c.name == "γ" + std::to_string(P - 1)) ||
                          (i == P && (c.name == "λ1" || c.name == "∂λ1"));
        if (keep) out.push_back(std::move(c));
    }
    return out;
}

ZpCohomology mod_v1_cohomology(std::uint32_t p, std::int64_t i)
{
    return run(mod_v1_square(p, i), predicted_mod_v1_classes(p, i));
}

std::vector<WeightRow> syntomic_basis_table(std::uint32_t p, std::int64_t i_max)
{
    if (i_max < 0) throw Error("iMax must be nonnegative");
    std::vector<WeightRow> rows;
    for (std::int64_t i = 0; i <= i_max; ++i) {
        auto classes = predicted_classes(p, i);
        const auto expected = closed_form_dims(p, i);
        const auto got = zp_cohomology(p, i).report.dims;
        if (!(expected == got)) throw std::logic_error("basis table mismatch at weight " + std::to_string(i));
        rows.push_back({i, got, std::move(classes)});
    }
    return rows;
}

std::optional<CornerCochain> multiply_by_partial(std::uint32_t p, std::int64_t i, const CornerCochain& x)
{
    check_weight(p, i);
    if (x.corner == Corner::BL || x.corner == Corner::BR) return std::nullopt;
    if (x.series.tail_from) throw Error("product with ∂ needs an explicit cochain");
    const std::int64_t P = p;
    CornerCochain out;
    if (x.corner == Corner::TL) {
        out.corner = Corner::BL;
        for (const auto& [k, c] : x.series.terms) out.series.set(P * k, c);
        return out;
    }
    // TR index r holds z^(k-1) E^(i-1) dz with k = r + 1. Only the leading term of
    // phi^nabla is known, so the lowest input term's tail swallows the rest.
    out.corner = Corner::BR;
    const auto lead = x.series.leading_term();
    if (!lead) return out;
    if (lead->second.kind != ScalarKind::Known) throw Error("product with ∂ on a symbolic coefficient");
    const auto k = static_cast<std::int64_t>(lead->first) + 1;
    out.series.set(P * k - 1, SymbolicScalar::known(mod_p(-static_cast<std::int64_t>(lead->second.value), p)));
    out.series.tail_from = P * k;
    return out;
}

CornerCochain multiply_by_v1(std::uint32_t p, const CornerCochain& x)
{
    const std::size_t shift = (x.corner == Corner::TL || x.corner == Corner::TR) ? 1 : p;
    CornerCochain out{x.corner, {}};
    for (const auto& [idx, c] : x.series.terms) out.series.set(idx + shift, c);
    if (x.series.tail_from) out.series.tail_from = *x.series.tail_from + shift;
    return out;
}

}  // namespace syntomic
