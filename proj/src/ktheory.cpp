#include "syntomic/ktheory.hpp"

#include <sstream>
#include <stdexcept>

#include "syntomic/certificate.hpp"
#include "syntomic/verifier.hpp"

namespace syntomic {

std::string to_string(AxiomId id)
{
    switch (id) {
    case AxiomId::HLS_SURJECTIVITY: return "HLS_SURJECTIVITY";
    case AxiomId::HLS_CRYSTALLINITY: return "HLS_CRYSTALLINITY";
    case AxiomId::LIU_WANG_H2: return "LIU_WANG_H2";
    }
    throw Error("unknown axiom id");
}

AxiomTag axiom(AxiomId id, bool used)
{
    switch (id) {
    case AxiomId::HLS_SURJECTIVITY:
        return {id, "For n >= 2 the map H^2(F_p(i)(Z_p)) -> H^2(F_p(i)(Z/p^n)) is surjective.", used};
    case AxiomId::HLS_CRYSTALLINITY:
        return {id, "F_p(*)(R)/v1^(p^(n-2)) depends only on the derived mod p^n reduction of R.", used};
    case AxiomId::LIU_WANG_H2:
        return {id, "H^2(F_p(*)(Z_p)) is the free F_p[v1]-module on the class λ1∂.", used};
    }
    throw Error("unknown axiom id");
}

std::vector<AxiomTag> axiom_catalog()
{
    return {axiom(AxiomId::HLS_SURJECTIVITY, false), axiom(AxiomId::HLS_CRYSTALLINITY, false),
            axiom(AxiomId::LIU_WANG_H2, false)};
}

std::string to_string(RowReason r)
{
    return r == RowReason::SHARP_RANGE ? "SHARP_RANGE" : "BEYOND_TORSION";
}

H2Basis h2_basis(std::uint32_t p, std::uint32_t n, const VanishingCertificate& cert)
{
    if (n < 2) throw Error("n must be at least 2");
    if (cert.p != p || cert.n != n) throw Error("certificate is for a different (p, n)");
    if (!cert.verified) throw Error("refusing to emit H^2 without a verified vanishing certificate");
    H2Basis b;
    b.torsion_order = ipow(p, n - 2);
    for (std::int64_t k = 0; k < b.torsion_order; ++k) {
        const std::int64_t w = p + k * (p - 1);
        bool found = false;
        for (auto& c : predicted_classes(p, w))
            if (c.cohom_degree == 2) {
                b.classes.push_back(std::move(c));
                found = true;
                break;
            }
        if (!found) throw std::logic_error("no ∂λ1 class in weight " + std::to_string(w));
    }
    b.axioms = {axiom(AxiomId::HLS_SURJECTIVITY), axiom(AxiomId::HLS_CRYSTALLINITY)};
    return b;
}

H2Basis h2_basis(std::uint32_t p, std::uint32_t n)
{
    return h2_basis(p, n, certify_vanishing(p, n));
}

std::vector<KTableRow> k_even_table(std::uint32_t p, std::uint32_t n, std::int64_t i_max)
{
    if (!is_prime(p)) throw Error("p is not prime");
    if (n < 2) throw Error("n must be at least 2");
    if (i_max < 0) throw Error("iMax must be nonnegative");
    const auto basis = h2_basis(p, n);
    const std::int64_t sharp = (p - 1) * ipow(p, n - 2);

    std::vector<KTableRow> rows;
    for (std::int64_t i = 0; i <= i_max; ++i) {
        KTableRow r;
        r.i = i;
        r.nonzero = i % (p - 1) == 0 && i <= sharp;
        if (i >= 1) {
            // K_{2i} is H^2 in weight i+1, spanned by the v1^k ∂λ1 of that weight.
            bool in_basis = false;
            for (const auto& c : basis.classes) in_basis = in_basis || c.weight == i + 1;
            if (in_basis != r.nonzero)
                throw std::logic_error("K-table predicate disagrees with the H^2 basis at i = " + std::to_string(i));
        }
        if (r.nonzero) {
            r.reason = RowReason::SHARP_RANGE;
            if (i >= 1) r.axioms = {axiom(AxiomId::HLS_CRYSTALLINITY)};
        } else {
            r.reason = RowReason::BEYOND_TORSION;
            r.axioms = {axiom(AxiomId::HLS_SURJECTIVITY)};
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

NilpotenceOrder v1_nilpotence_order(std::uint32_t p, std::uint32_t n)
{
    if (!is_prime(p)) throw Error("p is not prime");
    if (n < 1) throw Error("n must be positive");
    NilpotenceOrder o;
    const std::int64_t pn = ipow(p, n);
    o.order = (pn - 1) / (p - 1);
    o.weight = (p - 1) * o.order;
    o.weight_identity = o.weight == pn - 1;
    o.exceeds_torsion = n < 2 || o.order - 1 >= ipow(p, n - 2);
    o.homotopy_valid = p >= 5;
    return o;
}

BoundComparison bound_comparison(std::uint32_t p, std::uint32_t n)
{
    if (!is_prime(p)) throw Error("p is not prime");
    if (n < 2) throw Error("n must be at least 2");
    const std::int64_t num = ipow(p, 2) * (ipow(p, n) - 1);
    const std::int64_t den = static_cast<std::int64_t>(p - 1) * (p - 1);
    BoundComparison b;
    b.old_bound_index = (num + den - 1) / den + 1;
    b.old_bound_k_index = b.old_bound_index - 1;
    b.sharp_bound = (p - 1) * ipow(p, n - 2);
    return b;
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "md") return OutputFormat::Markdown;
    throw Error("unknown format '" + s + "' (expected json, csv or md)");
}

namespace {

nlohmann::json axiom_ids(const std::vector<AxiomTag>& tags)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : tags) a.push_back(to_string(t.id));
    return a;
}

std::string join_ids(const std::vector<AxiomTag>& tags)
{
    std::string s;
    for (const auto& t : tags) s += (s.empty() ? "" : ", ") + to_string(t.id);
    return s.empty() ? "-" : s;
}

}  // namespace

nlohmann::json ktable_to_json(std::uint32_t p, std::uint32_t n, const std::vector<KTableRow>& rows,
                              const VanishingCertificate& cert)
{
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : rows)
        jr.push_back({{"i", r.i}, {"nonzero", r.nonzero}, {"reason", to_string(r.reason)}, {"axioms", axiom_ids(r.axioms)}});

    auto jc = certificate_to_json(cert);
    jc["independent_check"] = verify_certificate_json(jc).ok;

    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& a : axiom_catalog()) {
        bool used = false;
        for (const auto& r : rows)
            for (const auto& t : r.axioms) used = used || t.id == a.id;
        axioms.push_back({{"id", to_string(a.id)}, {"statement", a.statement}, {"used", used}});
    }

    const auto nil = v1_nilpotence_order(p, n);
    const auto bc = bound_comparison(p, n);
    return {
        {"p", p},
        {"n", n},
        {"rows", jr},
        {"certificates", nlohmann::json::array({jc})},
        {"axioms", axioms},
        {"v1_nilpotence",
         {{"order", nil.order}, {"weight", nil.weight}, {"weight_identity", nil.weight_identity},
          {"exceeds_torsion", nil.exceeds_torsion}, {"homotopy_valid", nil.homotopy_valid}}},
        {"bounds",
         {{"old_bound_index", bc.old_bound_index}, {"old_bound_k_index", bc.old_bound_k_index},
          {"sharp_bound", bc.sharp_bound}}},
    };
}

std::string render_ktable(std::uint32_t p, std::uint32_t n, std::int64_t i_max, OutputFormat fmt)
{
    const auto rows = k_even_table(p, n, i_max);
    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        os << ktable_to_json(p, n, rows, certify_vanishing(p, n)).dump(2) << '\n';
    } else if (fmt == OutputFormat::Csv) {
        os << "i,nonzero\n";
        for (const auto& r : rows) os << r.i << ',' << (r.nonzero ? "true" : "false") << '\n';
    } else {
        const auto nil = v1_nilpotence_order(p, n);
        const auto bc = bound_comparison(p, n);
        os << "# K_2i(Z/" << p << "^" << n << ")\n\n";
        os << "| i | K_2i | reason | axioms |\n|---|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r.i << " | " << (r.nonzero ? "nonzero" : "0") << " | " << to_string(r.reason) << " | "
               << join_ids(r.axioms) << " |\n";
        os << "\nv1 nilpotence order: " << nil.order << (nil.homotopy_valid ? "" : " (homotopy statement needs p >= 5)")
           << "\n";
        os << "Old bound: K_2i = 0 for i >= " << bc.old_bound_k_index << "\n";
        os << "Sharp bound: K_2i = 0 for i > " << bc.sharp_bound << "\n";
    }
    return os.str();
}

}  // namespace syntomic
