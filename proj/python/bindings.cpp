#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syntomic/certificate.hpp"
#include "syntomic/ktheory.hpp"
#include "syntomic/verifier.hpp"
#include "syntomic/zp_square.hpp"
#include "syntomic/zpn_square.hpp"

namespace py = pybind11;
using namespace syntomic;

namespace {

py::dict cohomology_dict(const ZpCohomology& zc)
{
    py::dict gens;
    for (int d = 0; d <= 2; ++d) {
        py::list names;
        for (const auto& c : zc.classes)
            if (c.cohom_degree == d) names.append(c.name);
        gens[py::int_(d)] = names;
    }
    py::dict out;
    out["dims"] = py::make_tuple(zc.report.dims.h0, zc.report.dims.h1, zc.report.dims.h2);
    out["generators"] = gens;
    out["certified"] = zc.report.certified();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Mod p syntomic cohomology of Z_p and Z/p^n";
    py::register_exception<Indeterminate>(m, "IndeterminateError", PyExc_RuntimeError);

    m.def("zp_cohomology", [](std::uint32_t p, std::int64_t i) { return cohomology_dict(zp_cohomology(p, i)); },
          py::arg("p"), py::arg("i"));
    m.def("mod_v1_cohomology", [](std::uint32_t p, std::int64_t i) { return cohomology_dict(mod_v1_cohomology(p, i)); },
          py::arg("p"), py::arg("i"));
    m.def("closed_form_dims", [](std::uint32_t p, std::int64_t i) {
        const auto d = closed_form_dims(p, i);
        return py::make_tuple(d.h0, d.h1, d.h2);
    });

    m.def("mixed_radix", [](std::uint32_t p, std::uint32_t n, std::int64_t j) {
        const auto mono = mixed_radix_monomial({j}, PrimeContext::quotient(p, n));
        return py::make_tuple(mono.zPow, mono.fExp);
    }, py::arg("p"), py::arg("n"), py::arg("j"));

    m.def("certificate_json", [](std::uint32_t p, std::uint32_t n) { return certificate_to_json(certify_vanishing(p, n)).dump(); },
          py::arg("p"), py::arg("n"));
    m.def("verify_certificate_json", [](const std::string& text) {
        const auto r = verify_certificate_json(nlohmann::json::parse(text));
        return py::make_tuple(r.ok, r.failures);
    });
    m.def("sample_certificate", [](std::uint32_t p, std::uint32_t n, int samples, std::uint64_t seed) {
        const auto cert = certify_vanishing(p, n);
        std::mt19937_64 rng(seed);
        int ok = 0;
        for (int s = 0; s < samples; ++s) ok += sample_chain_membership(cert, rng);
        return ok;
    }, py::arg("p"), py::arg("n"), py::arg("samples") = 100, py::arg("seed") = 1);

    m.def("k_even_table", [](std::uint32_t p, std::uint32_t n, std::int64_t i_max) {
        py::list rows;
        for (const auto& r : k_even_table(p, n, i_max)) {
            py::list axioms;
            for (const auto& a : r.axioms) axioms.append(to_string(a.id));
            py::dict row;
            row["i"] = r.i;
            row["nonzero"] = r.nonzero;
            row["reason"] = to_string(r.reason);
            row["axioms"] = axioms;
            rows.append(row);
        }
        return rows;
    }, py::arg("p"), py::arg("n"), py::arg("i_max"));
    m.def("h2_basis", [](std::uint32_t p, std::uint32_t n) {
        std::vector<std::pair<std::string, std::int64_t>> out;
        for (const auto& c : h2_basis(p, n).classes) out.emplace_back(c.name, c.weight);
        return out;
    }, py::arg("p"), py::arg("n"));
    m.def("v1_nilpotence_order", [](std::uint32_t p, std::uint32_t n) { return v1_nilpotence_order(p, n).order; },
          py::arg("p"), py::arg("n"));
    m.def("bound_comparison", [](std::uint32_t p, std::uint32_t n) {
        const auto b = bound_comparison(p, n);
        py::dict d;
        d["old_bound_index"] = b.old_bound_index;
        d["old_bound_k_index"] = b.old_bound_k_index;
        d["sharp_bound"] = b.sharp_bound;
        return d;
    }, py::arg("p"), py::arg("n"));
    m.def("render_ktable", [](std::uint32_t p, std::uint32_t n, std::int64_t i_max, const std::string& format) {
        return render_ktable(p, n, i_max, parse_format(format));
    }, py::arg("p"), py::arg("n"), py::arg("i_max"), py::arg("format") = "json");
}
