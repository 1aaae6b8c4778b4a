#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "syntomic/certificate.hpp"
#include "syntomic/verifier.hpp"
#include "syntomic/zp_square.hpp"
#include "syntomic/zpn_square.hpp"

using namespace syntomic;

namespace {

Monomial mono(std::int64_t e, std::int64_t z, std::map<std::int64_t, std::int64_t> f, std::int64_t twist)
{
    Monomial m;
    m.ePow = e;
    m.zPow = z;
    for (auto [u, x] : f) m.set_f(u, x);
    m.twist = twist;
    return m;
}

}  // namespace

TEST_CASE("nygaard_truncation_bound")
{
    CHECK(nygaard_truncation_bound(3, 2, 6).value == 12);
    CHECK(nygaard_truncation_bound(2, 3, 2).value == 6);
    CHECK(nygaard_truncation_bound(2, 2, 2).value == 4);
    CHECK_THROWS_AS(nygaard_truncation_bound(2, 2, 0), Error);
}

TEST_CASE("v1^(p^(n-2)) ∂ representative")
{
    CHECK(v1_power_partial_representative(2, 2) == mono(0, 2, {}, 1));
    CHECK(v1_power_partial_representative(3, 2) == mono(0, 3, {}, 2));
    const auto z8 = v1_power_partial_representative(2, 4);
    CHECK(z8 == mono(0, 8, {}, 4));
    CHECK_FALSE(normal_form(z8, PrimeContext::quotient(2, 4)).has_value());
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t n = 2; n <= 6; ++n) CHECK(v1_power_partial_representative(p, n) == v1_power_partial_by_action(p, n));
    CHECK_THROWS_AS(v1_power_partial_representative(3, 1), Error);
}

TEST_CASE("can and phi on Nygaard elements")
{
    // phi(E^2 t^-2) = phi(E)^0 = 1 over Z/4
    const auto phi = apply_phi(mono(2, 0, {}, 2), 2);
    CHECK(phi.monomial == mono(0, 0, {}, 2));
    CHECK(phi.lambda.empty());
    CHECK(apply_can(mono(1, 0, {{0, 1}}, 2)) == mono(0, 1, {{0, 1}}, 2));
    const auto phi_f = apply_phi(mono(1, 2, {{0, 1}}, 2), 3);
    CHECK(phi_f.monomial == mono(0, 6, {{1, 1}}, 2));
    CHECK(phi_f.lambda == std::map<std::int64_t, std::int64_t>{{0, 1}});
    CHECK_THROWS_AS(apply_phi(mono(0, 3, {}, 2), 3), Error);
}

TEST_CASE("telescoping_step examples")
{
    const auto ctx32 = PrimeContext::quotient(3, 2);
    const auto a = telescoping_step(3, 2, 0);
    CHECK(a.element == mono(1, 0, {{0, 1}}, 2));
    CHECK(a.can_image == mono(0, 1, {{0, 1}}, 2));
    CHECK(f_degree(a.can_image, ctx32) == f_degree(mono(0, 3, {}, 2), ctx32));
    CHECK(a.phi_image == mono(0, 0, {{1, 1}}, 2));
    CHECK(a.phi_degree.value == 6);
    CHECK(a.ok());

    const auto b = telescoping_step(2, 3, 0);
    CHECK(b.element == mono(1, 0, {{0, 1}}, 2));
    CHECK(b.can_image == mono(0, 1, {{0, 1}}, 2));
    CHECK(b.phi_image == mono(0, 0, {{1, 1}}, 2));
    CHECK(b.phi_degree.value == 6);
    CHECK(b.ok());

    const auto c = telescoping_step(2, 4, 1);
    CHECK(c.side.index_in_range);
    CHECK(c.side.power_lhs == 2);
    CHECK(c.side.power_rhs == 2);
    CHECK(c.side.hold());

    CHECK_THROWS_AS(telescoping_step(2, 4, 3), Error);
    CHECK_THROWS_AS(telescoping_step(2, 4, -1), Error);
}

TEST_CASE("steps agree with the exponent oracle and ascend")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t n = 2; n <= 6; ++n)
            for (std::int64_t j = 0; j <= n - 2; ++j) {
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(j);
                const auto w = telescoping_step(p, n, j);
                const auto o = oracle::step(p, n, j);
                CHECK(w.element.ePow == o.e);
                CHECK(w.element.zPow == o.z);
                CHECK(w.can_image.zPow == o.can_z);
                CHECK(w.phi_image.zPow == o.phi_z);
                CHECK(w.phi_degree.value == o.phi_degree);
                CHECK(o.e >= 0);
                CHECK(o.z >= 0);
                CHECK(o.phi_z >= 0);
                CHECK(w.phi_degree > w.can_degree);
                CHECK(w.ok());
            }
}

TEST_CASE("certify_vanishing examples")
{
    const auto a = certify_vanishing(2, 2);
    CHECK(a.verified);
    CHECK(a.steps.size() == 1);
    CHECK(a.termination_step == 0);
    CHECK(a.target_rewritten == mono(0, 0, {{0, 1}}, 1));

    const auto b = certify_vanishing(3, 2);
    CHECK(b.verified);
    CHECK(b.steps.size() == 1);

    const auto c = certify_vanishing(2, 5);
    CHECK(c.verified);
    REQUIRE(c.steps.size() == 4);
    for (std::int64_t j = 0; j + 1 < 4; ++j)
        CHECK(oracle::step(2, 5, j).phi_z == oracle::step(2, 5, j + 1).can_z);

    CHECK(certify_vanishing(2, 3).termination_step == 0);
    CHECK(certify_vanishing(3, 4).termination_step == 2);
    CHECK_THROWS_AS(certify_vanishing(3, 1), Error);
    CHECK_THROWS_AS(certify_vanishing(6, 3), Error);
}

TEST_CASE("chain sampling on small certificates")
{
    std::mt19937_64 rng(99);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n = 2; n <= (p == 5 ? 4u : 5u); ++n) {
            const auto cert = certify_vanishing(p, n);
            int ok = 0;
            for (int s = 0; s < 100; ++s) ok += sample_chain_membership(cert, rng);
            CHECK(ok == 100);
        }
}

TEST_CASE("build_zpn_left_column examples")
{
    const auto lc = build_zpn_left_column(2, 2, 2, {4});
    REQUIRE(lc.bl.size() == 4);
    CHECK(lc.bl[0] == mono(0, 0, {}, 2));
    CHECK(lc.bl[1] == mono(0, 1, {}, 2));
    CHECK(lc.bl[2] == mono(0, 0, {{0, 1}}, 2));
    CHECK(lc.bl[3] == mono(0, 1, {{0, 1}}, 2));
    // E^2 t^-2: can = z^2 = f_0 (index 2), phi = 1 (index 0).
    CHECK(lc.tl[0] == mono(2, 0, {}, 2));
    REQUIRE(lc.resolved[0]);
    CHECK(*lc.v_left[0].at(0) == SymbolicScalar::known(1));
    CHECK(*lc.v_left[0].at(2) == SymbolicScalar::known(1));

    const auto lc3 = build_zpn_left_column(3, 2, 2, {4});
    // E f_0 t^-2: can = z f_0 (index 3), phi = lambda_0 f_1 beyond the bound.
    REQUIRE(lc3.tl[2] == mono(1, 0, {{0, 1}}, 2));
    CHECK(lc3.v_left[2].terms.size() == 1);
    CHECK(lc3.v_left[2].terms[0].first == 3);
    CHECK_FALSE(lc3.v_left[2].tail_from.has_value());

    CHECK_THROWS_AS(build_zpn_left_column(2, 2, 2, {5}), Error);
}

TEST_CASE("left-column elimination contains the target where it normalises")
{
    std::mt19937_64 rng(5);
    for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
        CAPTURE(p);
        CAPTURE(n);
        const auto cert = certify_vanishing(p, n);
        const auto lc = build_zpn_left_column(p, n, cert.weight, cert.truncation);
        const auto target = normal_form(cert.target, PrimeContext::quotient(p, n));
        REQUIRE(target.has_value());
        int ok = 0;
        for (int s = 0; s < 100; ++s) ok += sample_left_column_membership(lc, *target, rng);
        CHECK(ok == 100);
    }
}

TEST_CASE("Z/p^n left column agrees with Z_p below F-degree n")
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::int64_t i = 1; i <= 2 * static_cast<std::int64_t>(p); ++i) {
            const std::uint32_t n = 40;
            const auto sq = build_zp_square(p, i);
            const std::int64_t bound = std::min<std::int64_t>(n, sq.bl.size());
            const auto lc = build_zpn_left_column(p, n, i, {bound});
            for (std::size_t k = 0; k < sq.tl.size() && static_cast<std::int64_t>(k) < bound; ++k) {
                CAPTURE(p);
                CAPTURE(i);
                CAPTURE(k);
                CHECK(lc.tl[k] == sq.tl.entries[k]);
                REQUIRE(lc.resolved[k]);
                const auto want = sq.v_left[k].truncated(bound);
                const auto got = lc.v_left[k];
                for (std::int64_t r = 0; r < bound; ++r) {
                    const auto* a = want.at(r);
                    const auto* b = got.at(r);
                    const auto va = a ? *a : SymbolicScalar::known(0);
                    const auto vb = b ? *b : SymbolicScalar::known(0);
                    CHECK(va == vb);
                }
            }
        }
}

TEST_CASE("certificate JSON passes the independent verifier and tampering is caught")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u})
        for (std::uint32_t n = 2; n <= 6; ++n) {
            const auto rec = certificate_to_json(certify_vanishing(p, n));
            const auto r = verify_certificate_json(rec);
            CHECK(r.ok);
            CHECK(r.failures.empty());
        }
    const auto rec = certificate_to_json(certify_vanishing(3, 4));
    auto t1 = rec;
    t1["steps"][1]["can_image"]["z"] = 0;
    CHECK_FALSE(verify_certificate_json(t1).ok);
    auto t2 = rec;
    t2["termination"]["step"] = 0;
    CHECK_FALSE(verify_certificate_json(t2).ok);
    auto t3 = rec;
    t3["steps"].erase(2);
    CHECK_FALSE(verify_certificate_json(t3).ok);
    auto t4 = rec;
    t4["p"] = 4;
    CHECK_FALSE(verify_certificate_json(t4).ok);
    auto t5 = rec;
    t5["steps"][0]["element"]["E"] = 3;
    CHECK_FALSE(verify_certificate_json(t5).ok);
    CHECK_FALSE(verify_certificate_json(nlohmann::json::object()).ok);
}
