#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "syntomic/arith.hpp"

using namespace syntomic;

namespace {

Monomial mono(std::int64_t e, std::int64_t z, std::map<std::int64_t, std::int64_t> f, bool dz = false, std::int64_t twist = 0)
{
    Monomial m;
    m.ePow = e;
    m.zPow = z;
    for (auto [u, x] : f) m.set_f(u, x);
    m.nablaZ = dz;
    m.twist = twist;
    return m;
}

}  // namespace

TEST_CASE("primality and modular helpers")
{
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK(mod_p(-1, 5) == 4);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS_AS(ipow(10, 30), Error);
}

TEST_CASE("PrimeContext validates its inputs")
{
    CHECK_THROWS_AS(PrimeContext::base(4), Error);
    CHECK_THROWS_AS(PrimeContext(3, 0, RingMode::Quotient), Error);
    CHECK_NOTHROW(PrimeContext::quotient(3, 2));
}

TEST_CASE("f_degree examples")
{
    const auto c32 = PrimeContext::quotient(3, 2);
    CHECK(f_degree(mono(0, 1, {{0, 1}, {1, 1}}, true, 5), c32).value == 10);
    const auto c23 = PrimeContext::quotient(2, 3);
    CHECK(f_degree(mono(0, 2, {{0, 1}, {1, 1}}), c23).value == 11);
    CHECK(f_degree(mono(0, 0, {}, false, 7), c23).value == 0);
    CHECK(f_degree(mono(0, 0, {}, false, 7), PrimeContext::base(5)).value == 0);
}

TEST_CASE("f-generators are rejected over Z_p")
{
    CHECK_THROWS_AS(f_degree(mono(0, 0, {{0, 1}}), PrimeContext::base(3)), Error);
    CHECK_THROWS_AS(normal_form(mono(0, 0, {{0, 1}}), PrimeContext::base(3)), Error);
}

TEST_CASE("mixed_radix_monomial examples")
{
    const auto c = PrimeContext::quotient(2, 2);
    CHECK(mixed_radix_monomial({5}, c) == mono(0, 1, {{1, 1}}));
    CHECK(mixed_radix_monomial({7}, c) == mono(0, 1, {{0, 1}, {1, 1}}));
    CHECK(mixed_radix_monomial({0}, PrimeContext::quotient(5, 3)) == Monomial{});
    CHECK_THROWS_AS(mixed_radix_monomial({1}, PrimeContext::base(2)), Error);
}

TEST_CASE("mixed-radix bijectivity up to 10^4")
{
    for (auto [p, n] : {std::pair{2u, 2u}, {2u, 5u}, {3u, 2u}, {3u, 4u}, {5u, 3u}, {7u, 6u}}) {
        CAPTURE(p);
        CAPTURE(n);
        const auto ctx = PrimeContext::quotient(p, n);
        std::set<std::string> seen;
        bool ok = true;
        for (std::int64_t j = 0; j < 10000; ++j) {
            const auto m = mixed_radix_monomial({j}, ctx);
            const auto [z, f] = oracle::mixed_radix(j, p, n);
            ok = ok && m.zPow == z && m.fExp == f && is_normal_form(m, ctx) && f_degree(m, ctx).value == j &&
                 mixed_radix_index(m, ctx).value == j && seen.insert(m.to_string()).second;
        }
        CHECK(ok);
    }
}

TEST_CASE("nygaard_E_power examples")
{
    CHECK(nygaard_E_power(3, mono(0, 0, {{0, 1}}), 2) == 2);
    CHECK(nygaard_E_power(2, mono(0, 0, {{1, 1}}), 2) == 0);
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t k = 0; k < 4; ++k) CHECK(nygaard_E_power(i, mono(0, k, {}), 5) == i);
    CHECK_THROWS_AS(nygaard_E_power(1, mono(1, 0, {}), 2), Error);
}

TEST_CASE("degree additivity of formal products")
{
    const auto ctx = PrimeContext::quotient(3, 3);
    std::vector<Monomial> ms;
    for (std::int64_t e = 0; e < 3; ++e)
        for (std::int64_t z = 0; z < 5; ++z)
            for (std::int64_t f0 = 0; f0 < 3; ++f0)
                for (std::int64_t f2 = 0; f2 < 2; ++f2) ms.push_back(mono(e, z, {{0, f0}, {2, f2}}, false, 1));
    bool ok = true;
    for (const auto& a : ms)
        for (const auto& b : ms) ok = ok && f_degree(a * b, ctx) == f_degree(a, ctx) + f_degree(b, ctx);
    CHECK(ok);
    CHECK((mono(0, 0, {}, true) * mono(0, 1, {})).nablaZ);
    CHECK_THROWS_AS(mono(0, 0, {}, true) * mono(0, 0, {}, true), Error);
}

TEST_CASE("normal form agrees with exhaustive rewriting and keeps the degree")
{
    for (auto [p, n] : {std::pair{2u, 2u}, {2u, 4u}, {3u, 2u}, {5u, 3u}}) {
        const auto ctx = PrimeContext::quotient(p, n);
        for (std::int64_t z = 0; z < 60; ++z)
            for (std::int64_t f0 = 0; f0 < static_cast<std::int64_t>(p); ++f0) {
                const auto m = mono(0, z, {{0, f0}, {1, 1}});
                const auto got = normal_form(m, ctx);
                const auto want = oracle::normal_form(z, m.fExp, p, n);
                REQUIRE(got.has_value() == want.has_value());
                if (got) {
                    CHECK(got->zPow == want->first);
                    CHECK(got->fExp == want->second);
                    CHECK(f_degree(*got, ctx) == f_degree(m, ctx));
                    CHECK(is_normal_form(*got, ctx));
                }
            }
    }
    // z^8 over Z/2^4 would need f_0^2.
    CHECK_FALSE(normal_form(mono(0, 8, {}), PrimeContext::quotient(2, 4)).has_value());
}

TEST_CASE("monomial printing")
{
    CHECK(mono(2, 1, {{0, 1}, {1, 2}}, true, 3).to_string() == "E^2*z^1*f0*f1^2*dz*t^-3");
    CHECK(Monomial{}.to_string() == "1*t^-0");
}
