#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "syntomic/ktheory.hpp"

using namespace syntomic;

namespace {

std::set<std::int64_t> nonzero(const std::vector<KTableRow>& rows)
{
    std::set<std::int64_t> s;
    for (const auto& r : rows)
        if (r.nonzero) s.insert(r.i);
    return s;
}

bool has(const std::vector<AxiomTag>& tags, AxiomId id)
{
    for (const auto& t : tags)
        if (t.id == id && t.used) return true;
    return false;
}

}  // namespace

TEST_CASE("h2_basis examples")
{
    const auto a = h2_basis(3, 2);
    REQUIRE(a.classes.size() == 1);
    CHECK(a.classes[0].name == "∂λ1");
    CHECK(a.classes[0].weight == 3);
    CHECK(a.torsion_order == 1);

    const auto b = h2_basis(2, 4);
    REQUIRE(b.classes.size() == 4);
    for (std::int64_t k = 0; k < 4; ++k) CHECK(b.classes[k].weight == 2 + k);
    CHECK(b.classes[3].name == "v1^3∂λ1");

    const auto c = h2_basis(5, 2);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].weight == 5);

    CHECK(has(a.axioms, AxiomId::HLS_SURJECTIVITY));
    CHECK(has(a.axioms, AxiomId::HLS_CRYSTALLINITY));
    CHECK_FALSE(has(a.axioms, AxiomId::LIU_WANG_H2));
}

TEST_CASE("h2_basis refuses without a verified certificate")
{
    auto cert = certify_vanishing(3, 3);
    cert.verified = false;
    CHECK_THROWS_AS(h2_basis(3, 3, cert), Error);
    CHECK_THROWS_AS(h2_basis(3, 2, certify_vanishing(3, 3)), Error);
}

TEST_CASE("torsion order p^(n-2)")
{
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t n = 2; n <= 6; ++n) CHECK(h2_basis(p, n).classes.size() == static_cast<std::size_t>(oracle::pw(p, n - 2)));
}

TEST_CASE("k_even_table examples")
{
    CHECK(nonzero(k_even_table(2, 2, 4)) == std::set<std::int64_t>{0, 1});
    CHECK(nonzero(k_even_table(3, 3, 8)) == std::set<std::int64_t>{0, 2, 4, 6});
    CHECK(nonzero(k_even_table(5, 2, 10)) == std::set<std::int64_t>{0, 4});
    CHECK(k_even_table(3, 2, 0).size() == 1);
    CHECK_THROWS_AS(k_even_table(3, 1, 4), Error);
    CHECK_THROWS_AS(k_even_table(3, 2, -1), Error);
}

TEST_CASE("k_even_table matches the H^2 basis and tags its axioms")
{
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t n = 2; n <= 4; ++n) {
            const std::int64_t t = oracle::pw(p, n - 2);
            const auto rows = k_even_table(p, n, 2 * (p - 1) * t);
            std::set<std::int64_t> want{0};
            for (std::int64_t k = 0; k < t; ++k) want.insert((k + 1) * (p - 1));
            CHECK(nonzero(rows) == want);
            for (const auto& r : rows) {
                if (r.i == 0) {
                    CHECK(r.axioms.empty());
                } else if (r.nonzero) {
                    CHECK(r.reason == RowReason::SHARP_RANGE);
                    CHECK(has(r.axioms, AxiomId::HLS_CRYSTALLINITY));
                } else {
                    CHECK(r.reason == RowReason::BEYOND_TORSION);
                    CHECK(has(r.axioms, AxiomId::HLS_SURJECTIVITY));
                }
            }
        }
}

TEST_CASE("v1_nilpotence_order")
{
    CHECK(v1_nilpotence_order(3, 2).order == 4);
    CHECK(v1_nilpotence_order(2, 3).order == 7);
    const auto five = v1_nilpotence_order(5, 2);
    CHECK(five.order - 1 == 5);
    CHECK(five.exceeds_torsion);
    CHECK(five.homotopy_valid);
    CHECK_FALSE(v1_nilpotence_order(3, 2).homotopy_valid);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t n = 1; n <= 6; ++n) {
            const auto o = v1_nilpotence_order(p, n);
            CHECK(o.order == (oracle::pw(p, n) - 1) / (p - 1));
            CHECK(o.weight_identity);
            CHECK(o.exceeds_torsion);
        }
}

TEST_CASE("bound_comparison")
{
    const auto a = bound_comparison(2, 2);
    CHECK(a.old_bound_k_index == 12);
    CHECK(a.old_bound_index == 13);
    CHECK(a.sharp_bound == 1);
    const auto b = bound_comparison(3, 2);
    CHECK(b.old_bound_index == 19);
    CHECK(b.sharp_bound == 2);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        CHECK(bound_comparison(p, 2).sharp_bound == p - 1);
        for (std::uint32_t n = 2; n <= 6; ++n) {
            const auto c = bound_comparison(p, n);
            CHECK(c.sharp_bound < c.old_bound_k_index);
            // (old - 1) is the least integer >= p^2 (p^n - 1) / (p-1)^2
            const std::int64_t num = oracle::pw(p, 2) * (oracle::pw(p, n) - 1), den = (p - 1) * (p - 1);
            CHECK((c.old_bound_index - 1) * den >= num);
            CHECK((c.old_bound_index - 2) * den < num);
        }
    }
}

TEST_CASE("rendered tables")
{
    CHECK(render_ktable(2, 2, 2, OutputFormat::Csv) == "i,nonzero\n0,true\n1,true\n2,false\n");
    const auto j = nlohmann::json::parse(render_ktable(5, 2, 10, OutputFormat::Json));
    CHECK(j["p"] == 5);
    CHECK(j["n"] == 2);
    REQUIRE(j["rows"].size() == 11);
    CHECK(j["rows"][4]["nonzero"] == true);
    CHECK(j["rows"][4]["axioms"][0] == "HLS_CRYSTALLINITY");
    CHECK(j["certificates"][0]["verified"] == true);
    CHECK(j["certificates"][0]["independent_check"] == true);
    const auto md = render_ktable(3, 2, 3, OutputFormat::Markdown);
    CHECK(md.find("| 2 | nonzero | SHARP_RANGE | HLS_CRYSTALLINITY |") != std::string::npos);
    CHECK(render_ktable(3, 3, 8, OutputFormat::Json) == render_ktable(3, 3, 8, OutputFormat::Json));
    CHECK_THROWS_AS(parse_format("xml"), Error);
}
