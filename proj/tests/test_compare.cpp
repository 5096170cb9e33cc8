#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gridcomm/compare.hpp"
#include "gridcomm/error.hpp"

using namespace gridcomm;
using namespace gridcomm::testing;

namespace {

const ComparisonEntry& entry(const ComparisonReport& r, const std::string& name) {
    for (const auto& e : r.entries)
        if (e.name == name) return e;
    FAIL("missing entry " << name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("a profile matches itself") {
    const auto p = statistics_profile(backbone_fixture());
    const auto r = compare_profiles(p, p, ToleranceSpec{0, 0, 0, 0, 0});
    CHECK(r.pass);
    for (const auto& e : r.entries) CHECK(e.delta == 0.0);
    // 2 scalars + 6x5 matrix + 6 ADL + 5 AEBC
    CHECK(r.entries.size() == 2 + 30 + 6 + 5);
}

TEST_CASE("ratio outside tolerance fails") {
    StatisticsProfile ref, cand;
    ref.plc_fiber_ratio = 0.3821;
    cand.plc_fiber_ratio = 0.40;
    ToleranceSpec tol;
    tol.ratio = 0.01;
    const auto r = compare_profiles(ref, cand, tol);
    const auto& e = entry(r, "plc_fiber_ratio");
    CHECK(e.delta == doctest::Approx(0.0179));
    CHECK_FALSE(e.pass);
    CHECK_FALSE(r.pass);
}

TEST_CASE("missing keys compare against zero") {
    StatisticsProfile ref, cand;
    ref.adl[NodeType::generating] = 2.0;
    ToleranceSpec tol;
    tol.adl = 0.1;
    const auto r = compare_profiles(ref, cand, tol);
    const auto& e = entry(r, "adl.generating");
    CHECK(e.candidate == 0.0);
    CHECK(e.delta == 2.0);
    CHECK_FALSE(e.pass);

    ref.degree_types.cells[NodeType::office][EdgeType::leased] = 0.3;
    const auto& cell = entry(compare_profiles(ref, cand, tol), "degree_type_matrix.office.leased");
    CHECK(cell.delta == doctest::Approx(0.3));
}

TEST_CASE("aebc tolerance is relative to the reference") {
    StatisticsProfile ref, cand;
    ref.aebc[EdgeType::microwave] = 4000.0;
    cand.aebc[EdgeType::microwave] = 4300.0;
    ToleranceSpec tol;
    tol.aebc_relative = 0.1;
    const auto& pass = entry(compare_profiles(ref, cand, tol), "aebc.microwave");
    CHECK(pass.limit == doctest::Approx(400.0));
    CHECK(pass.pass);
    tol.aebc_relative = 0.05;
    CHECK_FALSE(entry(compare_profiles(ref, cand, tol), "aebc.microwave").pass);
}

TEST_CASE("negative tolerances are rejected") {
    ToleranceSpec tol;
    tol.skewness = -0.1;
    CHECK_THROWS_AS(compare_profiles({}, {}, tol), PreconditionError);
}

TEST_CASE("delta symmetry and tolerance monotonicity") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = statistics_profile(random_network(rng, {.min_nodes = 3, .max_nodes = 20}),
                                          std::vector<std::string>{"n000"});
        const auto b = statistics_profile(random_network(rng, {.min_nodes = 3, .max_nodes = 20}),
                                          std::vector<std::string>{"n001"});
        ToleranceSpec tol{unit(rng) * 0.1, unit(rng) * 0.1, unit(rng), unit(rng), unit(rng)};

        const auto ab = compare_profiles(a, b, tol);
        const auto ba = compare_profiles(b, a, tol);
        REQUIRE(ab.entries.size() == ba.entries.size());
        for (std::size_t i = 0; i < ab.entries.size(); ++i) {
            CHECK(ab.entries[i].name == ba.entries[i].name);
            CHECK(ab.entries[i].delta == ba.entries[i].delta);
            if (ab.entries[i].metric != "aebc_relative") CHECK(ab.entries[i].pass == ba.entries[i].pass);
        }

        ToleranceSpec wider{tol.matrix_cell * 2, tol.ratio * 2, tol.adl * 2, tol.skewness * 2, tol.aebc_relative * 2};
        const auto widened = compare_profiles(a, b, wider);
        for (std::size_t i = 0; i < ab.entries.size(); ++i)
            if (ab.entries[i].pass) CHECK(widened.entries[i].pass);
        if (ab.pass) CHECK(widened.pass);
    }
}

TEST_CASE("text report") {
    StatisticsProfile ref, cand;
    ref.plc_fiber_ratio = 0.5;
    cand.plc_fiber_ratio = 0.25;
    const auto text = report_to_text(compare_profiles(ref, cand, ToleranceSpec{}));
    CHECK(text.find("plc_fiber_ratio   0.500000   0.250000  0.250000  0.020000  FAIL") != std::string::npos);
    CHECK(text.find("overall: FAIL (1/2 within tolerance)") != std::string::npos);
}
