#include <doctest.h>

#include "htype/design_core.hpp"
#include "htype/examples.hpp"

using namespace htype;

namespace {

DesignMatrix pattern(const std::vector<std::vector<int>>& rows) {
    // entries as signed variable numbers, 0 for zero
    DesignMatrix d;
    d.n = static_cast<int>(rows.size());
    d.entries.assign(d.n, std::vector<DesignEntry>(d.n));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            const int v = rows[i][j];
            if (v) d.entries[i][j] = {std::abs(v), v > 0 ? 1 : -1};
            d.var_count = std::max(d.var_count, std::abs(v));
        }
    return d;
}

}  // namespace

TEST_CASE("from_family") {
    const auto d2 = from_family(build_positive(1, 1), true);
    CHECK(d2 == pattern({{1, -2}, {2, 1}}));
    const auto d4 = from_family(*example_family("omega1"), true);
    CHECK(d4.var_count == 4);
    CHECK(verify_od(d4, {1, 1, 1, 1}));
    const auto d8 = from_family(*example_family("octonion8"), true);
    CHECK(d8.var_count == 8);
    CHECK(verify_od(d8, std::vector<int>(8, 1)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(d8.entries[i][j].var != 0);
    CHECK_THROWS(design_from_matrices({identity(2), identity(2)}));
}

TEST_CASE("verify_od") {
    CHECK(verify_od(pattern({{1, 2}, {-2, 1}}), {1, 1}));
    CHECK_FALSE(verify_od(pattern({{1, 2}, {2, 1}}), {1, 1}));
    CHECK_FALSE(verify_od(pattern({{1, 2}, {-2, 1}}), {1, 2}));
}

TEST_CASE("verify_amicable") {
    CHECK(verify_amicable(pattern({{1, 0}, {0, 1}}), pattern({{1, 0}, {0, 1}})));
    CHECK(verify_amicable(pattern({{1, 2}, {2, -1}}), pattern({{1, 2}, {-2, 1}})));
    CHECK_FALSE(verify_amicable(pattern({{1, 0}, {0, 1}}), pattern({{0, -1}, {1, 0}})));
}

TEST_CASE("symbolic verdicts agree with numeric evaluation") {
    std::mt19937_64 rng(7);
    const std::vector<DesignMatrix> ds{pattern({{1, 2}, {-2, 1}}), pattern({{1, 2}, {2, 1}}),
                                       from_family(*example_family("octonion8"), true),
                                       from_family(build_positive(4, 8), true)};
    for (const auto& d : ds) {
        const std::vector<int> w(d.var_count, 1);
        CHECK(verify_od(d, w) == numeric_od_check(d, w, rng));
    }
    const auto x = pattern({{1, 0}, {0, 1}}), y = pattern({{0, -1}, {1, 0}});
    CHECK(verify_amicable(x, y) == numeric_amicable_check(x, y, rng));
}

TEST_CASE("verify_eta") {
    const auto pos = build_positive(3, 7);
    CHECK(verify_eta(pos, Metric(std::vector<int>(8, 1), 1)).matches_signature);
    const auto mixed = build_mixed(2, 1, 2);
    const auto rep = verify_eta(mixed, Metric(neutral_eta(4), 1));
    CHECK(rep.matches_signature);
    CHECK(rep.members.size() == 3);
    // symmetric member against a definite metric is an isometry, not anti
    const auto bad = verify_eta(mixed, Metric(std::vector<int>(4, 1), 1));
    CHECK_FALSE(bad.matches_signature);
    CHECK(bad.members[1].isometry);
    CHECK_FALSE(bad.members[1].anti_isometry);
}

TEST_CASE("max_variables and max_amicable_s") {
    CHECK(max_variables(8) == 8);
    CHECK(max_variables(12) == 4);
    CHECK(max_variables(7) == 1);
    CHECK(max_amicable_s(2, 1) == 1);
    CHECK(max_amicable_s(16, 2) == 6);
    CHECK_FALSE(max_amicable_s(4, 3).has_value());
    CHECK_THROWS(max_amicable_s(3, 1));
}

TEST_CASE("amicable pairs from mixed families") {
    for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 1}, {4, 1}, {4, 2}, {8, 3}, {16, 2}}) {
        const auto s = max_amicable_s(n, t);
        REQUIRE(s);
        const auto pair = amicable_from_family(build_for_order(n, *s - 1, t));
        INFO("n=" << n << " t=" << t);
        CHECK(pair.x.var_count == *s);
        CHECK(pair.y.var_count == t);
        CHECK(verify_amicable(pair.x, pair.y));
        CHECK(verify_od(pair.x, std::vector<int>(pair.x.var_count, 1)));
        CHECK(verify_od(pair.y, std::vector<int>(pair.y.var_count, 1)));
        const auto back = derived_family(pair.x, pair.y);
        CHECK(back.s == *s - 1);
        CHECK(back.t == t);
        CHECK(verify_family(back).pass);
    }
}

TEST_CASE("format_design") {
    CHECK(format_design(pattern({{1, -2}, {2, 1}})) == "[  x1 -x2 ]\n[  x2  x1 ]\n");
}
