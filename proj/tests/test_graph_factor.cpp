#include <doctest.h>

#include "htype/examples.hpp"
#include "htype/graph_factor.hpp"
#include "htype/hr_family.hpp"

using namespace htype;

namespace {

// Independent union walk: alternate partners, count vertices per cycle.
std::vector<int> walk_cycles(const OneFactor& a, const OneFactor& b) {
    const int n = a.vertex_count();
    std::vector<int> pa(n + 1), pb(n + 1), lengths;
    for (auto [i, j] : a.pairs) pa[i] = j, pa[j] = i;
    for (auto [i, j] : b.pairs) pb[i] = j, pb[j] = i;
    std::vector<bool> seen(n + 1);
    for (int v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        int len = 0, x = v;
        bool use_a = true;
        do {
            seen[x] = true;
            x = use_a ? pa[x] : pb[x];
            use_a = !use_a;
            ++len;
        } while (!(x == v && use_a));
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace

TEST_CASE("round_robin") {
    auto f = round_robin(2);
    REQUIRE(f.size() == 3);
    std::vector<OneFactor> want{make_factor({{1, 2}, {3, 4}}), make_factor({{1, 3}, {2, 4}}),
                                make_factor({{1, 4}, {2, 3}})};
    std::sort(f.begin(), f.end());
    CHECK(f == want);
    CHECK(round_robin(4).size() == 7);
    CHECK(validate_factorization(round_robin(4)));
    CHECK(round_robin(3).size() == 5);
    CHECK(validate_factorization(round_robin(3)));
}

TEST_CASE("xor_factorization") {
    auto f = xor_factorization(1);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == make_factor({{1, 2}}));
    for (int m : {2, 3, 4}) {
        f = xor_factorization(m);
        CHECK(validate_factorization(f));
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(is_square_pair(f[i], f[j]));
    }
}

TEST_CASE("validate_factorization") {
    auto f = round_robin(4);
    CHECK(validate_factorization(f));
    f[1] = f[0];
    CHECK_FALSE(validate_factorization(f));
    CHECK(validate_factorization(steiner8()));
    CHECK(validate_factorization(kirkman8()));
}

TEST_CASE("union_cycles") {
    const auto k = kirkman8(), s = steiner8();
    CHECK(union_cycles(k[0], k[1]) == std::vector<int>{8});
    CHECK(union_cycles(s[0], s[1]) == std::vector<int>{4, 4});
    CHECK(union_cycles(make_factor({{1, 2}, {3, 4}}), make_factor({{1, 3}, {2, 4}})) == std::vector<int>{4});
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            CHECK(union_cycles(s[i], s[j]) == walk_cycles(s[i], s[j]));
            CHECK(union_cycles(k[i], k[j]) == walk_cycles(k[i], k[j]));
        }
    CHECK_THROWS(union_cycles(s[0], s[0]));
}

TEST_CASE("is_square_pair") {
    CHECK(is_square_pair(steiner8()[0], steiner8()[1]));
    CHECK_FALSE(is_square_pair(kirkman8()[0], kirkman8()[1]));
    const auto f = round_robin(2);
    CHECK(is_square_pair(f[0], f[1]));
    CHECK(is_square_pair(f[1], f[2]));
}

TEST_CASE("square_subfamily_from_hr") {
    auto fs = square_subfamily_from_hr(build_positive(3, 7).members);
    REQUIRE(fs.size() == 7);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK(is_square_pair(fs[i], fs[j]));
    fs = square_subfamily_from_hr(example_family("omega1")->members);
    CHECK(fs.size() == 3);
    CHECK(square_subfamily_from_hr({build_positive(2, 1).members[0]}).size() == 1);
}

TEST_CASE("text round trip and cycle format") {
    const auto s = steiner8();
    CHECK(parse_factorization_text(to_text(s)) == s);
    CHECK(format_cycle_type({4, 4}) == "{4,4}");
    CHECK_THROWS(parse_factorization_text("1-2 2-3\n"));
}
