#include <doctest.h>

#include "htype/algebra_core.hpp"
#include "htype/examples.hpp"
#include "htype/hr_family.hpp"

using namespace htype;

namespace {

OmegaVector om(std::vector<std::pair<Edge, int>> t) { return make_omega(std::move(t)); }

// dim span(a) == dim span(b) == dim span(a + b)
bool same_span(const std::vector<ZVector>& a, const std::vector<ZVector>& b) {
    RatMatrix ma(a.begin(), a.end()), mb(b.begin(), b.end()), both = ma;
    both.insert(both.end(), mb.begin(), mb.end());
    const int ra = rank(ma);
    return ra == rank(mb) && ra == rank(both);
}

HTypeAlgebra k4_algebra(const K4Coords& c) { return quotient(build_free(2, {4, 0}), k4_omegas(c)); }

}  // namespace

TEST_CASE("build_free") {
    auto N = build_free(2, {4, 0});
    CHECK(N.dim_U() == 4);
    CHECK(N.dim_Z() == 6);
    for (int i = 0; i < 4; ++i) CHECK(N.metric_U.value(i) == Rational(1, 2));
    CHECK(build_free(1, {2, 0}).dim_Z() == 1);
    N = build_free(2, {2, 2});
    CHECK(N.metric_U.signs == std::vector<int>{1, 1, -1, -1});
    CHECK(N.metric_U.value(3) == Rational(-1, 2));
}

TEST_CASE("j_operator") {
    const auto N = build_free(2, {4, 0});
    const IntMatrix j = j_operator(om({{{1, 2}, 1}, {{3, 4}, -1}}), N);
    // J e1 = e2, J e2 = -e1, J e3 = -e4, J e4 = e3 (columns are images)
    CHECK(j == from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
    CHECK(j_operator(om({{{1, 2}, 1}}), build_free(1, {2, 0})) == from_rows({{0, -1}, {1, 0}}));

    const auto M = build_free(2, {2, 2}, {{{1, 3}, -1}, {{2, 4}, -1}});
    // beta = k alpha (e1xe3, e1xe3)_Z = alpha * (-1); alpha = -1 gives beta = 1
    const IntMatrix jn = j_operator(om({{{1, 3}, -1}, {{2, 4}, -1}}), M);
    CHECK(jn(2, 0) == -1);  // J e1 = -e3
    CHECK(jn(0, 2) == -1);  // J e3 = -e1
    CHECK(omega_from_j(jn, M) == om({{{1, 3}, -1}, {{2, 4}, -1}}));
    const IntMatrix jp = j_operator(om({{{1, 3}, 1}, {{2, 4}, 1}}), M);
    CHECK(jp(2, 0) == 1);  // beta = -1: J e1 = e3
}

TEST_CASE("check_block_structure") {
    CHECK(check_block_structure(make_factor({{1, 2}, {3, 4}}), 2));
    CHECK_FALSE(check_block_structure(make_factor({{1, 2}, {3, 7}, {4, 8}, {5, 6}}), 4));
    CHECK(check_block_structure(make_factor({{1, 3}, {2, 4}}), 2));
    CHECK(check_block_structure(make_factor({{1, 2}, {3, 4}, {5, 6}, {7, 8}}), 4));
}

TEST_CASE("orthogonal_complement matches the reference ideals") {
    const auto N = build_free(2, {4, 0});
    auto z = [&](std::vector<std::pair<Edge, int>> t) { return to_z_vector(om(std::move(t)), N); };
    const std::vector<ZVector> a1{z({{{1, 2}, 1}, {{3, 4}, 1}}), z({{{1, 3}, 1}, {{2, 4}, -1}}),
                                  z({{{1, 4}, -1}, {{2, 3}, -1}})};
    const std::vector<ZVector> a2{z({{{1, 2}, 1}, {{3, 4}, -1}}), z({{{1, 3}, -1}, {{2, 4}, -1}}),
                                  z({{{1, 4}, 1}, {{2, 3}, -1}})};
    const std::vector<ZVector> a3{z({{{1, 2}, 1}, {{3, 4}, -1}}), z({{{1, 3}, -1}, {{2, 4}, -1}}),
                                  z({{{1, 4}, -1}, {{2, 3}, 1}})};
    CHECK(same_span(orthogonal_complement(k4_omegas(kOmega1), N), a1));
    CHECK(same_span(orthogonal_complement(k4_omegas(kOmega2), N), a2));
    CHECK(same_span(orthogonal_complement(k4_omegas(kOmega3), N), a3));
    CHECK(orthogonal_complement({om({{{1, 2}, 1}})}, build_free(1, {2, 0})).empty());
    // every basis vector is orthogonal to every omega
    const auto w = k4_omegas(kOmega1);
    for (const auto& a : orthogonal_complement(w, N))
        for (const auto& x : w) CHECK(z_inner(a, to_z_vector(x, N), N) == 0);
}

TEST_CASE("quotient structure constants") {
    const auto alg = k4_algebra(kOmega1);
    CHECK(alg.bracket(1, 2) == std::pair<Rational, int>{Rational(1, 2), 0});
    CHECK(alg.bracket(1, 1).first == 0);
    CHECK(alg.bracket(1, 4) == std::pair<Rational, int>{Rational(-1, 2), 2});
    CHECK(alg.bracket(2, 1) == std::pair<Rational, int>{Rational(-1, 2), 0});
    for (const auto& sc : alg.structure_constants) CHECK(denominator(sc.coeff) == 2);
    const std::vector<OmegaVector> ones{om({{{1, 2}, 1}, {{3, 4}, 1}}), om({{{1, 3}, 1}, {{2, 4}, 1}}),
                                        om({{{1, 4}, 1}, {{2, 3}, 1}})};
    CHECK_THROWS_AS(quotient(build_free(2, {4, 0}), ones), std::invalid_argument);
}

TEST_CASE("verify_h_type") {
    for (const auto& c : {kOmega1, kOmega2, kOmega3}) CHECK(verify_h_type(k4_algebra(c)).pass());

    const std::vector<OmegaVector> ones{om({{{1, 2}, 1}, {{3, 4}, 1}}), om({{{1, 3}, 1}, {{2, 4}, 1}}),
                                        om({{{1, 4}, 1}, {{2, 3}, 1}})};
    const auto bad = verify_h_type(quotient(build_free(2, {4, 0}), ones, false));
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.check('e').pass);
    CHECK(bad.check('a').pass);
    CHECK(bad.check('d').pass);

    for (int k = 1; k <= 4; ++k) {
        std::vector<std::pair<Edge, int>> t;
        for (int i = 1; i <= k; ++i) t.push_back({{2 * i - 1, 2 * i}, 1});
        CHECK(verify_h_type(quotient(build_free(k, {2 * k, 0}), {om(t)})).pass());
    }
}

TEST_CASE("algebra_from_family over the realizable cells") {
    for (int r = 1; r <= 4; ++r)
        for (int t = 0; t <= 3; ++t) {
            const auto ms = max_signature_s(r, t);
            if (!ms) continue;
            for (int s = 0; s <= *ms; ++s) {
                if (s + t == 0) continue;
                INFO("r=" << r << " s=" << s << " t=" << t);
                const auto alg = algebra_from_family(build_mixed(r, s, t));
                CHECK(alg.sig_z == SignaturePair{s, t});
                CHECK(verify_h_type(alg).pass());
            }
        }
}

TEST_CASE("solve_coefficients") {
    const auto f = k4_factors();
    const auto N = build_free(2, {4, 0});
    const auto all = solve_coefficients(f, N);
    CHECK(all.size() == 16);
    // the six listed solutions are among them
    std::vector<K4Coords> got;
    for (const auto& s : all) got.push_back(k4_coords(s));
    for (const auto& c : listed_k4_solutions()) CHECK(std::find(got.begin(), got.end(), c) != got.end());
    // (system) and (system2) agree with the direct search on all 64 vectors
    for (int mask = 0; mask < 64; ++mask) {
        K4Coords c;
        for (int b = 0; b < 6; ++b) c[b] = (mask >> b & 1) ? -1 : 1;
        const bool in = std::find(got.begin(), got.end(), c) != got.end();
        CHECK(k4_system(c) == in);
        CHECK(k4_system2(c) == in);
    }
    int a12_plus = 0;
    for (const auto& c : got) a12_plus += c[0] == 1;
    CHECK(a12_plus == 8);
    CHECK(solve_coefficients({f[0]}, N).size() == 4);  // 2^k, k = 2
    CHECK(solve_coefficients({round_robin(3)[0]}, build_free(3, {6, 0})).size() == 8);
}
