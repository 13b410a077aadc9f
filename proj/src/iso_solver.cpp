#include "htype/iso_solver.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace htype {

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

IntMatrix vec(const IntMatrix& m) {
    IntMatrix v(m.size(), 1);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) v(i + m.rows() * j, 0) = m(i, j);
    return v;
}

IntMatrix unvec(const IntMatrix& v, int rows, int cols) {
    if (v.size() != static_cast<Eigen::Index>(rows) * cols) throw std::invalid_argument("unvec: size mismatch");
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = v(i + rows * j);
    return m;
}

IntMatrix commutation_matrix(int rows, int cols) {
    IntMatrix k = IntMatrix::Zero(rows * cols, rows * cols);
    // X(i, j) sits at i + rows*j in vec(X) and at j + cols*i in vec(X^T)
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) k(j + cols * i, i + rows * j) = 1;
    return k;
}

IntMatrix conjugacy_block(const IntMatrix& e, const IntMatrix& et) {
    const int n = static_cast<int>(e.rows());
    return kron(e.transpose(), identity(n)) - kron(identity(n), et);
}

IntMatrix ConjugacySystem::dense() const {
    const int nn = n * n;
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), nn);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m(r, rows[r].c1) += rows[r].v1;
        m(r, rows[r].c2) += rows[r].v2;
    }
    return m;
}

ConjugacySystem build_system(const HRFamily& fam1, const HRFamily& fam2) {
    if (fam1.n != fam2.n)
        throw std::invalid_argument("build_system: orders differ (" + std::to_string(fam1.n) + " vs " +
                                    std::to_string(fam2.n) + ")");
    if (fam1.s != fam2.s || fam1.t != fam2.t || fam1.size() != fam2.size())
        throw std::invalid_argument("build_system: signatures differ");
    ConjugacySystem sys;
    sys.n = fam1.n;
    sys.r = fam1.size();
    for (int l = 0; l < sys.r; ++l) {
        const IntMatrix blk = conjugacy_block(fam1.members[l], fam2.members[l]);
        for (Eigen::Index row = 0; row < blk.rows(); ++row) {
            std::vector<std::pair<int, int>> nz;
            for (Eigen::Index c = 0; c < blk.cols(); ++c)
                if (blk(row, c) != 0) nz.emplace_back(static_cast<int>(c), static_cast<int>(blk(row, c)));
            if (nz.size() != 2 || std::abs(nz[0].second) != 1 || std::abs(nz[1].second) != 1)
                throw std::invalid_argument("build_system: member " + std::to_string(l + 1) +
                                            " gives a row without two +-1 entries");
            sys.rows.push_back({nz[0].first, nz[0].second, nz[1].first, nz[1].second});
        }
    }
    return sys;
}

namespace {

// Variables x_c of vec(B), c = i + n*j, grouped into orbits with
// x_c = sign[c] * value(orbit[c]).
struct Orbits {
    std::vector<int> orbit, sign;
    std::vector<char> forced_zero;
    std::vector<std::vector<int>> cells;
};

Orbits close_orbits(const ConjugacySystem& sys) {
    const int nn = sys.n * sys.n;
    std::vector<int> parent(nn), rel(nn, 1);  // x_c = rel[c] * x_parent[c]
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> bad(nn, 0);
    auto find = [&](auto&& self, int c) -> std::pair<int, int> {
        if (parent[c] == c) return {c, 1};
        auto [root, s] = self(self, parent[c]);
        parent[c] = root;
        rel[c] *= s;
        return {root, rel[c]};
    };
    for (const auto& row : sys.rows) {
        // v1 x1 + v2 x2 = 0  =>  x1 = -v1 v2 x2
        const int s = -row.v1 * row.v2;
        auto [r1, s1] = find(find, row.c1);
        auto [r2, s2] = find(find, row.c2);
        if (r1 == r2) {
            if (s1 != s * s2) bad[r1] = 1;
            continue;
        }
        // x_r1 = s1 x1 = s1 s x2 = s1 s s2 x_r2
        parent[r1] = r2;
        rel[r1] = s1 * s * s2;
        if (bad[r1]) bad[r2] = 1;
    }
    Orbits o;
    o.orbit.resize(nn);
    o.sign.resize(nn);
    std::map<int, int> id;
    for (int c = 0; c < nn; ++c) {
        auto [root, s] = find(find, c);
        auto [it, fresh] = id.emplace(root, static_cast<int>(id.size()));
        if (fresh) {
            o.cells.emplace_back();
            o.forced_zero.push_back(0);
        }
        o.orbit[c] = it->second;
        o.sign[c] = s;
        o.cells[it->second].push_back(c);
    }
    for (int c = 0; c < nn; ++c)
        if (bad[c]) o.forced_zero[o.orbit[c]] = 1;
    return o;
}

struct PermSearch {
    int n;
    const Orbits& o;
    int cap;
    std::vector<int> value;  // per orbit: 0 = unset / zero, +-1 assigned
    std::vector<int> row_used, col_used;
    std::vector<IntMatrix> found;

    bool assign(int orb, int v) {
        std::vector<int> done;
        for (int c : o.cells[orb]) {
            const int i = c % n, j = c / n;
            if (row_used[i] || col_used[j]) {
                for (int d : done) row_used[d % n] = col_used[d / n] = 0;
                return false;
            }
            row_used[i] = col_used[j] = 1;
            done.push_back(c);
        }
        value[orb] = v;
        return true;
    }

    void unassign(int orb) {
        for (int c : o.cells[orb]) row_used[c % n] = col_used[c / n] = 0;
        value[orb] = 0;
    }

    void run(int i) {
        if (static_cast<int>(found.size()) >= cap) return;
        if (i == n) {
            IntMatrix b = IntMatrix::Zero(n, n);
            for (int c = 0; c < n * n; ++c)
                if (value[o.orbit[c]]) b(c % n, c / n) = o.sign[c] * value[o.orbit[c]];
            found.push_back(b);
            return;
        }
        if (row_used[i]) {  // fixed by an earlier orbit
            run(i + 1);
            return;
        }
        for (int j = 0; j < n; ++j) {
            const int c = i + n * j;
            const int orb = o.orbit[c];
            if (o.forced_zero[orb] || value[orb] || col_used[j]) continue;
            for (int entry : {1, -1}) {
                if (!assign(orb, entry * o.sign[c])) break;  // placement fails for both signs
                run(i + 1);
                unassign(orb);
                if (static_cast<int>(found.size()) >= cap) return;
            }
        }
    }
};

}  // namespace

std::vector<IntMatrix> enumerate_signed_perm(const ConjugacySystem& sys, int cap) {
    if (cap < 1) return {};
    const Orbits o = close_orbits(sys);
    PermSearch s{sys.n, o, cap, std::vector<int>(o.cells.size(), 0), std::vector<int>(sys.n, 0),
                 std::vector<int>(sys.n, 0), {}};
    s.run(0);
    return s.found;
}

std::optional<IntMatrix> solve_signed_perm(const ConjugacySystem& sys) {
    auto all = enumerate_signed_perm(sys, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool verify_conjugacy(const IntMatrix& b, const HRFamily& fam1, const HRFamily& fam2) {
    if (fam1.n != fam2.n || fam1.size() != fam2.size() || b.rows() != fam1.n || b.cols() != fam1.n) return false;
    if (!is_signed_permutation(b) || b.transpose() * b != identity(fam1.n)) return false;
    for (int l = 0; l < fam1.size(); ++l)
        if (fam2.members[l] * b != b * fam1.members[l]) return false;
    return true;
}

HRFamily apply_match(const HRFamily& fam2, const std::vector<int>& order, const std::vector<int>& signs) {
    HRFamily out = fam2;
    for (std::size_t l = 0; l < order.size(); ++l) out.members[l] = signs[l] * fam2.members[order[l]];
    return out;
}

std::optional<FamilyMatch> match_families(const HRFamily& fam1, const HRFamily& fam2) {
    if (fam1.n != fam2.n || fam1.s != fam2.s || fam1.t != fam2.t || fam1.size() != fam2.size())
        throw std::invalid_argument("match_families: families differ in order or signature");
    const int r = fam1.size();
    std::vector<std::vector<int>> orders;
    std::vector<int> ord(r);
    std::iota(ord.begin(), ord.end(), 0);
    if (r <= 5) {
        do {
            bool keeps_blocks = true;
            for (int l = 0; l < r; ++l) keeps_blocks = keeps_blocks && ((l < fam1.s) == (ord[l] < fam1.s));
            if (keeps_blocks) orders.push_back(ord);
        } while (std::next_permutation(ord.begin(), ord.end()));
    } else {
        orders.push_back(ord);
    }
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> signs(r);
        for (int l = 0; l < r; ++l) signs[l] = (mask >> l) & 1 ? -1 : 1;
        for (const auto& o : orders) {
            const HRFamily cand = apply_match(fam2, o, signs);
            if (auto b = solve_signed_perm(build_system(fam1, cand))) return FamilyMatch{o, signs, *b};
        }
    }
    return std::nullopt;
}

IntMatrix system_gram(const ConjugacySystem& sys) {
    const int nn = sys.n * sys.n;
    IntMatrix g = IntMatrix::Zero(nn, nn);
    for (const auto& row : sys.rows) {
        g(row.c1, row.c1) += row.v1 * row.v1;
        g(row.c2, row.c2) += row.v2 * row.v2;
        g(row.c1, row.c2) += row.v1 * row.v2;
        g(row.c2, row.c1) += row.v1 * row.v2;
    }
    return g;
}

RankCertificate rank_deficiency_certificate(const HRFamily& fam1, const HRFamily& fam2) {
    if (fam1.n != fam2.n || fam1.size() != fam2.size())
        throw std::invalid_argument("rank_deficiency_certificate: families differ in order or size");
    if (fam1.n > 16) throw std::invalid_argument("rank_deficiency_certificate: order above 16");
    const int nn = fam1.n * fam1.n;
    const IntMatrix id = identity(nn);
    RankCertificate cert;
    cert.f = IntMatrix::Zero(nn, nn);
    for (int j = 0; j < fam1.size(); ++j) {
        cert.a.push_back(kron(fam1.members[j], fam2.members[j]));
        cert.f += 2 * (id - cert.a.back());
    }
    cert.involutions = std::all_of(cert.a.begin(), cert.a.end(), [&](const IntMatrix& a) { return a * a == id; });
    cert.commuting = true;
    for (std::size_t x = 0; x < cert.a.size(); ++x)
        for (std::size_t y = x + 1; y < cert.a.size(); ++y)
            cert.commuting = cert.commuting && cert.a[x] * cert.a[y] == cert.a[y] * cert.a[x];
    cert.gram_matches = cert.f == system_gram(build_system(fam1, fam2));
    IntMatrix prod = id;
    for (const auto& a : cert.a) prod = prod * (id + a);
    cert.product_zero = (cert.f * prod).isZero();
    return cert;
}

OmegaVector apply_to_omega(const IntMatrix& b, const OmegaVector& w) {
    if (!is_signed_permutation(b)) throw std::invalid_argument("apply_to_omega: B is not a signed permutation");
    const auto n = b.rows();
    std::vector<int> image(n + 1), sign(n + 1);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index r = 0; r < n; ++r)
            if (b(r, i) != 0) {
                image[i + 1] = static_cast<int>(r + 1);
                sign[i + 1] = static_cast<int>(b(r, i));
            }
    std::vector<std::pair<Edge, int>> terms;
    for (const auto& [e, c] : w.terms)
        terms.push_back({{image[e.first], image[e.second]}, c * sign[e.first] * sign[e.second]});
    return make_omega(std::move(terms));
}

AlgebraIso lift_to_algebra_iso(const IntMatrix& b, const HTypeAlgebra& alg1, const HTypeAlgebra& alg2) {
    if (alg1.k != alg2.k || alg1.omega_basis.size() != alg2.omega_basis.size())
        throw std::invalid_argument("lift_to_algebra_iso: algebras differ in dimensions");
    const int n = alg1.dim_h();
    const int r = static_cast<int>(alg1.omega_basis.size());
    if (b.rows() != n || !is_signed_permutation(b))
        throw std::invalid_argument("lift_to_algebra_iso: B must be a signed permutation of order 2k");
    std::map<Edge, int> zs(alg2.z_signs.begin(), alg2.z_signs.end());

    AlgebraIso iso;
    iso.b = b;
    iso.p.assign(r, RatVector(r, Rational(0)));
    iso.center_exact = true;
    for (int l = 0; l < r; ++l) {
        const OmegaVector img = apply_to_omega(b, alg1.omega_basis[l]);
        std::map<Edge, Rational> residual;
        for (const auto& [e, c] : img.terms) residual[e] = c;
        for (int m = 0; m < r; ++m) {
            Rational dot = 0;
            for (const auto& [e, c] : img.terms) {
                const int d = alg2.omega_basis[m].coefficient(e.first, e.second);
                if (d) dot += Rational(c * d * zs.at(e), alg2.k);
            }
            iso.p[l][m] = dot / alg2.omega_norms[m];
            for (const auto& [e, c] : alg2.omega_basis[m].terms) residual[e] -= iso.p[l][m] * c;
        }
        for (const auto& [e, v] : residual)
            if (v != 0) iso.center_exact = false;
    }

    std::vector<int> image(n), sign(n);
    for (int i = 0; i < n; ++i)
        for (int row = 0; row < n; ++row)
            if (b(row, i) != 0) image[i] = row, sign[i] = static_cast<int>(b(row, i));

    iso.brackets_ok = true;
    for (int i = 0; i < n && iso.brackets_ok; ++i)
        for (int j = i + 1; j < n && iso.brackets_ok; ++j) {
            RatVector lhs(r, Rational(0)), rhs(r, Rational(0));
            const auto [c2, m2] = alg2.bracket(image[i] + 1, image[j] + 1);
            if (c2 != 0) lhs[m2] = sign[i] * sign[j] * c2;
            const auto [c1, l1] = alg1.bracket(i + 1, j + 1);
            if (c1 != 0)
                for (int m = 0; m < r; ++m) rhs[m] = c1 * iso.p[l1][m];
            if (lhs != rhs) {
                iso.brackets_ok = false;
                iso.violation = "[Be" + std::to_string(i + 1) + ", Be" + std::to_string(j + 1) + "] != p[e" +
                                std::to_string(i + 1) + ", e" + std::to_string(j + 1) + "]";
            }
        }

    iso.j_relation_ok = true;
    for (int l = 0; l < r && iso.j_relation_ok; ++l) {
        const IntMatrix conj = b * alg1.j_matrices[l] * b.transpose();
        for (int x = 0; x < n && iso.j_relation_ok; ++x)
            for (int y = 0; y < n && iso.j_relation_ok; ++y) {
                Rational v = 0;
                for (int m = 0; m < r; ++m) v += iso.p[l][m] * alg2.j_matrices[m](x, y);
                if (v != conj(x, y)) {
                    iso.j_relation_ok = false;
                    if (iso.violation.empty())
                        iso.violation = "J relation fails for omega" + std::to_string(l + 1);
                }
            }
    }
    return iso;
}

}  // namespace htype
