#include "htype/algebra_core.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace htype {

namespace {

std::string q_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string pair_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

bool supports_disjoint(const std::vector<OmegaVector>& omegas) {
    std::set<Edge> seen;
    for (const auto& w : omegas)
        for (const auto& [e, c] : w.terms)
            if (!seen.insert(e).second) return false;
    return true;
}

void require_cover(const OmegaVector& w, const FreeNilpotent2& N) {
    if (w.factor().vertex_count() != N.dim_U())
        throw std::invalid_argument("omega " + to_string(w) + " does not cover e1..e" +
                                    std::to_string(N.dim_U()));
}

}  // namespace

Metric::Metric(std::vector<int> s, int k) : signs(std::move(s)), scale(k) {
    if (k < 1) throw std::invalid_argument("metric scale must be positive");
    for (int x : signs)
        if (x != 1 && x != -1) throw std::invalid_argument("metric signs must be +-1");
}

SignaturePair Metric::signature() const {
    SignaturePair p;
    for (int x : signs) (x > 0 ? p.s : p.t)++;
    return p;
}

int FreeNilpotent2::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int n = dim_U();
    if (i < 1 || j > n || i == j) throw std::out_of_range("pair " + pair_str(i, j) + " outside Z");
    // pairs (1,2..n), (2,3..n), ... in order
    return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

FreeNilpotent2 build_free(int k, SignaturePair sig_U, const ZSigns& z_signs, const std::vector<int>& u_order) {
    if (k < 1) throw std::invalid_argument("build_free: k must be positive");
    if (sig_U.s < 0 || sig_U.t < 0 || sig_U.s + sig_U.t != 2 * k)
        throw std::invalid_argument("build_free: signature on U must sum to 2k = " + std::to_string(2 * k));
    const int n = 2 * k;
    std::vector<int> u(n);
    if (u_order.empty()) {
        for (int i = 0; i < n; ++i) u[i] = i < sig_U.s ? 1 : -1;
    } else {
        std::vector<int> check = u_order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(check.size()) != n || check[i] != i + 1)
                throw std::invalid_argument("build_free: u_order must be a permutation of 1..2k");
        for (int m = 0; m < n; ++m) u[u_order[m] - 1] = m < sig_U.s ? 1 : -1;
    }
    FreeNilpotent2 N;
    N.k = k;
    N.metric_U = Metric(u, k);
    std::vector<int> z;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            N.basis_Z.emplace_back(i, j);
            auto it = z_signs.find({i, j});
            z.push_back(it == z_signs.end() ? 1 : it->second);
        }
    for (const auto& [e, s] : z_signs)
        if (e.first < 1 || e.second > n || e.first >= e.second)
            throw std::invalid_argument("build_free: Z sign given for pair " + pair_str(e.first, e.second) +
                                        " outside 1.." + std::to_string(n));
    N.metric_Z = Metric(z, k);
    return N;
}

ZSigns default_z_signs(const std::vector<OneFactor>& factors, int s, int t) {
    if (s < 0 || t < 0 || s + t > static_cast<int>(factors.size()))
        throw std::invalid_argument("default_z_signs: need at least s + t factors");
    ZSigns out;
    for (int l = 0; l < s + t; ++l)
        for (const auto& e : factors[l].pairs) out[e] = l < s ? 1 : -1;
    return out;
}

IntMatrix j_operator(const OmegaVector& omega, const FreeNilpotent2& N) {
    require_cover(omega, N);
    const int n = N.dim_U();
    IntMatrix j = IntMatrix::Zero(n, n);
    for (const auto& [e, alpha] : omega.terms) {
        auto [a, b] = e;
        const int ez = N.z_sign(a, b);
        j(b - 1, a - 1) = N.metric_U.signs[b - 1] * ez * alpha;
        j(a - 1, b - 1) = -N.metric_U.signs[a - 1] * ez * alpha;
    }
    return j;
}

OmegaVector omega_from_j(const IntMatrix& j, const FreeNilpotent2& N) {
    if (j.rows() != N.dim_U() || j.cols() != N.dim_U())
        throw std::invalid_argument("omega_from_j: matrix order differs from 2k");
    std::vector<std::pair<Edge, int>> terms;
    for (auto [a, b] : support_factor(j).pairs)
        terms.push_back({{a, b}, static_cast<int>(j(b - 1, a - 1)) * N.metric_U.signs[b - 1] * N.z_sign(a, b)});
    auto w = make_omega(std::move(terms));
    if (j_operator(w, N) != j)
        throw std::invalid_argument("omega_from_j: matrix is not the J-operator of any omega for this metric");
    return w;
}

Rational omega_norm(const OmegaVector& omega, const FreeNilpotent2& N) {
    Rational acc = 0;
    for (const auto& [e, alpha] : omega.terms) acc += N.metric_Z.value(N.pair_index(e.first, e.second));
    return acc;
}

bool check_block_structure(const OneFactor& factor, int k) {
    bool all_same = true, all_cross = true;
    for (auto [i, j] : factor.pairs) {
        const bool same = (i <= k) == (j <= k);
        all_same = all_same && same;
        all_cross = all_cross && !same;
    }
    return all_same || all_cross;
}

ZVector to_z_vector(const OmegaVector& omega, const FreeNilpotent2& N) {
    ZVector v(N.dim_Z(), Rational(0));
    for (const auto& [e, alpha] : omega.terms) v[N.pair_index(e.first, e.second)] = alpha;
    return v;
}

Rational z_inner(const ZVector& a, const ZVector& b, const FreeNilpotent2& N) {
    Rational acc = 0;
    for (int c = 0; c < N.dim_Z(); ++c)
        if (a[c] != 0 && b[c] != 0) acc += a[c] * b[c] * N.metric_Z.value(c);
    return acc;
}

std::vector<ZVector> orthogonal_complement(const std::vector<OmegaVector>& omegas, const FreeNilpotent2& N) {
    const int dz = N.dim_Z();
    RatMatrix gram_rows;
    for (const auto& w : omegas) {
        auto v = to_z_vector(w, N);
        for (int c = 0; c < dz; ++c) v[c] *= N.metric_Z.signs[c];
        gram_rows.push_back(std::move(v));
    }
    if (rank(gram_rows) != static_cast<int>(omegas.size()))
        throw std::invalid_argument("orthogonal_complement: omegas are linearly dependent");
    if (!supports_disjoint(omegas)) return nullspace(gram_rows, dz);

    std::vector<ZVector> basis;
    std::vector<char> covered(dz, 0);
    for (const auto& w : omegas) {
        const auto& [p1, a1] = w.terms.front();
        const int c1 = N.pair_index(p1.first, p1.second);
        covered[c1] = 1;
        for (std::size_t m = 1; m < w.terms.size(); ++m) {
            const auto& [pm, am] = w.terms[m];
            const int cm = N.pair_index(pm.first, pm.second);
            covered[cm] = 1;
            ZVector v(dz, Rational(0));
            v[c1] = a1;
            v[cm] = -N.metric_Z.signs[c1] * N.metric_Z.signs[cm] * am;
            basis.push_back(std::move(v));
        }
    }
    for (int c = 0; c < dz; ++c) {
        if (covered[c]) continue;
        ZVector v(dz, Rational(0));
        v[c] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector project_to_center(const ZVector& z, const std::vector<OmegaVector>& omegas, const FreeNilpotent2& N) {
    const int r = static_cast<int>(omegas.size());
    std::vector<ZVector> ws;
    for (const auto& w : omegas) ws.push_back(to_z_vector(w, N));
    RatMatrix aug(r, RatVector(r + 1));
    for (int l = 0; l < r; ++l) {
        for (int m = 0; m < r; ++m) aug[l][m] = z_inner(ws[l], ws[m], N);
        aug[l][r] = z_inner(ws[l], z, N);
    }
    const auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != r || (r > 0 && piv.back() == r))
        throw std::invalid_argument("project_to_center: omega Gram matrix is singular");
    RatVector c(r);
    for (int l = 0; l < r; ++l) c[l] = aug[l][r];
    return c;
}

std::pair<Rational, int> HTypeAlgebra::bracket(int n, int m) const {
    if (n == m) return {Rational(0), 0};
    const int sign = n < m ? 1 : -1;
    if (n > m) std::swap(n, m);
    for (const auto& sc : structure_constants)
        if (sc.i == n && sc.j == m) return {sign * sc.coeff, sc.z_index};
    return {Rational(0), 0};
}

HTypeAlgebra quotient(const FreeNilpotent2& N, const std::vector<OmegaVector>& omegas, bool enforce) {
    if (omegas.empty()) throw std::invalid_argument("quotient: need at least one omega");
    HTypeAlgebra alg;
    alg.k = N.k;
    alg.u_signs = N.metric_U.signs;
    alg.sig_h = N.metric_U.signature();
    for (int c = 0; c < N.dim_Z(); ++c) alg.z_signs.push_back({N.basis_Z[c], N.metric_Z.signs[c]});
    alg.omega_basis = omegas;
    for (std::size_t l = 0; l < omegas.size(); ++l) {
        const Rational nrm = omega_norm(omegas[l], N);
        if (nrm != 1 && nrm != -1)
            throw std::invalid_argument("quotient: omega" + std::to_string(l + 1) + " has norm " + q_str(nrm) +
                                        ", expected +-1");
        alg.omega_norms.push_back(nrm > 0 ? 1 : -1);
        (nrm > 0 ? alg.sig_z.s : alg.sig_z.t)++;
        alg.j_matrices.push_back(j_operator(omegas[l], N));
    }
    const int n = N.dim_U();
    if (enforce) {
        for (std::size_t a = 0; a < omegas.size(); ++a) {
            const auto& ja = alg.j_matrices[a];
            if (ja * ja != -alg.omega_norms[a] * identity(n))
                throw std::invalid_argument("quotient: J" + std::to_string(a + 1) +
                                            " squared is not -(omega,omega) id");
            for (std::size_t b = a + 1; b < omegas.size(); ++b) {
                const auto& jb = alg.j_matrices[b];
                if (ja * jb + jb * ja != IntMatrix::Zero(n, n))
                    throw std::invalid_argument("quotient: J" + std::to_string(a + 1) + " and J" +
                                                std::to_string(b + 1) + " do not anticommute");
            }
        }
    }
    orthogonal_complement(omegas, N);  // rejects dependent omegas
    if (supports_disjoint(omegas)) {
        // projection of e_ij onto omega_l is alpha_ij eps_ij / (k (omega_l, omega_l))
        for (std::size_t l = 0; l < omegas.size(); ++l)
            for (const auto& [e, alpha] : omegas[l].terms)
                alg.structure_constants.push_back(
                    {e.first, e.second, Rational(alpha * N.z_sign(e.first, e.second) * alg.omega_norms[l], N.k),
                     static_cast<int>(l)});
        std::sort(alg.structure_constants.begin(), alg.structure_constants.end(),
                  [](const StructureConstant& a, const StructureConstant& b) {
                      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
                  });
        return alg;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ZVector e(N.dim_Z(), Rational(0));
            e[N.pair_index(i, j)] = 1;
            const auto c = project_to_center(e, omegas, N);
            int hits = 0;
            for (std::size_t l = 0; l < c.size(); ++l) {
                if (c[l] == 0) continue;
                ++hits;
                alg.structure_constants.push_back({i, j, c[l], static_cast<int>(l)});
            }
            if (hits > 1)
                throw std::invalid_argument("quotient: bracket " + pair_str(i, j) +
                                            " spreads over several omegas (overlapping supports)");
        }
    return alg;
}

HTypeAlgebra algebra_from_family(const HRFamily& fam) {
    if (fam.n < 2 || fam.n % 2) throw std::invalid_argument("algebra_from_family: order must be even");
    const int k = fam.n / 2;
    std::vector<OneFactor> factors;
    for (const auto& e : fam.members) factors.push_back(support_factor(e));
    const SignaturePair sig_u = fam.t >= 1 ? SignaturePair{k, k} : SignaturePair{2 * k, 0};
    const auto N = build_free(k, sig_u, default_z_signs(factors, fam.s, fam.t));
    std::vector<OmegaVector> omegas;
    for (const auto& e : fam.members) omegas.push_back(omega_from_j(e, N));
    return quotient(N, omegas);
}

bool HTypeReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const HTypeCheck& c) { return c.pass; });
}

const HTypeCheck& HTypeReport::check(char id) const {
    for (const auto& c : checks)
        if (c.id == id) return c;
    throw std::out_of_range(std::string("no check ") + id);
}

std::string HTypeReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << "(" << c.id << ") " << c.name << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.witness.empty()) os << " [" << c.witness << "]";
        os << '\n';
    }
    os << "overall: " << (pass() ? "pass" : "fail") << '\n';
    return os.str();
}

HTypeReport verify_h_type(const HTypeAlgebra& alg) {
    const int n = alg.dim_h();
    const int r = static_cast<int>(alg.omega_basis.size());
    std::map<Edge, int> zs(alg.z_signs.begin(), alg.z_signs.end());

    // Gram matrix of the omega basis, from the stored Z signs.
    std::vector<std::vector<Rational>> gram(r, std::vector<Rational>(r, Rational(0)));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (const auto& [e, c] : alg.omega_basis[a].terms) {
                const int d = alg.omega_basis[b].coefficient(e.first, e.second);
                if (d) gram[a][b] += Rational(c * d * zs.at(e), alg.k);
            }

    const IntMatrix eta = diagonal(alg.u_signs);

    HTypeReport rep;

    {  // (a)
        HTypeCheck c{'a', "defining relation (J_z u, v) = (z, [u, v])", true, ""};
        for (int l = 0; l < r && c.pass; ++l)
            for (int i = 0; i < n && c.pass; ++i)
                for (int j = 0; j < n && c.pass; ++j) {
                    const Rational lhs = Rational(alg.j_matrices[l](j, i) * alg.u_signs[j], alg.k);
                    const auto [coef, idx] = alg.bracket(i + 1, j + 1);
                    const Rational rhs = coef == 0 ? Rational(0) : coef * gram[l][idx];
                    if (lhs != rhs) {
                        c.pass = false;
                        c.witness = "z=omega" + std::to_string(l + 1) + ", u=e" + std::to_string(i + 1) + ", v=e" +
                                    std::to_string(j + 1) + ": " + q_str(lhs) + " vs " + q_str(rhs);
                    }
                }
        rep.checks.push_back(c);
    }

    // Spanning set for (b) and (c): omega_a and omega_a +- omega_b.
    struct Combo {
        std::string label;
        IntMatrix j;
        Rational norm;
    };
    std::vector<Combo> combos;
    for (int a = 0; a < r; ++a) combos.push_back({"omega" + std::to_string(a + 1), alg.j_matrices[a], gram[a][a]});
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int sg : {1, -1})
                combos.push_back({"omega" + std::to_string(a + 1) + (sg > 0 ? "+" : "-") + "omega" +
                                      std::to_string(b + 1),
                                  alg.j_matrices[a] + sg * alg.j_matrices[b],
                                  gram[a][a] + 2 * sg * gram[a][b] + gram[b][b]});

    {  // (b) as X^T eta X = (z, z) eta, both sides scaled by k
        HTypeCheck c{'b', "orthogonality (J_z u, J_z v) = (z, z)(u, v)", true, ""};
        for (const auto& z : combos) {
            const IntMatrix g = z.j.transpose() * eta * z.j;
            for (int i = 0; i < n && c.pass; ++i)
                for (int j = 0; j < n && c.pass; ++j) {
                    const Rational lhs = Rational(g(i, j), alg.k);
                    const Rational rhs = i == j ? z.norm * Rational(alg.u_signs[i], alg.k) : Rational(0);
                    if (lhs != rhs) {
                        c.pass = false;
                        c.witness = "z=" + z.label + ", u=e" + std::to_string(i + 1) + ", v=e" + std::to_string(j + 1) +
                                    ": " + q_str(lhs) + " vs " + q_str(rhs);
                    }
                }
            if (!c.pass) break;
        }
        rep.checks.push_back(c);
    }

    {  // (c)
        HTypeCheck c{'c', "squares J_z^2 = -(z, z) id", true, ""};
        for (const auto& z : combos) {
            const IntMatrix sq = z.j * z.j;
            bool ok = denominator(z.norm) == 1;
            if (ok) {
                const long long nz = static_cast<long long>(numerator(z.norm));
                ok = sq == -nz * identity(n);
            }
            if (!ok) {
                c.pass = false;
                c.witness = "z=" + z.label + ", (z,z)=" + q_str(z.norm);
                break;
            }
        }
        rep.checks.push_back(c);
    }

    {  // (d)
        HTypeCheck c{'d', "skew-symmetry eta J + J^T eta = 0", true, ""};
        for (int l = 0; l < r; ++l)
            if (eta * alg.j_matrices[l] + alg.j_matrices[l].transpose() * eta != IntMatrix::Zero(n, n)) {
                c.pass = false;
                c.witness = "J" + std::to_string(l + 1);
                break;
            }
        rep.checks.push_back(c);
    }

    {  // (e)
        HTypeCheck c{'e', "anticommutation J_a J_b + J_b J_a = 0", true, ""};
        for (int a = 0; a < r && c.pass; ++a)
            for (int b = a + 1; b < r && c.pass; ++b) {
                const auto& x = alg.j_matrices[a];
                const auto& y = alg.j_matrices[b];
                if (x * y + y * x != IntMatrix::Zero(n, n)) {
                    c.pass = false;
                    c.witness = "J" + std::to_string(a + 1) + ", J" + std::to_string(b + 1);
                }
            }
        rep.checks.push_back(c);
    }

    {  // (f)
        HTypeCheck c{'f', "two-step nilpotent with center z", true, ""};
        std::vector<char> hit(r, 0);
        for (const auto& sc : alg.structure_constants) {
            if (sc.z_index < 0 || sc.z_index >= r) {
                c.pass = false;
                c.witness = "bracket " + pair_str(sc.i, sc.j) + " leaves z";
            } else {
                hit[sc.z_index] = 1;
            }
        }
        for (int l = 0; l < r && c.pass; ++l)
            if (!hit[l]) {
                c.pass = false;
                c.witness = "omega" + std::to_string(l + 1) + " is not a bracket";
            }
        if (c.pass) {
            // u central iff sum_i x_i [e_i, e_j] = 0 for every j
            RatMatrix m(n * r, RatVector(n, Rational(0)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const auto [coef, idx] = alg.bracket(i + 1, j + 1);
                    if (coef != 0) m[j * r + idx][i] = coef;
                }
            const int rk = rank(m);
            if (rk != n) {
                c.pass = false;
                c.witness = "center meets h in dimension " + std::to_string(n - rk);
            }
        }
        rep.checks.push_back(c);
    }

    {  // (g)
        HTypeCheck c{'g', "neutral h when z is indefinite", true, ""};
        if (alg.sig_z.t >= 1 && alg.sig_h.s != alg.sig_h.t) {
            c.pass = false;
            c.witness = "sig_h = (" + std::to_string(alg.sig_h.s) + "," + std::to_string(alg.sig_h.t) + ")";
        }
        rep.checks.push_back(c);
    }

    {  // (h)
        HTypeCheck c{'h', "rational constants +-1/k", true, ""};
        for (const auto& sc : alg.structure_constants) {
            const BigInt num = numerator(sc.coeff), den = denominator(sc.coeff);
            if (alg.k % static_cast<long long>(den) != 0 || (num != 1 && num != -1)) {
                c.pass = false;
                c.witness = "[e" + std::to_string(sc.i) + ", e" + std::to_string(sc.j) + "] = " + q_str(sc.coeff);
                break;
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

std::vector<std::vector<OmegaVector>> solve_coefficients(const std::vector<OneFactor>& factors,
                                                         const FreeNilpotent2& N) {
    int unknowns = 0;
    for (const auto& f : factors) unknowns += static_cast<int>(f.pairs.size());
    if (unknowns > 24)
        throw std::invalid_argument("solve_coefficients: " + std::to_string(unknowns) +
                                    " unknowns exceed the exhaustive limit of 24");
    const int n = N.dim_U();

    // Per factor: every sign pattern whose J squares correctly.
    struct Option {
        OmegaVector w;
        IntMatrix j;
    };
    std::vector<std::vector<Option>> options;
    for (const auto& f : factors) {
        if (f.vertex_count() != n) throw std::invalid_argument("solve_coefficients: factor size mismatch");
        std::vector<Option> opts;
        const int m = static_cast<int>(f.pairs.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<std::pair<Edge, int>> terms;
            for (int p = 0; p < m; ++p) terms.push_back({f.pairs[p], (mask >> p) & 1 ? -1 : 1});
            auto w = make_omega(terms);
            const Rational nrm = omega_norm(w, N);
            if (nrm != 1 && nrm != -1) continue;
            auto j = j_operator(w, N);
            if (j * j != -static_cast<long long>(numerator(nrm)) * identity(n)) continue;
            opts.push_back({w, j});
        }
        options.push_back(std::move(opts));
    }

    std::vector<std::vector<OmegaVector>> out;
    std::vector<const Option*> chosen;
    auto rec = [&](auto&& self, std::size_t f) -> void {
        if (f == factors.size()) {
            std::vector<OmegaVector> sol;
            for (const auto* o : chosen) sol.push_back(o->w);
            out.push_back(std::move(sol));
            return;
        }
        for (const auto& o : options[f]) {
            bool ok = true;
            for (const auto* p : chosen)
                if (o.j * p->j + p->j * o.j != IntMatrix::Zero(n, n)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&o);
            self(self, f + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    auto key = [](const std::vector<OmegaVector>& s) {
        std::vector<int> v;
        for (const auto& w : s)
            for (const auto& [e, c] : w.terms) v.push_back(c);
        return v;
    };
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

OneFactorization k4_factors() {
    return {make_factor({{1, 2}, {3, 4}}), make_factor({{1, 3}, {2, 4}}), make_factor({{1, 4}, {2, 3}})};
}

K4Coords k4_coords(const std::vector<OmegaVector>& w) {
    if (w.size() != 3) throw std::invalid_argument("k4_coords: need three omegas");
    return {w[0].coefficient(1, 2), w[1].coefficient(2, 4), w[1].coefficient(1, 3),
            w[0].coefficient(3, 4), w[2].coefficient(2, 3), w[2].coefficient(1, 4)};
}

std::vector<OmegaVector> k4_omegas(const K4Coords& c) {
    const auto [a12, a24, a13, a34, a23, a14] = c;
    return {make_omega({{{1, 2}, a12}, {{3, 4}, a34}}), make_omega({{{1, 3}, a13}, {{2, 4}, a24}}),
            make_omega({{{1, 4}, a14}, {{2, 3}, a23}})};
}

bool k4_system(const K4Coords& c) {
    const auto [a12, a24, a13, a34, a23, a14] = c;
    return a12 * a24 + a13 * a34 == 0 && a13 * a23 + a14 * a24 == 0 && a14 * a34 - a12 * a23 == 0;
}

bool k4_system2(const K4Coords& c) {
    const auto [a12, a24, a13, a34, a23, a14] = c;
    return a12 * a13 + a24 * a34 == 0 && a13 * a14 + a23 * a24 == 0 && a12 * a14 - a23 * a34 == 0;
}

}  // namespace htype
