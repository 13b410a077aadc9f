#include "htype/hr_family.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "htype/hr_arith.hpp"

namespace htype {

namespace {

// L_i e_x = kOctonion[i][x] e_{i xor x}; row 0 is the unit.
constexpr std::array<std::array<int, 8>, 8> kOctonion{{
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, -1, 1, -1, -1, 1},
    {1, -1, -1, 1, 1, 1, -1, -1},
    {1, 1, -1, -1, 1, -1, 1, -1},
    {1, -1, -1, -1, -1, 1, 1, 1},
    {1, 1, -1, 1, -1, -1, -1, 1},
    {1, 1, 1, -1, -1, 1, -1, -1},
    {1, -1, 1, 1, -1, -1, 1, -1},
}};

IntMatrix kron_int(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void sort_by_support(std::vector<IntMatrix>& ms) {
    std::stable_sort(ms.begin(), ms.end(), [](const IntMatrix& x, const IntMatrix& y) {
        return support_factor(x) < support_factor(y);
    });
}

HRFamily base_family(int r) {
    HRFamily f;
    f.n = 1 << r;
    switch (r) {
        case 1:
            f.members = {from_rows({{0, -1}, {1, 0}})};
            break;
        case 2:
            // alpha12 = 1, alpha34 = -1 | alpha13 = 1, alpha24 = 1 | alpha14 = -1, alpha23 = 1
            f.members = {
                matrix_from_omega(make_omega({{{1, 2}, 1}, {{3, 4}, -1}}), 4),
                matrix_from_omega(make_omega({{{1, 3}, 1}, {{2, 4}, 1}}), 4),
                matrix_from_omega(make_omega({{{1, 4}, -1}, {{2, 3}, 1}}), 4),
            };
            break;
        case 3:
            for (int i = 1; i < 8; ++i) {
                IntMatrix m = IntMatrix::Zero(8, 8);
                for (int x = 0; x < 8; ++x) m(i ^ x, x) = kOctonion[i][x];
                f.members.push_back(m);
            }
            break;
        default: {
            f = double_family(base_family(r - 1));
            break;
        }
    }
    f.s = f.size();
    f.t = 0;
    return f;
}

// A signed translation M e_x = s(x) e_{x xor a}; bit x of neg is set when
// s(x) = -1. Every member of the base families and the neutral metric have
// this shape, so the group they generate does too.
struct Translation {
    std::uint32_t a = 0;
    std::uint64_t neg = 0;
    friend auto operator<=>(const Translation&, const Translation&) = default;
};

std::uint64_t shift_mask(std::uint64_t m, std::uint32_t b, int n) {
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x)
        if ((m >> (x ^ b)) & 1u) out |= std::uint64_t{1} << x;
    return out;
}

Translation mul(const Translation& m, const Translation& k, int n) {
    return {m.a ^ k.a, k.neg ^ shift_mask(m.neg, k.a, n)};
}

Translation to_translation(const IntMatrix& e) {
    const int n = static_cast<int>(e.rows());
    Translation t;
    bool first = true;
    for (int x = 0; x < n; ++x) {
        Eigen::Index y = -1;
        for (Eigen::Index r = 0; r < n; ++r)
            if (e(r, x) != 0) y = r;
        const auto a = static_cast<std::uint32_t>(x ^ y);
        if (first) t.a = a, first = false;
        if (a != t.a) throw std::logic_error("base family member is not a signed translation");
        if (e(y, x) < 0) t.neg |= std::uint64_t{1} << x;
    }
    return t;
}

IntMatrix to_matrix(const Translation& t, int n) {
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x) m(x ^ t.a, x) = ((t.neg >> x) & 1u) ? -1 : 1;
    return m;
}

struct MixedSearch {
    int n;
    std::uint64_t full;
    std::vector<Translation> sym, skew;

    bool anticommute(const Translation& m, const Translation& k) const {
        auto mk = mul(m, k, n), km = mul(k, m, n);
        return mk.neg == (~km.neg & full);
    }

    bool compatible(const Translation& c, const std::vector<Translation>& chosen) const {
        for (const auto& p : chosen)
            if (p.a == c.a || !anticommute(c, p)) return false;
        return true;
    }

    // Symmetric members first (they are the scarcer kind), then skew.
    bool run(std::vector<Translation>& chosen, std::vector<int> cs, std::vector<int> ck, int need_sym,
             int need_skew) const {
        if (need_sym == 0 && need_skew == 0) return true;
        if (static_cast<int>(cs.size()) < need_sym || static_cast<int>(ck.size()) < need_skew)
            return false;
        const bool pick_sym = need_sym > 0;
        const auto& pool = pick_sym ? sym : skew;
        const auto& cand = pick_sym ? cs : ck;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const Translation c = pool[cand[i]];
            chosen.push_back(c);
            std::vector<int> ns, nk;
            auto keep = [&](const std::vector<Translation>& from, const std::vector<int>& idx,
                            std::size_t start, std::vector<int>& out) {
                for (std::size_t j = start; j < idx.size(); ++j)
                    if (compatible(from[idx[j]], chosen)) out.push_back(idx[j]);
            };
            if (pick_sym) {
                keep(sym, cs, i + 1, ns);
                keep(skew, ck, 0, nk);
            } else {
                keep(skew, ck, i + 1, nk);
            }
            if (run(chosen, ns, nk, need_sym - (pick_sym ? 1 : 0), need_skew - (pick_sym ? 0 : 1)))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

void require_order(int r, const char* who) {
    if (r < 1 || r > kMaxFamilyExponent)
        throw std::out_of_range(std::string(who) + ": orders above 2^5 are out of scope (got r=" +
                                std::to_string(r) + ")");
}

}  // namespace

HRFamily double_family(const HRFamily& f) {
    const IntMatrix p = from_rows({{0, -1}, {1, 0}});
    const IntMatrix q = from_rows({{1, 0}, {0, -1}});
    HRFamily out;
    out.n = 2 * f.n;
    out.members.push_back(kron_int(p, identity(f.n)));
    for (const auto& e : f.members) out.members.push_back(kron_int(q, e));
    sort_by_support(out.members);
    out.s = f.s + 1;
    out.t = f.t;
    return out;
}

HRFamily repeat_blocks(const HRFamily& f, int u) {
    if (u < 1) throw std::invalid_argument("repeat_blocks: multiplier must be positive");
    HRFamily out = f;
    out.n = f.n * u;
    for (auto& e : out.members) e = kron_int(identity(u), e);
    return out;
}

HRFamily build_positive(int r, int count) {
    require_order(r, "build_positive");
    const int limit = rho(std::int64_t{1} << r) - 1;
    if (count < 1 || count > limit)
        throw std::invalid_argument("build_positive: count must lie in 1.." + std::to_string(limit));
    HRFamily f = base_family(r);
    f.members.resize(count);
    f.s = count;
    return f;
}

std::vector<int> neutral_eta(int n) {
    std::vector<int> eta(n, 1);
    for (int i = n / 2; i < n; ++i) eta[i] = -1;
    return eta;
}

HRFamily build_mixed(int r, int s, int t) {
    require_order(r, "build_mixed");
    if (s < 0 || t < 0) throw std::invalid_argument("build_mixed: negative signature");
    const int n = 1 << r;
    if (t == 0) {
        if (s == 0) return HRFamily{n, 0, 0, {}};
        return build_positive(r, s);
    }
    const auto ms = max_signature_s(r, t);
    if (!ms || s > *ms)
        throw std::invalid_argument("build_mixed: signature (" + std::to_string(s) + "," +
                                    std::to_string(t) + ") is not realizable at order " +
                                    std::to_string(n));

    std::vector<Translation> gens;
    for (const auto& e : base_family(r).members) gens.push_back(to_translation(e));
    Translation eta{0, 0};
    for (int x = n / 2; x < n; ++x) eta.neg |= std::uint64_t{1} << x;
    gens.push_back(eta);

    std::set<Translation> group{Translation{}};
    std::vector<Translation> frontier{Translation{}};
    while (!frontier.empty()) {
        std::vector<Translation> next;
        for (const auto& g : frontier)
            for (const auto& h : gens)
                if (auto p = mul(g, h, n); group.insert(p).second) next.push_back(p);
        frontier = std::move(next);
    }

    MixedSearch search{n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, {}, {}};
    const auto half = static_cast<std::uint32_t>(n / 2);
    for (const auto& g : group) {
        if (g.a == 0 || (g.neg & 1u)) continue;  // one representative of +-g
        const auto moved = shift_mask(g.neg, g.a, n);
        if (g.a < half && moved == (~g.neg & search.full))
            search.skew.push_back(g);  // skew, commutes with eta
        else if (g.a >= half && moved == g.neg)
            search.sym.push_back(g);  // symmetric, anticommutes with eta
    }
    std::vector<int> cs(search.sym.size()), ck(search.skew.size());
    std::iota(cs.begin(), cs.end(), 0);
    std::iota(ck.begin(), ck.end(), 0);
    std::vector<Translation> chosen;
    if (!search.run(chosen, cs, ck, t, s))
        throw std::logic_error("build_mixed: no witness found for a realizable signature");

    std::vector<IntMatrix> skew_members, sym_members;
    for (const auto& c : chosen) {
        auto m = to_matrix(c, n);
        (c.a < half ? skew_members : sym_members).push_back(m);
    }
    sort_by_support(skew_members);
    sort_by_support(sym_members);
    HRFamily f{n, s, t, std::move(skew_members)};
    for (auto& m : sym_members) f.members.push_back(std::move(m));
    return f;
}

HRFamily build_for_order(int n, int s, int t) {
    const auto d = decompose(n);
    const int r = 4 * d.alpha + d.beta;
    HRFamily base = build_mixed(r, s, t);
    if (d.u == 1) return base;
    HRFamily f = repeat_blocks(base, static_cast<int>(d.u));
    if (t == 0) return f;
    // Reorder the basis so the repeated metric becomes diag(I, -I).
    const auto eta_small = neutral_eta(base.n);
    std::vector<int> pos, negs;
    for (int i = 0; i < n; ++i) (eta_small[i % base.n] > 0 ? pos : negs).push_back(i);
    pos.insert(pos.end(), negs.begin(), negs.end());
    IntMatrix perm = IntMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) perm(k, pos[k]) = 1;
    return conjugate(f, perm);
}

IntMatrix symmetrizer(const OneFactor& f) {
    const int n = f.vertex_count();
    IntMatrix b = IntMatrix::Zero(n, n);
    for (auto [i, j] : f.pairs) {
        b(i - 1, i - 1) = 1;
        b(j - 1, j - 1) = -1;
    }
    return b;
}

OneFactor support_factor(const IntMatrix& e) {
    if (!is_signed_permutation(e)) throw std::invalid_argument("support_factor: not a signed permutation");
    const auto n = e.rows();
    std::vector<Edge> pairs;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (e(i, i) != 0) throw std::invalid_argument("support_factor: nonzero diagonal entry");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if ((e(i, j) != 0) != (e(j, i) != 0))
                throw std::invalid_argument("support_factor: asymmetric support");
            if (e(i, j) != 0) pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
        }
    }
    return make_factor(std::move(pairs));
}

OmegaVector omega_from_matrix(const IntMatrix& e) {
    std::vector<std::pair<Edge, int>> terms;
    for (auto [i, j] : support_factor(e).pairs) terms.push_back({{i, j}, static_cast<int>(e(j - 1, i - 1))});
    return make_omega(std::move(terms));
}

IntMatrix matrix_from_omega(const OmegaVector& w, int n) {
    if (w.factor().vertex_count() != n)
        throw std::invalid_argument("matrix_from_omega: omega support does not cover the order");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (const auto& [e, c] : w.terms) {
        m(e.second - 1, e.first - 1) = c;
        m(e.first - 1, e.second - 1) = -c;
    }
    return m;
}

HRFamily conjugate(const HRFamily& f, const IntMatrix& b) {
    HRFamily out = f;
    for (auto& e : out.members) e = b * e * b.transpose();
    return out;
}

FamilyReport verify_family(const HRFamily& f) {
    FamilyReport rep;
    rep.shape_ok = f.s >= 0 && f.t >= 0 && f.s + f.t == f.size();
    for (const auto& e : f.members) rep.shape_ok = rep.shape_ok && e.rows() == f.n && e.cols() == f.n;
    bool pass = rep.shape_ok;
    if (!rep.shape_ok) {
        rep.pass = false;
        return rep;
    }
    const IntMatrix id = identity(f.n);
    const IntMatrix zero = IntMatrix::Zero(f.n, f.n);
    for (int a = 0; a < f.size(); ++a) {
        const auto& e = f.members[a];
        const bool skew_slot = a < f.s;
        MemberCheck mc;
        mc.signed_permutation = is_signed_permutation(e);
        mc.symmetry_ok = skew_slot ? is_skew(e) : is_symmetric(e);
        mc.square_ok = e * e == (skew_slot ? IntMatrix(-id) : id);
        pass = pass && mc.signed_permutation && mc.symmetry_ok && mc.square_ok;
        rep.members.push_back(mc);
    }
    for (int a = 0; a < f.size(); ++a)
        for (int b = a + 1; b < f.size(); ++b) {
            const auto& x = f.members[a];
            const auto& y = f.members[b];
            PairCheck pc{a + 1, b + 1, x * y + y * x == zero,
                         x.cwiseProduct(y) == zero};
            pass = pass && pc.anticommute && pc.hadamard_disjoint;
            rep.pairs.push_back(pc);
        }
    rep.pass = pass;
    return rep;
}

std::string FamilyReport::to_text() const {
    std::ostringstream os;
    auto ok = [](bool b) { return b ? "ok" : "FAIL"; };
    os << "shape: " << ok(shape_ok) << '\n';
    for (std::size_t i = 0; i < members.size(); ++i)
        os << "member " << i + 1 << ": signed-permutation " << ok(members[i].signed_permutation)
           << ", symmetry " << ok(members[i].symmetry_ok) << ", square " << ok(members[i].square_ok)
           << '\n';
    for (const auto& p : pairs)
        os << "pair " << p.a << "," << p.b << ": anticommute " << ok(p.anticommute) << ", disjoint "
           << ok(p.hadamard_disjoint) << '\n';
    os << "overall: " << (pass ? "pass" : "fail") << '\n';
    return os.str();
}

}  // namespace htype
