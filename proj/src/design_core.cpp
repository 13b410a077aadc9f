#include "htype/design_core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "htype/hr_arith.hpp"

namespace htype {

IntMatrix DesignMatrix::coefficient(int var) const {
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (entries[i][j].var == var) m(i, j) = entries[i][j].sign;
    return m;
}

IntMatrix DesignMatrix::evaluate(const std::vector<long long>& values) const {
    if (static_cast<int>(values.size()) < var_count) throw std::invalid_argument("evaluate: too few values");
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (entries[i][j].var) m(i, j) = entries[i][j].sign * values[entries[i][j].var - 1];
    return m;
}

DesignMatrix design_from_matrices(const std::vector<IntMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("design_from_matrices: no matrices");
    DesignMatrix d;
    d.n = static_cast<int>(parts.front().rows());
    d.var_count = static_cast<int>(parts.size());
    d.entries.assign(d.n, std::vector<DesignEntry>(d.n));
    for (int k = 0; k < d.var_count; ++k) {
        const auto& m = parts[k];
        if (m.rows() != d.n || m.cols() != d.n || !has_unit_entries(m))
            throw std::invalid_argument("design_from_matrices: matrix " + std::to_string(k + 1) +
                                        " is not a square 0/+-1 matrix of order " + std::to_string(d.n));
        for (int i = 0; i < d.n; ++i)
            for (int j = 0; j < d.n; ++j) {
                if (m(i, j) == 0) continue;
                if (d.entries[i][j].var)
                    throw std::invalid_argument("design_from_matrices: matrices " +
                                                std::to_string(d.entries[i][j].var) + " and " +
                                                std::to_string(k + 1) + " collide at (" + std::to_string(i + 1) +
                                                "," + std::to_string(j + 1) + ")");
                d.entries[i][j] = {k + 1, static_cast<int>(m(i, j))};
            }
    }
    return d;
}

DesignMatrix from_family(const HRFamily& fam, bool include_identity) {
    std::vector<IntMatrix> parts;
    if (include_identity) parts.push_back(identity(fam.n));
    parts.insert(parts.end(), fam.members.begin(), fam.members.end());
    return design_from_matrices(parts);
}

namespace {

// X Y^T with both variable sets shifted into a shared index space.
SymbolicQuadratic product(const DesignMatrix& x, const DesignMatrix& y, int x_offset, int y_offset) {
    if (x.n != y.n) throw std::invalid_argument("multiply_transpose: orders differ");
    const int n = x.n;
    SymbolicQuadratic q;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                const auto& a = x.entries[i][m];
                const auto& b = y.entries[j][m];
                if (!a.var || !b.var) continue;
                const int u = a.var + x_offset, v = b.var + y_offset;
                auto [it, fresh] = q.coefficients.try_emplace({std::min(u, v), std::max(u, v)}, IntMatrix::Zero(n, n));
                it->second(i, j) += a.sign * b.sign;
            }
    return q;
}

}  // namespace

SymbolicQuadratic multiply_transpose(const DesignMatrix& x, const DesignMatrix& y, int y_offset) {
    return product(x, y, 0, y_offset);
}

bool verify_od(const DesignMatrix& d, const std::vector<int>& type_weights) {
    if (static_cast<int>(type_weights.size()) != d.var_count)
        throw std::invalid_argument("verify_od: need one weight per variable");
    const auto q = multiply_transpose(d, d, 0);
    const IntMatrix id = identity(d.n);
    for (int v = 1; v <= d.var_count; ++v) {
        auto it = q.coefficients.find({v, v});
        if (it == q.coefficients.end() || it->second != type_weights[v - 1] * id) return false;
    }
    for (const auto& [key, m] : q.coefficients)
        if (key.first != key.second && !m.isZero()) return false;
    return true;
}

bool verify_amicable(const DesignMatrix& x, const DesignMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("verify_amicable: orders differ");
    auto diff = product(x, y, 0, x.var_count).coefficients;
    for (const auto& [key, m] : product(y, x, x.var_count, 0).coefficients) {
        auto [it, fresh] = diff.try_emplace(key, IntMatrix::Zero(x.n, x.n));
        it->second -= m;
    }
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second.isZero(); });
}

namespace {

std::vector<long long> random_values(int count, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-9, 9);
    std::vector<long long> v(count);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

bool numeric_od_check(const DesignMatrix& d, const std::vector<int>& type_weights, std::mt19937_64& rng, int trials) {
    if (static_cast<int>(type_weights.size()) != d.var_count)
        throw std::invalid_argument("numeric_od_check: need one weight per variable");
    for (int trial = 0; trial < trials; ++trial) {
        const auto x = random_values(d.var_count, rng);
        long long s = 0;
        for (int k = 0; k < d.var_count; ++k) s += type_weights[k] * x[k] * x[k];
        const IntMatrix w = d.evaluate(x);
        if (w * w.transpose() != s * identity(d.n)) return false;
    }
    return true;
}

bool numeric_amicable_check(const DesignMatrix& x, const DesignMatrix& y, std::mt19937_64& rng, int trials) {
    for (int trial = 0; trial < trials; ++trial) {
        const IntMatrix a = x.evaluate(random_values(x.var_count, rng));
        const IntMatrix b = y.evaluate(random_values(y.var_count, rng));
        if (a * b.transpose() != b * a.transpose()) return false;
    }
    return true;
}

EtaReport verify_eta(const HRFamily& fam, const Metric& eta) {
    if (eta.size() != fam.n) throw std::invalid_argument("verify_eta: metric size differs from the order");
    const IntMatrix h = diagonal(eta.signs);
    EtaReport rep;
    rep.matches_signature = true;
    for (int l = 0; l < fam.size(); ++l) {
        const IntMatrix& e = fam.members[l];
        EtaCheck c;
        c.member = l + 1;
        c.expect_isometry = l < fam.s;
        // members are orthogonal signed permutations, so E^-1 = E^T
        const bool orthogonal = is_signed_permutation(e) && e * e.transpose() == identity(fam.n);
        const IntMatrix lhs = h * e.transpose() * h;
        c.isometry = orthogonal && lhs == e.transpose();
        c.anti_isometry = orthogonal && lhs == -e.transpose();
        rep.matches_signature = rep.matches_signature && c.ok();
        rep.members.push_back(c);
    }
    return rep;
}

std::string EtaReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : members)
        os << "member " << c.member << ": expect " << (c.expect_isometry ? "isometry" : "anti-isometry")
           << ", isometry " << (c.isometry ? "yes" : "no") << ", anti-isometry " << (c.anti_isometry ? "yes" : "no")
           << (c.ok() ? "" : "  MISMATCH") << '\n';
    os << "signature split: " << (matches_signature ? "match" : "mismatch") << '\n';
    return os.str();
}

int max_variables(std::int64_t n) { return rho(n); }

std::optional<int> max_amicable_s(std::int64_t n, int t) {
    if (n < 2 || n % 2) throw std::invalid_argument("max_amicable_s: order must be even");
    if (t < 1) throw std::invalid_argument("max_amicable_s: t must be at least 1");
    const auto d = decompose(n);
    const auto ms = max_signature_s(4 * d.alpha + d.beta, t);
    if (!ms) return std::nullopt;
    return *ms + 1;
}

AmicablePair amicable_from_family(const HRFamily& fam) {
    if (fam.t < 1) throw std::invalid_argument("amicable_from_family: need at least one symmetric member");
    std::vector<IntMatrix> xs{identity(fam.n)}, ys;
    for (int l = 0; l < fam.size(); ++l) (l < fam.s ? xs : ys).push_back(fam.members[l]);
    return {design_from_matrices(xs), design_from_matrices(ys)};
}

HRFamily derived_family(const DesignMatrix& x, const DesignMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("derived_family: orders differ");
    HRFamily f;
    f.n = x.n;
    const IntMatrix x1t = x.coefficient(1).transpose();
    for (int k = 2; k <= x.var_count; ++k) f.members.push_back(x1t * x.coefficient(k));
    for (int j = 1; j <= y.var_count; ++j) f.members.push_back(x1t * y.coefficient(j));
    f.s = x.var_count - 1;
    f.t = y.var_count;
    return f;
}

std::string format_design(const DesignMatrix& d, char letter) {
    std::vector<std::vector<std::string>> cells(d.n, std::vector<std::string>(d.n));
    std::size_t width = 1;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) {
            const auto& e = d.entries[i][j];
            cells[i][j] = e.var ? (e.sign < 0 ? "-" : "") + std::string(1, letter) + std::to_string(e.var) : "0";
            width = std::max(width, cells[i][j].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        os << "[";
        for (const auto& c : row) os << ' ' << std::string(width - c.size(), ' ') << c;
        os << " ]\n";
    }
    return os.str();
}

}  // namespace htype
