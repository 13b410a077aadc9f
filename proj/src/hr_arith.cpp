#include "htype/hr_arith.hpp"

#include <array>
#include <map>
#include <utility>

namespace htype {

namespace {

void require_exponent(int r, const char* who) {
    if (r < 0 || r > kMaxExponent)
        throw std::out_of_range(std::string(who) + ": exponent r must lie in 0.." +
                                std::to_string(kMaxExponent));
}

void require_signature(int v, const char* who) {
    if (v < 0 || v > kMaxSignature)
        throw std::out_of_range(std::string(who) + ": signature entry must lie in 0.." +
                                std::to_string(kMaxSignature));
}

int rho_pow2(int r) { return rho(std::int64_t{1} << r); }

// Wolfe base values, keyed by (r, t) or (r, s) with n = 2^r.
const std::map<std::pair<int, int>, int>& rho_base() {
    static const std::map<std::pair<int, int>, int> table{
        {{1, 1}, 2}, {{1, 2}, 2}, {{3, 5}, 1},
        {{0, 1}, 1},  // Cl_{0,1} = R + R acts on R
    };
    return table;
}

const std::map<std::pair<int, int>, int>& sigma_base() {
    static const std::map<std::pair<int, int>, int> table{
        {{1, 1}, 3}, {{2, 3}, 1}, {{3, 5}, 1}, {{3, 6}, 1}, {{3, 7}, 1},
        {{0, 0}, 2},  // both Cl_{0,0} and Cl_{0,1} fit in dimension 1
    };
    return table;
}

std::optional<int> rho_ext(int r, int t) {
    if (r < 0 || t < 0) return std::nullopt;
    if (auto it = rho_base().find({r, t}); it != rho_base().end()) return it->second;
    if (t == 0) return rho_pow2(r);
    if (r >= 1)
        if (auto v = rho_ext(r - 1, t - 1)) return *v + 1;
    if (t >= 8 && r >= 4) return rho_ext(r - 4, t - 8);
    return std::nullopt;
}

std::optional<int> sigma_ext(int r, int s) {
    if (r < 0 || s < 0) return std::nullopt;
    if (auto it = sigma_base().find({r, s}); it != sigma_base().end()) return it->second;
    if (s == 0 && r >= 1) return rho_pow2(r - 1) + 2;
    if (r >= 1 && s >= 1)
        if (auto v = sigma_ext(r - 1, s - 1)) return *v + 1;
    if (s >= 8 && r >= 4) return sigma_ext(r - 4, s - 8);
    return std::nullopt;
}

// Some HR(., t) family of order 2^r exists iff HR(0, t) does, i.e.
// t < sigma_0(2^r).
bool t_family_exists(int r, int t) {
    if (r < 0) return false;
    if (r == 0) return t <= 1;
    return t <= rho_pow2(r - 1) + 1;
}

bool s_family_exists(int r, int s) {
    if (r < 0) return false;
    return s <= rho_pow2(r) - 1;
}

int need(std::optional<int> v, const char* what, int r, int x) {
    if (!v)
        throw UnsupportedQuery(std::string(what) + " at (r=" + std::to_string(r) + ", " +
                               std::to_string(x) + ") is not reachable from the base table");
    return *v;
}

}  // namespace

RhoDecomposition decompose(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("decompose: n must be positive");
    int e = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++e;
    }
    return {n, e / 4, e % 4};
}

int rho(std::int64_t n) {
    auto d = decompose(n);
    return 8 * d.alpha + (1 << d.beta);
}

int rho_t(int r, int t) {
    require_exponent(r, "rho_t");
    if (t < 0) throw std::invalid_argument("rho_t: t must be nonnegative");
    if (t > r)
        throw std::domain_error("rho_t: t > r is outside the recurrence (use rho_t_extended)");
    return rho_pow2(r - t) + t;
}

int sigma_s(int r, int s) {
    require_exponent(r, "sigma_s");
    if (s < 0) throw std::invalid_argument("sigma_s: s must be nonnegative");
    if (auto it = sigma_base().find({r, s}); it != sigma_base().end() && r >= 1) return it->second;
    if (s > r - 1)
        throw std::domain_error("sigma_s: s > r-1 is outside the recurrence (use sigma_s_extended)");
    return rho_pow2(r - 1 - s) + 2 + s;
}

std::optional<int> rho_t_extended(int r, int t) {
    require_exponent(r, "rho_t_extended");
    require_signature(t, "rho_t_extended");
    return rho_ext(r, t);
}

std::optional<int> sigma_s_extended(int r, int s) {
    require_exponent(r, "sigma_s_extended");
    require_signature(s, "sigma_s_extended");
    return sigma_ext(r, s);
}

int tau(int r) {
    if (r < 0) throw std::invalid_argument("tau: r must be nonnegative");
    return 2 * (r + 1);
}

bool ciatti_admissible(int s, int t, int r) {
    const int d = (((s - t) % 8) + 8) % 8;
    const int m = ((r % 4) + 4) % 4;
    switch (d) {
        case 0:
        case 6: return m == 0 || m == 2;
        case 2:
        case 4: return true;
        case 1:
        case 5: return m == 0 || m == 2 || m == 3;
        case 3: return m == 0 || m == 2;
        default: return m == 3;
    }
}

bool irreducible_admissible(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("irreducible_admissible: negative signature");
    // bit m set  <=>  admissible when t = m (mod 4)
    static constexpr std::array<unsigned, 8> allowed{
        0b1001, 0b1101, 0b1111, 0b0101, 0b1111, 0b0111, 0b0011, 0b0001};
    const int d = (((s - t) % 8) + 8) % 8;
    return (allowed[d] >> (t % 4)) & 1u;
}

std::optional<int> max_signature_s(int r, int t) {
    require_exponent(r, "max_signature_s");
    require_signature(t, "max_signature_s");
    if (r < 1) throw std::out_of_range("max_signature_s: r must be at least 1");
    if (!t_family_exists(r, t)) return std::nullopt;
    const int top = need(rho_ext(r, t), "rho_t", r, t);
    std::optional<int> half;
    if (t_family_exists(r - 1, t)) half = need(rho_ext(r - 1, t), "rho_t", r - 1, t);
    for (int s = top - 1; s >= 0; --s) {
        if (half && s <= *half - 1) return s;  // fits in half the dimension; doubling is admissible
        if (irreducible_admissible(s, t)) return s;
    }
    return std::nullopt;
}

std::optional<int> max_signature_t(int r, int s) {
    require_exponent(r, "max_signature_t");
    require_signature(s, "max_signature_t");
    if (r < 1) throw std::out_of_range("max_signature_t: r must be at least 1");
    if (!s_family_exists(r, s)) return std::nullopt;
    const int top = need(sigma_ext(r, s), "sigma_s", r, s);
    std::optional<int> half;
    if (s_family_exists(r - 1, s)) half = need(sigma_ext(r - 1, s), "sigma_s", r - 1, s);
    for (int t = top - 1; t >= 0; --t) {
        if (half && t <= *half - 1) return t;
        if (irreducible_admissible(s, t)) return t;
    }
    return std::nullopt;
}

}  // namespace htype
