#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace htype {

/// n = u * 2^(4*alpha + beta), u odd, beta in 0..3
struct RhoDecomposition {
    std::int64_t u = 1;
    int alpha = 0;
    int beta = 0;
};

struct SignaturePair {
    int s = 0;
    int t = 0;
    friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

/// Raised when a Wolfe value is outside what the base table, the
/// recurrences and the mod-16 shift can reach.
class UnsupportedQuery : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Desk-scale caps for the exponent and signature arguments.
inline constexpr int kMaxExponent = 10;
inline constexpr int kMaxSignature = 12;

RhoDecomposition decompose(std::int64_t n);
int rho(std::int64_t n);

/// rho_t(2^r) for 0 <= t <= r, via rho_t(2^r) = rho(2^(r-t)) + t.
int rho_t(int r, int t);
/// sigma_s(2^r): base table, otherwise 0 <= s <= r-1.
int sigma_s(int r, int s);

/// Base table + downward recurrence + mod-16 shift. nullopt = unsupported.
std::optional<int> rho_t_extended(int r, int t);
std::optional<int> sigma_s_extended(int r, int s);

int tau(int r);

/// The residue list exactly as printed (with "6 (mod 4)" read as residue 2).
bool ciatti_admissible(int s, int t, int r);

/// Whether the irreducible Cl_{s,t} module carries an admissible scalar
/// product (s generators squaring to -1, t to +1). Periodic in
/// ((s - t) mod 8, t mod 4).
bool irreducible_admissible(int s, int t);

/// Largest s such that an admissible HR(s,t) module of dimension 2^r
/// exists, or nullopt. Throws UnsupportedQuery when the Wolfe values
/// needed are out of reach.
std::optional<int> max_signature_s(int r, int t);
std::optional<int> max_signature_t(int r, int s);

}  // namespace htype
