#pragma once

#include <string>
#include <vector>

#include "htype/graph_factor.hpp"
#include "htype/matrix.hpp"
#include "htype/omega.hpp"

namespace htype {

/// Members 1..s are skew with square -I, members s+1..s+t symmetric with
/// square +I; all pairwise anticommuting with disjoint supports.
struct HRFamily {
    int n = 0;
    int s = 0;
    int t = 0;
    std::vector<IntMatrix> members;

    int size() const { return static_cast<int>(members.size()); }
};

/// Largest order handled by the builders (2^5).
inline constexpr int kMaxFamilyExponent = 5;

/// First `count` members of the maximal positive family of order 2^r.
HRFamily build_positive(int r, int count);

/// An HR(s,t) family of order 2^r whose members are isometries (first s)
/// and anti-isometries (last t) of neutral_eta(2^r); for t = 0 the metric
/// is definite and this is build_positive(r, s).
HRFamily build_mixed(int r, int s, int t);

/// Order u * 2^r with u odd: block-diagonal repetition of the 2^r family.
HRFamily build_for_order(int n, int s, int t);

/// {P x I_n} + {Q x E_i}, P = [[0,-1],[1,0]], Q = diag(1,-1).
HRFamily double_family(const HRFamily& f);
HRFamily repeat_blocks(const HRFamily& f, int u);

/// diag(+1 x n/2, -1 x n/2)
std::vector<int> neutral_eta(int n);

/// B_l: +1 at i and -1 at j for every pair (i, j), i < j, of the factor.
IntMatrix symmetrizer(const OneFactor& f);

struct MemberCheck {
    bool signed_permutation = false;
    bool symmetry_ok = false;  // skew for the first s, symmetric after
    bool square_ok = false;    // -I for the first s, +I after
};

struct PairCheck {
    int a = 0, b = 0;  // 1-based member indices
    bool anticommute = false;
    bool hadamard_disjoint = false;
};

struct FamilyReport {
    std::vector<MemberCheck> members;
    std::vector<PairCheck> pairs;
    bool shape_ok = false;  // s + t = member count, square matrices of order n
    bool pass = false;
    std::string to_text() const;
};

FamilyReport verify_family(const HRFamily& f);

/// Matching of a zero-diagonal signed permutation with symmetric support.
OneFactor support_factor(const IntMatrix& e);

/// Coefficient on (i, j) is the entry at row j, column i.
OmegaVector omega_from_matrix(const IntMatrix& e);

/// Positive-definite convention: alpha at (j, i), -alpha at (i, j).
IntMatrix matrix_from_omega(const OmegaVector& w, int n);

/// Conjugate every member: B E B^T.
HRFamily conjugate(const HRFamily& f, const IntMatrix& b);

}  // namespace htype
