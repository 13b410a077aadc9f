#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htype/algebra_core.hpp"
#include "htype/exact_linalg.hpp"
#include "htype/hr_family.hpp"
#include "htype/matrix.hpp"

namespace htype {

IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Column-stacking: vec(M)[i + rows * j] = M(i, j).
IntMatrix vec(const IntMatrix& m);
IntMatrix unvec(const IntMatrix& v, int rows, int cols);

/// K with K vec(X) = vec(X^T) for X of shape rows x cols.
IntMatrix commutation_matrix(int rows, int cols);

/// E^T x I - I x Et: the equations Et B = B E on vec(B).
IntMatrix conjugacy_block(const IntMatrix& e, const IntMatrix& et);

/// One equation v1 * x[c1] + v2 * x[c2] = 0 on vec(B).
struct SparseRow {
    int c1 = 0, v1 = 0, c2 = 0, v2 = 0;
};

struct ConjugacySystem {
    int n = 0;  // order of the families
    int r = 0;  // family size
    std::vector<SparseRow> rows;  // block l occupies rows l*n^2 .. (l+1)*n^2 - 1

    IntMatrix dense() const;
};

/// Throws std::invalid_argument on mismatched order or signature, and when
/// a row does not have exactly two +-1 entries.
ConjugacySystem build_system(const HRFamily& fam1, const HRFamily& fam2);

/// Lexicographically least signed permutation solution in row-major order
/// with entry order +1 < -1 < 0, or nullopt.
std::optional<IntMatrix> solve_signed_perm(const ConjugacySystem& sys);

/// Signed permutation solutions in the same order, at most cap of them.
std::vector<IntMatrix> enumerate_signed_perm(const ConjugacySystem& sys, int cap = 16);

/// B a signed permutation with B^T = B^-1 and fam2_l B = B fam1_l for all l.
bool verify_conjugacy(const IntMatrix& b, const HRFamily& fam1, const HRFamily& fam2);

/// A reordering (and sign change) of fam2's members that makes the
/// families conjugate. order[l] is the fam2 member paired with fam1's l.
struct FamilyMatch {
    std::vector<int> order;
    std::vector<int> signs;
    IntMatrix b;
};

/// Tries sign masks (all +1 first) in the outer loop and member orders
/// (lexicographic, within the skew and symmetric blocks) in the inner loop.
/// Orders are searched exhaustively for families of at most 5 members,
/// otherwise only the given order is used.
std::optional<FamilyMatch> match_families(const HRFamily& fam1, const HRFamily& fam2);

/// fam2 with members reordered and sign-flipped per the match.
HRFamily apply_match(const HRFamily& fam2, const std::vector<int>& order, const std::vector<int>& signs);

struct RankCertificate {
    IntMatrix f;               // 2 * sum (I - A_j)
    std::vector<IntMatrix> a;  // A_j = E_j x Et_j
    bool involutions = false;  // A_j^2 = I
    bool commuting = false;
    bool gram_matches = false;  // F equals the Gram matrix of the stacked system
    bool product_zero = false;  // F * prod (I + A_j) = 0
    bool valid() const { return involutions && commuting && gram_matches && product_zero; }
};

/// Orders up to 16 (the n^2 x n^2 products get large beyond that).
RankCertificate rank_deficiency_certificate(const HRFamily& fam1, const HRFamily& fam2);

/// Gram matrix E^T E of the stacked system, from its sparse rows.
IntMatrix system_gram(const ConjugacySystem& sys);

struct AlgebraIso {
    IntMatrix b;
    RatMatrix p;  // p[l][m]: coefficient of alg2's omega_m in B(omega_l)
    bool center_exact = false;  // B(omega_l) lies in span(omega~) with no ideal part
    bool brackets_ok = false;   // [Bu, Bv] = p [u, v]
    bool j_relation_ok = false; // J~_{p omega_l} = B J_l B^-1
    std::string violation;
    bool ok() const { return brackets_ok && j_relation_ok; }
};

/// B acts on U; it induces e_i x e_j -> Be_i x Be_j on the center.
AlgebraIso lift_to_algebra_iso(const IntMatrix& b, const HTypeAlgebra& alg1, const HTypeAlgebra& alg2);

/// B(omega) for a signed permutation B.
OmegaVector apply_to_omega(const IntMatrix& b, const OmegaVector& w);

}  // namespace htype
