#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htype/exact_linalg.hpp"
#include "htype/graph_factor.hpp"
#include "htype/hr_arith.hpp"
#include "htype/hr_family.hpp"
#include "htype/matrix.hpp"
#include "htype/omega.hpp"

namespace htype {

/// Diagonal scalar product with (e_i, e_i) = signs[i] / scale.
struct Metric {
    std::vector<int> signs;
    int scale = 1;

    Metric() = default;
    Metric(std::vector<int> s, int k);
    int size() const { return static_cast<int>(signs.size()); }
    Rational value(int i) const { return Rational(signs[i], scale); }
    SignaturePair signature() const;
};

/// N = U + Z on generators e_1..e_2k; Z has one basis vector e_i x e_j per
/// pair i < j, in lexicographic order.
struct FreeNilpotent2 {
    int k = 0;
    Metric metric_U;
    Metric metric_Z;
    std::vector<Edge> basis_Z;

    int dim_U() const { return 2 * k; }
    int dim_Z() const { return static_cast<int>(basis_Z.size()); }
    /// Index of e_i x e_j (either order) in basis_Z.
    int pair_index(int i, int j) const;
    int z_sign(int i, int j) const { return metric_Z.signs[pair_index(i, j)]; }
};

using ZSigns = std::map<Edge, int>;

/// U gets +1 on the first p indices and -1 on the rest, unless u_order is
/// given: a permutation of 1..2k listing the positive directions first.
/// Pairs missing from z_signs default to +1.
FreeNilpotent2 build_free(int k, SignaturePair sig_U, const ZSigns& z_signs = {},
                          const std::vector<int>& u_order = {});

/// +1 on the pairs of the first s factors, -1 on the next t, +1 elsewhere.
ZSigns default_z_signs(const std::vector<OneFactor>& factors, int s, int t);

/// (J u, v)_U = (omega, u x v)_Z. Entry (j, i) = eps_j * eps_ij * alpha_ij.
IntMatrix j_operator(const OmegaVector& omega, const FreeNilpotent2& N);

/// Inverse of j_operator: reads alpha_ij off a signed permutation J whose
/// support is a one-factor. Throws if J is not of that form for N.
OmegaVector omega_from_j(const IntMatrix& j, const FreeNilpotent2& N);

/// (omega, omega)_Z as an exact rational.
Rational omega_norm(const OmegaVector& omega, const FreeNilpotent2& N);

/// All pairs inside one half {1..k} / {k+1..2k}, or all pairs across.
bool check_block_structure(const OneFactor& factor, int k);

using ZVector = RatVector;  // coordinates on basis_Z

ZVector to_z_vector(const OmegaVector& omega, const FreeNilpotent2& N);
Rational z_inner(const ZVector& a, const ZVector& b, const FreeNilpotent2& N);

/// Basis of the ideal A = Omega-perp in Z. Disjoint one-factor supports
/// give the explicit vectors alpha_p1 e_p1 - eps eps' alpha_pi e_pi per
/// factor plus unit vectors on uncovered pairs; otherwise an exact
/// nullspace. Throws on dependent omegas.
std::vector<ZVector> orthogonal_complement(const std::vector<OmegaVector>& omegas,
                                           const FreeNilpotent2& N);

/// Coordinates of the projection of z onto span(omegas) along A.
RatVector project_to_center(const ZVector& z, const std::vector<OmegaVector>& omegas,
                            const FreeNilpotent2& N);

struct StructureConstant {
    int i = 0, j = 0;  // 1-based, i < j
    Rational coeff;    // [e_i, e_j] = coeff * omega_{z_index}
    int z_index = 0;   // 0-based into omega_basis
};

struct HTypeAlgebra {
    int k = 0;
    SignaturePair sig_h;
    SignaturePair sig_z;
    std::vector<int> u_signs;
    std::vector<std::pair<Edge, int>> z_signs;  // Z-metric sign per pair, as chosen
    std::vector<OmegaVector> omega_basis;
    std::vector<int> omega_norms;  // (omega_l, omega_l) = +-1
    std::vector<StructureConstant> structure_constants;  // nonzero ones, i < j
    std::vector<IntMatrix> j_matrices;

    int dim_h() const { return 2 * k; }
    /// [e_n, e_m] as (coefficient, z index); coefficient 0 when it vanishes.
    std::pair<Rational, int> bracket(int n, int m) const;
};

/// Quotient N / A. With enforce set, throws std::invalid_argument when a
/// pair of J-operators fails to anticommute (naming the pair) or a square
/// is not -(omega,omega) id; with enforce unset the algebra is built anyway
/// so verify_h_type can report the failure.
HTypeAlgebra quotient(const FreeNilpotent2& N, const std::vector<OmegaVector>& omegas,
                      bool enforce = true);

/// The algebra whose J-operators are the family's members: h of dimension
/// n, neutral when t >= 1 and positive definite otherwise, Z signs from
/// default_z_signs on the members' support factors.
HTypeAlgebra algebra_from_family(const HRFamily& fam);

struct HTypeCheck {
    char id = 'a';
    std::string name;
    bool pass = false;
    std::string witness;  // first violation, empty on pass
};

struct HTypeReport {
    std::vector<HTypeCheck> checks;
    bool pass() const;
    const HTypeCheck& check(char id) const;
    std::string to_text() const;
};

HTypeReport verify_h_type(const HTypeAlgebra& alg);

/// Every +-1 choice of the alpha_ij on the given factors for which the
/// J-operators pairwise anticommute and J^2 = -(omega,omega) id, sorted
/// lexicographically by (factor, pair) coefficient sequence. Throws when
/// there are more than 24 unknowns.
std::vector<std::vector<OmegaVector>> solve_coefficients(const std::vector<OneFactor>& factors,
                                                         const FreeNilpotent2& N);

// K_4 with factors {12,34}, {13,24}, {14,23}; coordinates in the order
// (a12, a24, a13, a34, a23, a14).
using K4Coords = std::array<int, 6>;
K4Coords k4_coords(const std::vector<OmegaVector>& omegas);
std::vector<OmegaVector> k4_omegas(const K4Coords& c);
bool k4_system(const K4Coords& c);
bool k4_system2(const K4Coords& c);
OneFactorization k4_factors();

}  // namespace htype
