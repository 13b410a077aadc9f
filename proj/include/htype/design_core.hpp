#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "htype/algebra_core.hpp"
#include "htype/hr_family.hpp"
#include "htype/matrix.hpp"

namespace htype {

/// var = 0 marks a zero entry; otherwise the entry is sign * x_var.
struct DesignEntry {
    int var = 0;
    int sign = 0;
    friend bool operator==(const DesignEntry&, const DesignEntry&) = default;
};

struct DesignMatrix {
    int n = 0;
    int var_count = 0;
    std::vector<std::vector<DesignEntry>> entries;

    /// The 0/+-1 matrix X_var with D = sum x_var X_var.
    IntMatrix coefficient(int var) const;
    /// Numeric value at x = values (values[k-1] for x_k).
    IntMatrix evaluate(const std::vector<long long>& values) const;
    friend bool operator==(const DesignMatrix&, const DesignMatrix&) = default;
};

/// Sum x_k X_k; throws if two matrices share a nonzero position or a
/// matrix has entries outside {0, +-1}.
DesignMatrix design_from_matrices(const std::vector<IntMatrix>& parts);

/// Variables: x_1 = identity when included, then the members in order.
DesignMatrix from_family(const HRFamily& fam, bool include_identity);

/// sum over variable pairs a <= b of x_a x_b M_ab. Pairs are keyed on a
/// shared index space (the second design's variables are offset).
struct SymbolicQuadratic {
    std::map<std::pair<int, int>, IntMatrix> coefficients;
};

/// X Y^T with Y's variables shifted by y_offset.
SymbolicQuadratic multiply_transpose(const DesignMatrix& x, const DesignMatrix& y, int y_offset);

bool verify_od(const DesignMatrix& d, const std::vector<int>& type_weights);
bool verify_amicable(const DesignMatrix& x, const DesignMatrix& y);

/// Independent numeric checks over random small integer assignments.
bool numeric_od_check(const DesignMatrix& d, const std::vector<int>& type_weights, std::mt19937_64& rng,
                      int trials = 64);
bool numeric_amicable_check(const DesignMatrix& x, const DesignMatrix& y, std::mt19937_64& rng, int trials = 64);

struct EtaCheck {
    int member = 0;  // 1-based
    bool expect_isometry = false;
    bool isometry = false;       // eta E^T eta = E^-1
    bool anti_isometry = false;  // eta E^T eta = -E^-1
    bool ok() const { return expect_isometry ? isometry : anti_isometry; }
};

struct EtaReport {
    std::vector<EtaCheck> members;
    bool matches_signature = false;
    std::string to_text() const;
};

/// Isometry expected for the first s members, anti-isometry for the last t.
EtaReport verify_eta(const HRFamily& fam, const Metric& eta);

int max_variables(std::int64_t n);

/// Largest number of x-variables in an amicable eta-orthogonal pair of
/// order n with t y-variables: max_signature_s(v2(n), t) + 1, or nullopt
/// when no such family exists.
std::optional<int> max_amicable_s(std::int64_t n, int t);

struct AmicablePair {
    DesignMatrix x;  // x_1 I + sum over the skew members
    DesignMatrix y;  // sum over the symmetric members
};

/// Requires fam.t >= 1.
AmicablePair amicable_from_family(const HRFamily& fam);

/// E_k = X_1^T X_k (k = 2..s) followed by X_1^T Y_j (j = 1..t): an
/// HR(s-1, t) family.
HRFamily derived_family(const DesignMatrix& x, const DesignMatrix& y);

/// Bracket layout with signed tokens, e.g. "[ x1 -x2 ]" per row.
std::string format_design(const DesignMatrix& d, char letter = 'x');

}  // namespace htype
