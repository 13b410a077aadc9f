#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace htype {

/// Dense integer matrix. Signed matrices (entries in {-1,0,1}) use the same
/// type; the predicates below say which structure a value has.
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix identity(int n);

/// Row-major nested initializer, e.g. from_rows({{0,-1},{1,0}}).
IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
std::vector<std::vector<long long>> to_rows(const IntMatrix& m);

bool has_unit_entries(const IntMatrix& m);       // all entries in {-1,0,1}
bool is_signed_permutation(const IntMatrix& m);  // one +-1 per row and column
bool is_skew(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);
bool has_zero_diagonal(const IntMatrix& m);

/// Diagonal matrix from a sign vector.
IntMatrix diagonal(const std::vector<int>& signs);

/// Right-aligned columns, one row per line.
std::string format_matrix(const IntMatrix& m);

}  // namespace htype
