#include "htype/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace htype {

IntMatrix identity(int n) { return IntMatrix::Identity(n, n); }

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
    IntMatrix out(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != m)
            throw std::invalid_argument("from_rows: ragged rows");
        for (Eigen::Index j = 0; j < m; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

std::vector<std::vector<long long>> to_rows(const IntMatrix& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

bool has_unit_entries(const IntMatrix& m) {
    return (m.array().abs() <= 1).all();
}

bool is_signed_permutation(const IntMatrix& m) {
    if (m.rows() != m.cols() || !has_unit_entries(m)) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (m.row(i).cwiseAbs().sum() != 1) return false;
        if (m.col(i).cwiseAbs().sum() != 1) return false;
    }
    return true;
}

bool is_skew(const IntMatrix& m) {
    return m.rows() == m.cols() && m.transpose() == -m;
}

bool is_symmetric(const IntMatrix& m) {
    return m.rows() == m.cols() && m.transpose() == m;
}

bool has_zero_diagonal(const IntMatrix& m) {
    return (m.diagonal().array() == 0).all();
}

IntMatrix diagonal(const std::vector<int>& signs) {
    const auto n = static_cast<Eigen::Index>(signs.size());
    IntMatrix d = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) d(i, i) = signs[i];
    return d;
}

std::string format_matrix(const IntMatrix& m) {
    std::size_t width = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            width = std::max(width, std::to_string(m(i, j)).size());
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            auto cell = std::to_string(m(i, j));
            os << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace htype
