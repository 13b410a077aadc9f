#include "htype/exact_linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <numeric>

namespace htype {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), RatVector(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
    return out;
}

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int p = row;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<RatVector> nullspace(const RatMatrix& a, int cols) {
    RatMatrix m = a;
    const auto pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<RatVector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<BigInt>> nullspace_fraction_free(const IntMatrix& a) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = a(i, j);

    // Bareiss: every division below is exact.
    std::vector<int> pivots;
    BigInt prev = 1;
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int p = row;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        for (int r = row + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) m[r][j] = (m[row][c] * m[r][j] - m[r][c] * m[row][j]) / prev;
            m[r][c] = 0;
        }
        prev = m[row][c];
        pivots.push_back(c);
        ++row;
    }

    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<BigInt>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector x(cols, Rational(0));
        x[f] = 1;
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            const int pc = pivots[r];
            Rational acc = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (m[r][j] != 0) acc += Rational(m[r][j]) * x[j];
            x[pc] = -acc / Rational(m[r][pc]);
        }
        BigInt l = 1;
        for (const auto& q : x) l = boost::integer::lcm(l, BigInt(denominator(q)));
        std::vector<BigInt> v(cols);
        BigInt g = 0;
        for (int j = 0; j < cols; ++j) {
            v[j] = BigInt(numerator(x[j])) * (l / BigInt(denominator(x[j])));
            g = boost::integer::gcd(g, v[j]);
        }
        if (g > 1)
            for (auto& e : v) e /= g;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace htype
