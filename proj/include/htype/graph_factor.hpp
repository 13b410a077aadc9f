#pragma once

#include <string>
#include <utility>
#include <vector>

#include "htype/matrix.hpp"

namespace htype {

/// Vertices are 1-based throughout.
using Edge = std::pair<int, int>;

/// A perfect matching on {1..2k}; pairs are (i, j) with i < j, sorted.
struct OneFactor {
    std::vector<Edge> pairs;

    int vertex_count() const { return 2 * static_cast<int>(pairs.size()); }
    bool contains(int i, int j) const;
    friend bool operator==(const OneFactor&, const OneFactor&) = default;
    friend auto operator<=>(const OneFactor&, const OneFactor&) = default;
};

using OneFactorization = std::vector<OneFactor>;

/// Orients and sorts the pairs; throws unless the result is a perfect
/// matching of {1..2*pairs.size()}.
OneFactor make_factor(std::vector<Edge> pairs);

/// Circle-method schedule on K_{2k}.
OneFactorization round_robin(int k);

/// Factor a = { {x, x xor a} } on K_{2^m}, labels shifted to 1-based.
OneFactorization xor_factorization(int m);

bool validate_factorization(const OneFactorization& f);

/// Cycle lengths (vertex counts, sorted ascending) of the union of two
/// matchings on the same vertex set. A shared edge shows up as length 2.
std::vector<int> union_cycles(const OneFactor& f1, const OneFactor& f2);
bool is_square_pair(const OneFactor& f1, const OneFactor& f2);

/// Support matchings of a family of anticommuting signed-permutation
/// complex structures. Throws if the members fail that description.
std::vector<OneFactor> square_subfamily_from_hr(const std::vector<IntMatrix>& members);

// The two K8 tournaments used as fixtures (rows in tournament order).
OneFactorization kirkman8();
OneFactorization steiner8();

/// One factor per line, pairs as "i-j" separated by spaces.
std::string to_text(const OneFactorization& f);
OneFactorization parse_factorization_text(const std::string& text);

std::string format_cycle_type(const std::vector<int>& lengths);

}  // namespace htype
