#pragma once

#include <string>
#include <utility>
#include <vector>

#include "htype/graph_factor.hpp"

namespace htype {

/// omega = sum of alpha_ij * (e_i x e_j) over the pairs of a one-factor,
/// alpha_ij = +-1. Terms are kept sorted by pair.
struct OmegaVector {
    std::vector<std::pair<Edge, int>> terms;

    OneFactor factor() const;
    /// 0 when (i, j) is not in the support; (j, i) gives the negated value.
    int coefficient(int i, int j) const;
    friend bool operator==(const OmegaVector&, const OmegaVector&) = default;
};

/// Validates +-1 coefficients on a perfect matching and sorts the terms.
OmegaVector make_omega(std::vector<std::pair<Edge, int>> terms);

OmegaVector negate(const OmegaVector& w);

/// "e1xe2 - e3xe4"
std::string to_string(const OmegaVector& w);

}  // namespace htype
