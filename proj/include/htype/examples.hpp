#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htype/algebra_core.hpp"
#include "htype/graph_factor.hpp"
#include "htype/hr_family.hpp"

namespace htype {

// The three k = 2 solutions used for the isomorphism examples, in the
// coordinates (a12, a24, a13, a34, a23, a14).
inline constexpr K4Coords kOmega1{1, 1, 1, -1, 1, -1};
inline constexpr K4Coords kOmega2{1, 1, -1, 1, 1, 1};
inline constexpr K4Coords kOmega3{1, 1, -1, 1, -1, -1};

/// The six coordinate vectors listed for the k = 2 system.
std::vector<K4Coords> listed_k4_solutions();

/// Positive-metric J-operators of the omegas, as an HR(3, 0) family.
HRFamily k4_family(const K4Coords& c);

/// "omega1", "omega2", "omega3", "octonion8"
std::optional<HRFamily> example_family(const std::string& name);
/// "kirkman8", "steiner8"
std::optional<OneFactorization> example_factorization(const std::string& name);
std::vector<std::string> example_names();

}  // namespace htype
