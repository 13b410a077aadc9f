#pragma once

#include <json.hpp>

#include "htype/algebra_core.hpp"
#include "htype/design_core.hpp"
#include "htype/graph_factor.hpp"
#include "htype/hr_family.hpp"
#include "htype/iso_solver.hpp"

namespace htype {

using Json = nlohmann::json;

// Matrices are arrays of rows; omegas are arrays of [i, j, coefficient].

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json omega_to_json(const OmegaVector& w);
OmegaVector omega_from_json(const Json& j);

Json family_to_json(const HRFamily& f);
HRFamily family_from_json(const Json& j);

/// z_index is 1-based in the export.
Json algebra_to_json(const HTypeAlgebra& a);
HTypeAlgebra algebra_from_json(const Json& j);

Json factorization_to_json(const OneFactorization& f);
OneFactorization factorization_from_json(const Json& j);

/// Entries are [k, sign] or 0.
Json design_to_json(const DesignMatrix& d);
DesignMatrix design_from_json(const Json& j);

Json system_to_json(const ConjugacySystem& sys);
Json certificate_to_json(const RankCertificate& c);
Json report_to_json(const HTypeReport& r);

}  // namespace htype
