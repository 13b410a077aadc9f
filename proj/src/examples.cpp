#include "htype/examples.hpp"

namespace htype {

std::vector<K4Coords> listed_k4_solutions() {
    return {
        {1, 1, 1, -1, 1, -1},   {1, 1, -1, 1, 1, 1},    {1, 1, -1, 1, -1, -1},
        {-1, -1, -1, 1, -1, 1}, {-1, -1, 1, -1, -1, -1}, {-1, -1, 1, -1, 1, 1},
    };
}

HRFamily k4_family(const K4Coords& c) {
    const auto N = build_free(2, {4, 0});
    HRFamily f{4, 3, 0, {}};
    for (const auto& w : k4_omegas(c)) f.members.push_back(j_operator(w, N));
    return f;
}

std::optional<HRFamily> example_family(const std::string& name) {
    if (name == "omega1") return k4_family(kOmega1);
    if (name == "omega2") return k4_family(kOmega2);
    if (name == "omega3") return k4_family(kOmega3);
    if (name == "octonion8") return build_positive(3, 7);
    return std::nullopt;
}

std::optional<OneFactorization> example_factorization(const std::string& name) {
    if (name == "kirkman8") return kirkman8();
    if (name == "steiner8") return steiner8();
    return std::nullopt;
}

std::vector<std::string> example_names() { return {"omega1", "omega2", "omega3", "kirkman8", "steiner8", "octonion8"}; }

}  // namespace htype
