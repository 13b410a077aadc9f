#include "htype/omega.hpp"

#include <algorithm>
#include <stdexcept>

namespace htype {

OneFactor OmegaVector::factor() const {
    std::vector<Edge> pairs;
    for (const auto& [e, c] : terms) pairs.push_back(e);
    return make_factor(std::move(pairs));
}

int OmegaVector::coefficient(int i, int j) const {
    const int sign = i < j ? 1 : -1;
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(terms.begin(), terms.end(), Edge{i, j},
                               [](const auto& term, const Edge& e) { return term.first < e; });
    if (it == terms.end() || it->first != Edge{i, j}) return 0;
    return sign * it->second;
}

OmegaVector make_omega(std::vector<std::pair<Edge, int>> terms) {
    for (auto& [e, c] : terms) {
        if (c != 1 && c != -1) throw std::invalid_argument("omega coefficients must be +-1");
        if (e.first > e.second) {
            std::swap(e.first, e.second);
            c = -c;
        }
    }
    std::sort(terms.begin(), terms.end());
    OmegaVector w{std::move(terms)};
    (void)w.factor();  // throws unless the support is a perfect matching
    return w;
}

OmegaVector negate(const OmegaVector& w) {
    OmegaVector out = w;
    for (auto& term : out.terms) term.second = -term.second;
    return out;
}

std::string to_string(const OmegaVector& w) {
    std::string s;
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        const auto& [e, c] = w.terms[i];
        if (i == 0)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        s += "e" + std::to_string(e.first) + "xe" + std::to_string(e.second);
    }
    return s;
}

}  // namespace htype
