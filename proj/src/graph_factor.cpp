#include "htype/graph_factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "htype/hr_family.hpp"

namespace htype {

bool OneFactor::contains(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(pairs.begin(), pairs.end(), Edge{i, j});
}

OneFactor make_factor(std::vector<Edge> pairs) {
    const int n = 2 * static_cast<int>(pairs.size());
    std::vector<int> seen(n + 1, 0);
    for (auto& [i, j] : pairs) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n || i == j)
            throw std::invalid_argument("make_factor: pair out of range or degenerate");
        if (seen[i]++ || seen[j]++)
            throw std::invalid_argument("make_factor: vertex covered twice");
    }
    std::sort(pairs.begin(), pairs.end());
    return OneFactor{std::move(pairs)};
}

OneFactorization round_robin(int k) {
    if (k < 1) throw std::invalid_argument("round_robin: k must be positive");
    const int n = 2 * k;
    const int m = n - 1;  // rotating vertices 0..n-2, vertex n-1 fixed
    OneFactorization out;
    for (int r = 0; r < m; ++r) {
        std::vector<Edge> pairs{{r + 1, n}};
        for (int i = 1; i < k; ++i)
            pairs.emplace_back((r + i) % m + 1, (r - i + m) % m + 1);
        out.push_back(make_factor(std::move(pairs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OneFactorization xor_factorization(int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("xor_factorization: m must lie in 1..16");
    const int n = 1 << m;
    OneFactorization out;
    for (int a = 1; a < n; ++a) {
        std::vector<Edge> pairs;
        for (int x = 0; x < n; ++x)
            if (x < (x ^ a)) pairs.emplace_back(x + 1, (x ^ a) + 1);
        out.push_back(make_factor(std::move(pairs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool validate_factorization(const OneFactorization& f) {
    if (f.empty()) return false;
    const int n = f.front().vertex_count();
    if (n < 2 || static_cast<int>(f.size()) != n - 1) return false;
    std::set<Edge> edges;
    for (const auto& factor : f) {
        if (factor.vertex_count() != n) return false;
        std::vector<int> seen(n + 1, 0);
        for (auto [i, j] : factor.pairs) {
            if (i < 1 || j > n || i >= j) return false;
            if (seen[i]++ || seen[j]++) return false;
            if (!edges.insert({i, j}).second) return false;
        }
    }
    return static_cast<int>(edges.size()) == n * (n - 1) / 2;
}

std::vector<int> union_cycles(const OneFactor& f1, const OneFactor& f2) {
    if (f1.vertex_count() != f2.vertex_count())
        throw std::invalid_argument("union_cycles: factors on different vertex sets");
    if (f1 == f2) throw std::invalid_argument("union_cycles: factors must be distinct");
    const int n = f1.vertex_count();
    std::vector<int> p1(n + 1, 0), p2(n + 1, 0);
    for (auto [i, j] : f1.pairs) p1[i] = j, p1[j] = i;
    for (auto [i, j] : f2.pairs) p2[i] = j, p2[j] = i;
    for (int v = 1; v <= n; ++v)
        if (!p1[v] || !p2[v]) throw std::invalid_argument("union_cycles: not perfect matchings");

    std::vector<char> visited(n + 1, 0);
    std::vector<int> lengths;
    for (int v = 1; v <= n; ++v) {
        if (visited[v]) continue;
        int len = 0, cur = v;
        bool use_first = true;
        do {
            visited[cur] = 1;
            ++len;
            cur = use_first ? p1[cur] : p2[cur];
            use_first = !use_first;
        } while (cur != v || !use_first);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool is_square_pair(const OneFactor& f1, const OneFactor& f2) {
    auto c = union_cycles(f1, f2);
    return std::all_of(c.begin(), c.end(), [](int l) { return l == 4; });
}

std::vector<OneFactor> square_subfamily_from_hr(const std::vector<IntMatrix>& members) {
    for (std::size_t a = 0; a < members.size(); ++a) {
        const auto& e = members[a];
        const IntMatrix minus_id = -identity(static_cast<int>(e.rows()));
        if (!is_signed_permutation(e) || e * e != minus_id)
            throw std::invalid_argument("square_subfamily_from_hr: member " + std::to_string(a + 1) +
                                        " is not a signed permutation with square -I");
        for (std::size_t b = 0; b < a; ++b)
            if (e * members[b] + members[b] * e != IntMatrix::Zero(e.rows(), e.cols()))
                throw std::invalid_argument("square_subfamily_from_hr: members " +
                                            std::to_string(b + 1) + " and " +
                                            std::to_string(a + 1) + " do not anticommute");
    }
    std::vector<OneFactor> out;
    for (const auto& e : members) out.push_back(support_factor(e));
    return out;
}

OneFactorization kirkman8() {
    return {
        make_factor({{1, 2}, {3, 8}, {4, 7}, {5, 6}}), make_factor({{1, 3}, {2, 4}, {5, 8}, {6, 7}}),
        make_factor({{1, 4}, {2, 6}, {3, 5}, {7, 8}}), make_factor({{1, 5}, {2, 8}, {3, 7}, {4, 6}}),
        make_factor({{1, 6}, {2, 3}, {5, 7}, {4, 8}}), make_factor({{1, 7}, {2, 5}, {3, 4}, {6, 8}}),
        make_factor({{1, 8}, {2, 7}, {3, 6}, {4, 5}}),
    };
}

OneFactorization steiner8() {
    return {
        make_factor({{1, 2}, {3, 7}, {4, 5}, {6, 8}}), make_factor({{1, 3}, {2, 7}, {4, 8}, {5, 6}}),
        make_factor({{1, 4}, {2, 5}, {3, 8}, {6, 7}}), make_factor({{1, 5}, {2, 4}, {3, 6}, {7, 8}}),
        make_factor({{1, 6}, {2, 8}, {3, 5}, {4, 7}}), make_factor({{1, 7}, {2, 3}, {4, 6}, {5, 8}}),
        make_factor({{1, 8}, {2, 6}, {3, 4}, {5, 7}}),
    };
}

std::string to_text(const OneFactorization& f) {
    std::ostringstream os;
    for (const auto& factor : f) {
        for (std::size_t p = 0; p < factor.pairs.size(); ++p)
            os << (p ? " " : "") << factor.pairs[p].first << '-' << factor.pairs[p].second;
        os << '\n';
    }
    return os.str();
}

OneFactorization parse_factorization_text(const std::string& text) {
    OneFactorization out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        std::vector<Edge> pairs;
        while (tokens >> tok) {
            auto dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                throw std::invalid_argument("factorization text: bad token '" + tok + "'");
            std::size_t used_a = 0, used_b = 0;
            const auto rest = tok.substr(dash + 1);
            int a = std::stoi(tok.substr(0, dash), &used_a);
            int b = std::stoi(rest, &used_b);
            if (used_a != dash || used_b != rest.size())
                throw std::invalid_argument("factorization text: bad token '" + tok + "'");
            pairs.emplace_back(a, b);
        }
        if (!pairs.empty()) out.push_back(make_factor(std::move(pairs)));
    }
    return out;
}

std::string format_cycle_type(const std::vector<int>& lengths) {
    std::string s = "{";
    for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
    return s + "}";
}

}  // namespace htype
