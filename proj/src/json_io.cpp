#include "htype/json_io.hpp"

#include <stdexcept>

namespace htype {

namespace {

long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j) rows.push_back(r.get<std::vector<long long>>());
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw std::invalid_argument("matrix: expected a square array");
    return rows.empty() ? IntMatrix(0, 0) : from_rows(rows);
}

Json omega_to_json(const OmegaVector& w) {
    Json out = Json::array();
    for (const auto& [e, c] : w.terms) out.push_back({e.first, e.second, c});
    return out;
}

OmegaVector omega_from_json(const Json& j) {
    std::vector<std::pair<Edge, int>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("omega: expected [i, j, coefficient] terms");
        terms.push_back({{t[0].get<int>(), t[1].get<int>()}, t[2].get<int>()});
    }
    return make_omega(std::move(terms));
}

Json family_to_json(const HRFamily& f) {
    Json members = Json::array();
    for (const auto& m : f.members) members.push_back(matrix_to_json(m));
    return {{"n", f.n}, {"s", f.s}, {"t", f.t}, {"members", members}};
}

HRFamily family_from_json(const Json& j) {
    HRFamily f;
    f.n = j.at("n").get<int>();
    f.s = j.at("s").get<int>();
    f.t = j.at("t").get<int>();
    for (const auto& m : j.at("members")) f.members.push_back(matrix_from_json(m));
    if (f.size() != f.s + f.t) throw std::invalid_argument("family: member count differs from s + t");
    for (const auto& m : f.members)
        if (m.rows() != f.n) throw std::invalid_argument("family: member order differs from n");
    return f;
}

Json algebra_to_json(const HTypeAlgebra& a) {
    Json omegas = Json::array(), consts = Json::array(), js = Json::array(), zs = Json::array();
    for (const auto& w : a.omega_basis) omegas.push_back(omega_to_json(w));
    for (const auto& sc : a.structure_constants)
        consts.push_back({{"i", sc.i},
                          {"j", sc.j},
                          {"num", to_ll(numerator(sc.coeff))},
                          {"den", to_ll(denominator(sc.coeff))},
                          {"z_index", sc.z_index + 1}});
    for (const auto& m : a.j_matrices) js.push_back(matrix_to_json(m));
    for (const auto& [e, s] : a.z_signs) zs.push_back({e.first, e.second, s});
    return {{"k", a.k},
            {"sig_h", {a.sig_h.s, a.sig_h.t}},
            {"sig_z", {a.sig_z.s, a.sig_z.t}},
            {"u_signs", a.u_signs},
            {"z_signs", zs},
            {"omega_basis", omegas},
            {"omega_norms", a.omega_norms},
            {"structure_constants", consts},
            {"j_matrices", js}};
}

HTypeAlgebra algebra_from_json(const Json& j) {
    HTypeAlgebra a;
    a.k = j.at("k").get<int>();
    auto sh = j.at("sig_h").get<std::vector<int>>();
    auto sz = j.at("sig_z").get<std::vector<int>>();
    if (sh.size() != 2 || sz.size() != 2) throw std::invalid_argument("algebra: signatures must be pairs");
    a.sig_h = {sh[0], sh[1]};
    a.sig_z = {sz[0], sz[1]};
    a.u_signs = j.at("u_signs").get<std::vector<int>>();
    for (const auto& t : j.at("z_signs")) a.z_signs.push_back({{t[0].get<int>(), t[1].get<int>()}, t[2].get<int>()});
    for (const auto& w : j.at("omega_basis")) a.omega_basis.push_back(omega_from_json(w));
    a.omega_norms = j.at("omega_norms").get<std::vector<int>>();
    for (const auto& c : j.at("structure_constants"))
        a.structure_constants.push_back({c.at("i").get<int>(), c.at("j").get<int>(),
                                         Rational(c.at("num").get<long long>(), c.at("den").get<long long>()),
                                         c.at("z_index").get<int>() - 1});
    for (const auto& m : j.at("j_matrices")) a.j_matrices.push_back(matrix_from_json(m));
    if (static_cast<int>(a.u_signs.size()) != 2 * a.k || a.omega_basis.size() != a.j_matrices.size() ||
        a.omega_basis.size() != a.omega_norms.size())
        throw std::invalid_argument("algebra: inconsistent sizes");
    return a;
}

Json factorization_to_json(const OneFactorization& f) {
    Json out = Json::array();
    for (const auto& factor : f) {
        Json pairs = Json::array();
        for (auto [i, j] : factor.pairs) pairs.push_back({i, j});
        out.push_back(std::move(pairs));
    }
    return out;
}

OneFactorization factorization_from_json(const Json& j) {
    OneFactorization out;
    for (const auto& factor : j) {
        std::vector<Edge> pairs;
        for (const auto& p : factor) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        out.push_back(make_factor(std::move(pairs)));
    }
    return out;
}

Json design_to_json(const DesignMatrix& d) {
    Json rows = Json::array();
    for (const auto& row : d.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(e.var ? Json{e.var, e.sign} : Json(0));
        rows.push_back(std::move(r));
    }
    return {{"n", d.n}, {"var_count", d.var_count}, {"entries", rows}};
}

DesignMatrix design_from_json(const Json& j) {
    DesignMatrix d;
    d.n = j.at("n").get<int>();
    d.var_count = j.at("var_count").get<int>();
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != d.n) throw std::invalid_argument("design: row count differs from n");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != d.n) throw std::invalid_argument("design: row length differs from n");
        std::vector<DesignEntry> row;
        for (const auto& e : r) {
            if (e.is_number() && e.get<int>() == 0) {
                row.push_back({});
                continue;
            }
            DesignEntry de{e.at(0).get<int>(), e.at(1).get<int>()};
            if (de.var < 1 || de.var > d.var_count || (de.sign != 1 && de.sign != -1))
                throw std::invalid_argument("design: bad entry");
            row.push_back(de);
        }
        d.entries.push_back(std::move(row));
    }
    return d;
}

Json system_to_json(const ConjugacySystem& sys) {
    Json rows = Json::array();
    for (const auto& r : sys.rows) rows.push_back({r.c1, r.v1, r.c2, r.v2});
    return {{"n", sys.n}, {"r", sys.r}, {"rows", rows}};
}

Json certificate_to_json(const RankCertificate& c) {
    return {{"involutions", c.involutions},
            {"commuting", c.commuting},
            {"gram_matches", c.gram_matches},
            {"product_zero", c.product_zero},
            {"valid", c.valid()}};
}

Json report_to_json(const HTypeReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", std::string(1, c.id)}, {"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"checks", checks}, {"pass", r.pass()}};
}

}  // namespace htype
