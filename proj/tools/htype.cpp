// Command-line front end: rho, algebra, iso, design, factorize.
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "htype/algebra_core.hpp"
#include "htype/design_core.hpp"
#include "htype/examples.hpp"
#include "htype/graph_factor.hpp"
#include "htype/hr_arith.hpp"
#include "htype/hr_family.hpp"
#include "htype/iso_solver.hpp"
#include "htype/json_io.hpp"

using namespace htype;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Run {
    bool json = false;
    std::ostringstream out;
    Json doc;
};

SignaturePair parse_pair(const std::string& text, const char* flag) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        std::size_t a = 0, b = 0;
        const int s = std::stoi(text.substr(0, comma), &a);
        const auto rest = text.substr(comma + 1);
        const int t = std::stoi(rest, &b);
        if (a != comma || b != rest.size() || s < 0 || t < 0) throw std::invalid_argument("");
        return {s, t};
    } catch (const std::exception&) {
        throw UsageError(std::string(flag) + " expects two non-negative integers as s,t (got '" + text + "')");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

// ---------------------------------------------------------------- rho

struct RhoArgs {
    std::optional<std::int64_t> n;
    bool table1 = false, table2 = false, decompose = false;
    std::vector<int> rho_t, sigma_s;
    std::optional<int> tau;
};

int cmd_rho(const RhoArgs& a, Run& run) {
    int done = 0;
    if (a.n) {
        ++done;
        if (*a.n < 1) throw UsageError("rho needs n >= 1");
        const int v = rho(*a.n);
        const auto d = htype::decompose(*a.n);
        if (run.json) {
            run.doc["n"] = *a.n;
            run.doc["rho"] = v;
            if (a.decompose) run.doc["decomposition"] = {{"u", d.u}, {"alpha", d.alpha}, {"beta", d.beta}};
        } else {
            run.out << v << '\n';
            if (a.decompose)
                run.out << *a.n << " = " << d.u << " * 2^(4*" << d.alpha << " + " << d.beta << ")\n";
        }
    }
    for (int which : {1, 2}) {
        if ((which == 1 && !a.table1) || (which == 2 && !a.table2)) continue;
        ++done;
        Json rows = Json::array();
        if (!run.json)
            run.out << (which == 1 ? "maximal s of an HR(s,t) family\norder  t=0  t=1  t=2  t=3  t=4\n"
                                   : "maximal t of an HR(s,t) family\norder  s=0  s=1  s=2  s=3  s=4\n");
        for (int r = 1; r <= 5; ++r) {
            Json vals = Json::array();
            std::ostringstream line;
            line << std::setw(5) << (1 << r);
            for (int c = 0; c <= 4; ++c) {
                const auto v = which == 1 ? max_signature_s(r, c) : max_signature_t(r, c);
                line << std::setw(5) << cell(v);
                vals.push_back(v ? Json(*v) : Json(nullptr));
            }
            rows.push_back({{"order", 1 << r}, {"values", vals}});
            if (!run.json) run.out << line.str() << '\n';
        }
        if (run.json) run.doc[which == 1 ? "table1" : "table2"] = rows;
    }
    if (!a.rho_t.empty()) {
        ++done;
        const auto v = rho_t_extended(a.rho_t[0], a.rho_t[1]);
        if (!v) throw UnsupportedQuery("rho_t outside the supported range");
        run.json ? void(run.doc["rho_t"] = *v) : void(run.out << *v << '\n');
    }
    if (!a.sigma_s.empty()) {
        ++done;
        const auto v = sigma_s_extended(a.sigma_s[0], a.sigma_s[1]);
        if (!v) throw UnsupportedQuery("sigma_s outside the supported range");
        run.json ? void(run.doc["sigma_s"] = *v) : void(run.out << *v << '\n');
    }
    if (a.tau) {
        ++done;
        const int v = htype::tau(*a.tau);
        run.json ? void(run.doc["tau"] = v) : void(run.out << v << '\n');
    }
    if (!done) throw UsageError("rho: give n or one of --table1, --table2, --rho-t, --sigma-s, --tau");
    return kPass;
}

// ------------------------------------------------------------ algebra

struct AlgebraArgs {
    int k = 0;
    std::string sig_z, sig_u, factorization, export_path;
};

void print_algebra(const HTypeAlgebra& alg, std::ostream& os) {
    os << "h: dimension " << alg.dim_h() << ", signature (" << alg.sig_h.s << "," << alg.sig_h.t << ")\n";
    os << "z: dimension " << alg.omega_basis.size() << ", signature (" << alg.sig_z.s << "," << alg.sig_z.t << ")\n";
    for (std::size_t l = 0; l < alg.omega_basis.size(); ++l)
        os << "omega" << l + 1 << " = " << to_string(alg.omega_basis[l]) << "   (norm " << alg.omega_norms[l]
           << ")\n";
    for (const auto& sc : alg.structure_constants)
        os << "[e" << sc.i << ", e" << sc.j << "] = " << sc.coeff << " omega" << sc.z_index + 1 << '\n';
}

int cmd_algebra(const AlgebraArgs& a, Run& run) {
    if (a.k < 1) throw UsageError("--k must be positive");
    const auto sz = parse_pair(a.sig_z, "--sig-z");
    if (sz.s + sz.t < 1) throw UsageError("--sig-z needs s + t >= 1");
    const int n = 2 * a.k;
    const SignaturePair default_u = sz.t >= 1 ? SignaturePair{a.k, a.k} : SignaturePair{n, 0};
    const SignaturePair su = a.sig_u.empty() ? default_u : parse_pair(a.sig_u, "--sig-u");
    if (su.s + su.t != n) throw UsageError("--sig-u must sum to 2k");

    auto nonexistent = [&](const std::string& why) {
        const std::string msg = "no pseudo H-type algebra with center signature (" + std::to_string(sz.s) + "," +
                                std::to_string(sz.t) + ") on a " + std::to_string(n) + "-dimensional h: " + why;
        if (run.json)
            run.doc = {{"exists", false}, {"message", msg}};
        else
            run.out << msg << '\n';
        return kFail;
    };

    HTypeAlgebra alg;
    if (!a.factorization.empty()) {
        const auto text = read_file(a.factorization);
        const auto f = parse_factorization_text(text);
        if (static_cast<int>(f.size()) < sz.s + sz.t) throw UsageError("factorization has fewer than s + t factors");
        if (f.front().vertex_count() != n) throw UsageError("factorization is not on 2k vertices");
        std::vector<OneFactor> use(f.begin(), f.begin() + sz.s + sz.t);
        const auto N = build_free(a.k, su, default_z_signs(use, sz.s, sz.t));
        const auto sols = solve_coefficients(use, N);
        if (sols.empty()) return nonexistent("no +-1 coefficients on these factors give anticommuting J-operators");
        alg = quotient(N, sols.front());
    } else {
        if (su != default_u)
            throw UsageError("--sig-u other than the default needs --factorization (default is " +
                             std::to_string(default_u.s) + "," + std::to_string(default_u.t) + ")");
        const auto d = decompose(n);
        const int r = 4 * d.alpha + d.beta;
        if (r > kMaxFamilyExponent) throw UsageError("2-part of 2k above 32 is out of scope");
        if (sz.t == 0) {
            if (sz.s > rho(n) - 1) return nonexistent("s exceeds rho(2k) - 1 = " + std::to_string(rho(n) - 1));
        } else {
            const auto ms = max_signature_s(r, sz.t);
            if (!ms || sz.s > *ms)
                return nonexistent("the largest admissible s for t = " + std::to_string(sz.t) + " is " + cell(ms));
        }
        alg = algebra_from_family(build_for_order(n, sz.s, sz.t));
    }
    const auto rep = verify_h_type(alg);
    if (!a.export_path.empty()) {
        std::ofstream out(a.export_path);
        if (!out) throw UsageError("cannot write " + a.export_path);
        out << algebra_to_json(alg).dump(2) << '\n';
    }
    if (run.json) {
        run.doc = {{"exists", true}, {"algebra", algebra_to_json(alg)}, {"report", report_to_json(rep)}};
    } else {
        print_algebra(alg, run.out);
        run.out << rep.to_text();
    }
    return rep.pass() ? kPass : kFail;
}

// ---------------------------------------------------------------- iso

struct IsoArgs {
    std::vector<std::string> example, files;
    bool all = false;
    int cap = 16;
};

HRFamily load_family(const std::string& name, bool from_file) {
    if (from_file) {
        try {
            return family_from_json(read_json(name));
        } catch (const Json::exception& e) {
            throw UsageError(name + ": " + e.what());
        }
    }
    if (auto f = example_family(name)) return *f;
    throw UsageError("unknown family example '" + name + "' (families: omega1, omega2, omega3, octonion8)");
}

std::string describe_map(const IntMatrix& b) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < b.cols(); ++i)
        for (Eigen::Index r = 0; r < b.rows(); ++r)
            if (b(r, i) != 0) os << (i ? ", " : "") << "e" << i + 1 << " -> " << (b(r, i) < 0 ? "-" : "") << "e" << r + 1;
    return os.str();
}

int cmd_iso(const IsoArgs& a, Run& run) {
    const bool files = !a.files.empty();
    if (files == !a.example.empty()) throw UsageError("iso: give exactly one of --example A B or --files F1 F2");
    const auto& names = files ? a.files : a.example;
    const HRFamily f1 = load_family(names[0], files);
    HRFamily f2 = load_family(names[1], files);
    if (f1.n != f2.n || f1.s != f2.s || f1.t != f2.t) throw UsageError("iso: families differ in order or signature");

    std::vector<int> order(f1.size()), signs(f1.size(), 1);
    std::iota(order.begin(), order.end(), 0);
    auto b = solve_signed_perm(build_system(f1, f2));
    bool rematched = false;
    if (!b) {
        if (auto m = match_families(f1, f2)) {
            order = m->order;
            signs = m->signs;
            f2 = apply_match(f2, order, signs);
            b = m->b;
            rematched = true;
        }
    }
    if (!b) {
        run.json ? void(run.doc = {{"conjugator", nullptr}}) : void(run.out << "none\n");
        return kFail;
    }
    const bool ok = verify_conjugacy(*b, f1, f2);
    std::vector<IntMatrix> all;
    if (a.all) all = enumerate_signed_perm(build_system(f1, f2), a.cap);
    if (run.json) {
        Json alls = Json::array();
        for (const auto& m : all) alls.push_back(matrix_to_json(m));
        std::vector<int> one_based;
        for (int o : order) one_based.push_back(o + 1);
        run.doc = {{"conjugator", matrix_to_json(*b)}, {"verified", ok}, {"member_order", one_based},
                   {"member_signs", signs}};
        if (a.all) run.doc["all"] = alls;
    } else {
        if (rematched) {
            run.out << "no conjugator for the given member order; pairing member l with";
            for (std::size_t l = 0; l < order.size(); ++l)
                run.out << (l ? ", " : " ") << (signs[l] < 0 ? "-" : "") << "E~" << order[l] + 1;
            run.out << '\n';
        }
        run.out << "B =\n" << format_matrix(*b);
        run.out << "B: " << describe_map(*b) << '\n';
        for (int l = 0; l < f1.size(); ++l)
            run.out << "E~" << l + 1 << " = B E" << l + 1 << " B^-1: "
                    << (f2.members[l] * *b == *b * f1.members[l] ? "ok" : "FAIL") << '\n';
        run.out << "B^T = B^-1: " << (b->transpose() * *b == identity(f1.n) ? "ok" : "FAIL") << '\n';
        if (a.all) {
            run.out << all.size() << " signed-permutation solutions (cap " << a.cap << ")\n";
            for (const auto& m : all) run.out << describe_map(m) << '\n';
        }
    }
    return ok ? kPass : kFail;
}

// ------------------------------------------------------------- design

struct DesignArgs {
    std::int64_t n = 0;
    bool verify = false, no_identity = false, amicable = false, numeric = false;
    int t = 1;
    std::string eta;
};

int cmd_design(const DesignArgs& a, Run& run, std::uint64_t seed) {
    if (a.n < 1) throw UsageError("--n must be positive");
    const int n = static_cast<int>(a.n);
    std::mt19937_64 rng(seed);
    bool pass = true;

    if (!a.eta.empty()) {
        const auto st = parse_pair(a.eta, "--eta");
        const auto fam = build_for_order(n, st.s, st.t);
        const auto rep = verify_eta(fam, Metric(neutral_eta(n), 1));
        if (run.json) {
            Json ms = Json::array();
            for (const auto& c : rep.members)
                ms.push_back({{"member", c.member}, {"isometry", c.isometry}, {"anti_isometry", c.anti_isometry}});
            run.doc = {{"members", ms}, {"matches_signature", rep.matches_signature}};
        } else {
            run.out << rep.to_text();
        }
        return rep.matches_signature ? kPass : kFail;
    }

    if (a.amicable) {
        if (n % 2) throw UsageError("--amicable needs an even order");
        const auto s = max_amicable_s(n, a.t);
        if (!s) {
            run.json ? void(run.doc = {{"exists", false}})
                     : void(run.out << "no amicable eta-orthogonal pair of order " << n << " with t = " << a.t << '\n');
            return kFail;
        }
        const auto pair = amicable_from_family(build_for_order(n, *s - 1, a.t));
        const bool am = verify_amicable(pair.x, pair.y);
        const bool odx = verify_od(pair.x, std::vector<int>(pair.x.var_count, 1));
        const bool ody = verify_od(pair.y, std::vector<int>(pair.y.var_count, 1));
        bool num = true;
        if (a.numeric) num = numeric_amicable_check(pair.x, pair.y, rng);
        pass = am && odx && ody && num;
        if (run.json) {
            run.doc = {{"exists", true},     {"s", *s},         {"t", a.t},
                       {"x", design_to_json(pair.x)}, {"y", design_to_json(pair.y)},
                       {"amicable", am},     {"x_orthogonal", odx}, {"y_orthogonal", ody}};
            if (a.numeric) run.doc["numeric_agrees"] = num;
        } else {
            run.out << "X (" << pair.x.var_count << " variables):\n" << format_design(pair.x, 'x');
            run.out << "Y (" << pair.y.var_count << " variables):\n" << format_design(pair.y, 'y');
            run.out << "X orthogonal: " << (odx ? "valid" : "INVALID") << '\n';
            run.out << "Y orthogonal: " << (ody ? "valid" : "INVALID") << '\n';
            run.out << "X Y^T = Y X^T: " << (am ? "valid" : "INVALID") << '\n';
            if (a.numeric) run.out << "numeric check (64 evaluations): " << (num ? "agrees" : "DISAGREES") << '\n';
        }
        return pass ? kPass : kFail;
    }

    const int count = rho(n) - 1;
    DesignMatrix d;
    if (count >= 1) {
        d = from_family(build_for_order(n, count, 0), !a.no_identity);
    } else {
        if (a.no_identity) throw UsageError("order " + std::to_string(n) + " has no skew members; keep the identity");
        d = design_from_matrices({identity(n)});
    }
    const std::vector<int> weights(d.var_count, 1);
    bool od = true, num = true;
    if (a.verify) od = verify_od(d, weights);
    if (a.numeric) num = numeric_od_check(d, weights, rng) == verify_od(d, weights);
    pass = od && num;
    if (run.json) {
        run.doc = {{"design", design_to_json(d)}};
        if (a.verify) run.doc["valid"] = od;
        if (a.numeric) run.doc["numeric_agrees"] = num;
    } else {
        run.out << format_design(d);
        if (a.verify)
            run.out << "orthogonal design on " << d.var_count << " variables: " << (od ? "valid" : "INVALID") << '\n';
        if (a.numeric) run.out << "numeric check (64 evaluations): " << (num ? "agrees" : "DISAGREES") << '\n';
    }
    return pass ? kPass : kFail;
}

// ---------------------------------------------------------- factorize

struct FactorizeArgs {
    int k = 0;
    std::string style = "roundrobin", file;
    std::vector<int> classify;
    bool classify_all = false, validate = false;
};

int cmd_factorize(const FactorizeArgs& a, Run& run) {
    OneFactorization f;
    if (!a.file.empty()) {
        f = parse_factorization_text(read_file(a.file));
    } else {
        if (a.k < 1) throw UsageError("--k must be positive (or give --file)");
        if (a.style == "roundrobin") {
            f = round_robin(a.k);
        } else if (a.style == "xor") {
            int m = 0;
            while ((1 << m) < 2 * a.k) ++m;
            if ((1 << m) != 2 * a.k) throw UsageError("--style xor needs 2k a power of two");
            f = xor_factorization(m);
        } else if (a.style == "kirkman" || a.style == "steiner") {
            if (a.k != 4) throw UsageError("--style " + a.style + " is the fixed K8 tournament; use --k 4");
            f = *example_factorization(a.style + "8");
        } else {
            throw UsageError("unknown --style '" + a.style + "' (roundrobin, xor, kirkman, steiner)");
        }
    }
    const bool valid = validate_factorization(f);
    auto row = [&](int i) -> const OneFactor& {
        if (i < 1 || i > static_cast<int>(f.size())) throw UsageError("row " + std::to_string(i) + " out of range");
        return f[i - 1];
    };

    if (!a.classify.empty()) {
        const auto c = union_cycles(row(a.classify[0]), row(a.classify[1]));
        if (run.json)
            run.doc = {{"rows", a.classify}, {"cycle_type", c}, {"square", is_square_pair(row(a.classify[0]), row(a.classify[1]))}};
        else
            run.out << format_cycle_type(c) << '\n';
        return kPass;
    }
    if (a.classify_all) {
        int square = 0, total = 0;
        Json pairs = Json::array();
        for (int i = 1; i <= static_cast<int>(f.size()); ++i)
            for (int j = i + 1; j <= static_cast<int>(f.size()); ++j) {
                const auto c = union_cycles(row(i), row(j));
                const bool sq = std::all_of(c.begin(), c.end(), [](int l) { return l == 4; });
                square += sq;
                ++total;
                if (run.json)
                    pairs.push_back({{"rows", {i, j}}, {"cycle_type", c}});
                else
                    run.out << i << "," << j << ": " << format_cycle_type(c) << '\n';
            }
        if (run.json)
            run.doc = {{"pairs", pairs}, {"square_pairs", square}, {"total_pairs", total}};
        else
            run.out << "square pairs: " << square << "/" << total << '\n';
        return kPass;
    }
    if (run.json) {
        run.doc = {{"factorization", factorization_to_json(f)}};
        if (a.validate) run.doc["valid"] = valid;
    } else {
        run.out << to_text(f);
        if (a.validate) run.out << "valid 1-factorization: " << (valid ? "yes" : "no") << '\n';
    }
    return a.validate && !valid ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz-Radon families, pseudo H-type algebras and orthogonal designs"};
    app.require_subcommand(1);
    std::string format = "text", output;
    std::uint64_t seed = 20240601;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output, "write to this file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized checks");

    RhoArgs ra;
    auto* rho_cmd = app.add_subcommand("rho", "Hurwitz-Radon numbers and the signature tables");
    rho_cmd->add_option("n", ra.n, "print rho(n)");
    rho_cmd->add_flag("--table1", ra.table1, "maximal s per (order, t)");
    rho_cmd->add_flag("--table2", ra.table2, "maximal t per (order, s)");
    rho_cmd->add_flag("--decompose", ra.decompose, "also print n = u 2^(4 alpha + beta)");
    rho_cmd->add_option("--rho-t", ra.rho_t, "rho_t(2^r): R T")->expected(2);
    rho_cmd->add_option("--sigma-s", ra.sigma_s, "sigma_s(2^r): R S")->expected(2);
    rho_cmd->add_option("--tau", ra.tau, "tau(2^r): R");

    AlgebraArgs aa;
    auto* alg_cmd = app.add_subcommand("algebra", "build and verify a pseudo H-type algebra");
    alg_cmd->add_option("--k", aa.k, "half the dimension of h")->required();
    alg_cmd->add_option("--sig-z", aa.sig_z, "center signature s,t")->required();
    alg_cmd->add_option("--sig-u", aa.sig_u, "signature p,q on h");
    alg_cmd->add_option("--factorization", aa.factorization, "text file of one-factors to use");
    alg_cmd->add_option("--export", aa.export_path, "write the algebra as JSON");

    IsoArgs ia;
    auto* iso_cmd = app.add_subcommand("iso", "signed-permutation conjugator between two families");
    iso_cmd->add_option("--example", ia.example, "two built-in family names")->expected(2);
    iso_cmd->add_option("--files", ia.files, "two family JSON files")->expected(2);
    iso_cmd->add_flag("--all", ia.all, "also list every solution up to --cap");
    iso_cmd->add_option("--cap", ia.cap, "limit for --all");

    DesignArgs da;
    auto* des_cmd = app.add_subcommand("design", "orthogonal designs from HR families");
    des_cmd->add_option("--n", da.n, "order")->required();
    des_cmd->add_flag("--verify", da.verify, "symbolic orthogonality check");
    des_cmd->add_flag("--no-identity", da.no_identity, "leave out the identity variable");
    des_cmd->add_flag("--numeric", da.numeric, "cross-check with 64 random evaluations");
    des_cmd->add_flag("--amicable", da.amicable, "largest amicable pair for the given --t");
    des_cmd->add_option("--t", da.t, "number of y variables for --amicable");
    des_cmd->add_option("--eta", da.eta, "eta-orthogonality report for build_mixed s,t");

    FactorizeArgs fa;
    auto* fac_cmd = app.add_subcommand("factorize", "1-factorizations of K_2k and their cycle types");
    fac_cmd->add_option("--k", fa.k, "K_2k");
    fac_cmd->add_option("--style", fa.style, "roundrobin, xor, kirkman or steiner");
    fac_cmd->add_option("--file", fa.file, "read the factorization from a text file");
    fac_cmd->add_option("--classify", fa.classify, "cycle type of rows I J")->expected(2);
    fac_cmd->add_flag("--classify-all", fa.classify_all, "cycle types of all row pairs");
    fac_cmd->add_flag("--validate", fa.validate, "check it is a 1-factorization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    Run run;
    run.json = format == "json";
    int code = kPass;
    try {
        if (*rho_cmd) code = cmd_rho(ra, run);
        if (*alg_cmd) code = cmd_algebra(aa, run);
        if (*iso_cmd) code = cmd_iso(ia, run);
        if (*des_cmd) code = cmd_design(da, run, seed);
        if (*fac_cmd) code = cmd_factorize(fa, run);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedQuery& e) {
        std::cerr << "error: unsupported: " << e.what() << '\n';
        return kUsage;
    }

    const std::string text = run.json ? run.doc.dump(2) + "\n" : run.out.str();
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << '\n';
            return kUsage;
        }
        out << text;
    }
    return code;
}
