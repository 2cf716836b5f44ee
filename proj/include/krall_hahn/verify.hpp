#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "krall_hahn/casorati.hpp"
#include "krall_hahn/weights.hpp"

namespace kh {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Serialization

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

inline json to_json(const DifferenceOperator& d) {
    json out = json::array();
    for (const auto& [l, h] : d.terms()) out.push_back({{"offset", l}, {"coefficient", to_json(h)}});
    return out;
}

inline json to_json(const DiscreteMeasure& mu) {
    json out = json::array();
    for (const auto& [x, w] : mu.atoms()) out.push_back({x.str(), w.str()});
    return out;
}

inline json to_json(const IntSet& f) { return json(f); }

// ---------------------------------------------------------------------------
// Configuration

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"omega",      "orthogonality", "gram-schmidt", "eigen", "genre",
                                                   "hypotheses", "lemma51",       "foeq",         "oracle"};
    return names;
}

struct ConstructionConfig {
    std::string name;
    Rational a;
    Rational b;
    int N = 1;
    std::array<IntSet, 4> F;
    std::optional<std::array<int, 3>> h;
    ConstructionPath path = ConstructionPath::Corollary;
    std::vector<std::string> checks;  // resolved names, never "all"
    std::optional<int> n_max;
};

namespace detail {

inline Rational parse_rational_field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    const json& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError(std::string("field \"") + key + "\" must be a rational string");
}

inline int parse_int_field(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
    return v.get<int>();
}

}  // namespace detail

inline ConstructionConfig parse_config(const json& j) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    ConstructionConfig cfg;
    cfg.name = j.value("name", std::string());
    cfg.a = detail::parse_rational_field(j, "a");
    cfg.b = detail::parse_rational_field(j, "b");
    if (!j.contains("N")) throw ParseError("missing field \"N\"");
    cfg.N = detail::parse_int_field(j.at("N"), "N");

    if (j.contains("F")) {
        const json& f = j.at("F");
        if (!f.is_array() || f.size() != 4) throw ParseError("F must be a list of four integer lists");
        for (std::size_t i = 0; i < 4; ++i) {
            if (!f[i].is_array()) throw ParseError("F" + std::to_string(i + 1) + " must be a list");
            for (const auto& v : f[i]) cfg.F[i].push_back(detail::parse_int_field(v, "element of F" + std::to_string(i + 1)));
        }
    }
    if (j.contains("h") && !j.at("h").is_null()) {
        const json& h = j.at("h");
        if (!h.is_array() || h.size() != 3) throw ParseError("h must be a list of three integers");
        cfg.h = std::array<int, 3>{detail::parse_int_field(h[0], "h1"), detail::parse_int_field(h[1], "h2"),
                                   detail::parse_int_field(h[2], "h3")};
    }
    const std::string path = j.value("path", std::string("corollary"));
    if (path == "theorem") cfg.path = ConstructionPath::Theorem;
    else if (path == "corollary") cfg.path = ConstructionPath::Corollary;
    else throw ParseError("path must be \"theorem\" or \"corollary\", got \"" + path + "\"");
    if (cfg.path == ConstructionPath::Corollary && cfg.h)
        throw ParseError("h is determined by F on the corollary path and must be omitted");

    std::vector<std::string> requested = {"all"};
    if (j.contains("checks")) requested = j.at("checks").get<std::vector<std::string>>();
    for (const auto& c : requested) {
        if (c == "all") {
            cfg.checks = known_checks();
            break;
        }
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw ParseError("unknown check \"" + c + "\"");
        if (std::find(cfg.checks.begin(), cfg.checks.end(), c) == cfg.checks.end()) cfg.checks.push_back(c);
    }
    if (j.contains("n_max") && !j.at("n_max").is_null()) cfg.n_max = detail::parse_int_field(j.at("n_max"), "n_max");
    return cfg;
}

inline json config_to_json(const ConstructionConfig& cfg) {
    json j;
    if (!cfg.name.empty()) j["name"] = cfg.name;
    j["a"] = cfg.a.str();
    j["b"] = cfg.b.str();
    j["N"] = cfg.N;
    j["F"] = json::array({cfg.F[0], cfg.F[1], cfg.F[2], cfg.F[3]});
    if (cfg.h) j["h"] = *cfg.h;
    j["path"] = path_name(cfg.path);
    j["checks"] = cfg.checks;
    if (cfg.n_max) j["n_max"] = *cfg.n_max;
    return j;
}

// Validates and builds the construction context; throws ContextInvalid naming
// the violated constraint.
inline ConstructionContext make_context(const ConstructionConfig& cfg) {
    const FiniteSetQuartet F = FiniteSetQuartet::make(cfg.F);
    const HahnParams p{cfg.a, cfg.b, cfg.N};
    if (cfg.path == ConstructionPath::Theorem) return make_theorem_context(p, F, cfg.h.value_or(std::array<int, 3>{1, 1, 1}));
    return make_corollary_context(p, F);
}

// Built-in configurations for `demo`.
inline std::optional<ConstructionConfig> builtin_config(const std::string& name) {
    ConstructionConfig cfg;
    cfg.name = name;
    cfg.a = Rational(1, 2);
    cfg.b = Rational(1, 3);
    cfg.N = 8;
    cfg.checks = known_checks();
    if (name == "A" || name == "A-theorem") {
        cfg.F = {IntSet{}, IntSet{}, IntSet{}, IntSet{1}};
    } else if (name == "B" || name == "B-theorem") {
        cfg.F = {IntSet{1}, IntSet{1}, IntSet{1}, IntSet{1}};
    } else if (name == "classical") {
        cfg.path = ConstructionPath::Theorem;
        return cfg;
    } else {
        return std::nullopt;
    }
    if (name.ends_with("-theorem")) {
        cfg.path = ConstructionPath::Theorem;
        cfg.h = std::array<int, 3>{1, 1, 1};
    }
    return cfg;
}

inline std::vector<std::string> builtin_names() { return {"A", "A-theorem", "B", "B-theorem", "classical"}; }

// ---------------------------------------------------------------------------
// Checks

enum class CheckStatus { Pass, Fail };

inline const char* status_name(CheckStatus s) { return s == CheckStatus::Pass ? "pass" : "fail"; }

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    json witness = json::object();
    double elapsed_ms = 0;

    bool passed() const { return status == CheckStatus::Pass; }
};

namespace detail {

inline CheckResult make_check(std::string name, bool ok, json witness = json::object()) {
    CheckResult c;
    c.name = std::move(name);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.witness = std::move(witness);
    return c;
}

}  // namespace detail

// Omega(n) != 0 for 0 <= n <= N+m3+m4+1.
inline CheckResult check_omega(const ConstructionContext& ctx, const Omega& omega) {
    const int top = ctx.n_max() + 1;
    json values = json::array();
    for (int n = 0; n <= top; ++n) {
        Rational v;
        try {
            v = omega.at(Rational(n));
        } catch (const ParameterSingularity&) {
            return detail::make_check("omega", false, {{"n", n}, {"reason", "pole"}});
        }
        if (v.is_zero()) return detail::make_check("omega", false, {{"n", n}, {"reason", "zero"}});
        values.push_back(v.str());
    }
    return detail::make_check("omega", true, {{"range", {0, top}}, {"values", values}});
}

// Sufficient conditions of the Casorati-type orthogonality criterion:
// (a) <rho~, h_n> = (-1)^n c sum_i xi^i_{n,n+1} Z_i(theta_n) / (p'(g~_i) Z_i(theta_{-1})), 0 <= n <= N,
//     with one constant c fitted at n = 0;
// (b) sum_i Z_i(theta_n) / (p'(g~_i) xi^i_{-1,-n-1} Z_i(theta_{-1})) = 0, 1-m <= n < 0;
// (c) the same sum at theta_{-m} with xi^i_{-1,m-1} is nonzero.
inline CheckResult check_foeq(const ConstructionContext& ctx) {
    const int m = ctx.m();
    const HahnParams& p = ctx.params;
    const Rational ab = p.ab();
    if (m == 0) return detail::make_check("foeq", true, {{"note", "no rows"}});
    try {
        for (int i = 0; i < m; ++i) {
            const RationalFunction eps = epsilon(ctx.kinds[static_cast<std::size_t>(i)], p);
            for (int n = 1 - m; n <= 0; ++n)
                if (eps(Rational(n)).is_zero())
                    return detail::make_check("foeq", false, {{"reason", "epsilon vanishes"}, {"row", i + 1}, {"n", n}});
        }
        std::vector<Rational> pprime(static_cast<std::size_t>(m), Rational(1));
        std::vector<Rational> z_at_minus1(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            for (int k = 0; k < m; ++k)
                if (k != i) pprime[ii] *= ctx.g_tilde[ii] - ctx.g_tilde[static_cast<std::size_t>(k)];
            z_at_minus1[ii] = ctx.Y[ii](theta(Rational(-1), ab));
            if (z_at_minus1[ii].is_zero())
                return detail::make_check("foeq", false, {{"reason", "Z(theta_{-1}) vanishes"}, {"row", i + 1}});
        }
        auto moment_sum = [&](int n) {
            Rational s(0);
            for (int i = 0; i < m; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                s += xi_value(ctx.kinds[ii], Rational(n), n + 1, p) * ctx.Y[ii](theta(Rational(n), ab)) /
                     (pprime[ii] * z_at_minus1[ii]);
            }
            return n % 2 == 0 ? s : -s;
        };
        auto negative_sum = [&](const Rational& t, int xi_index) {
            Rational s(0);
            for (int i = 0; i < m; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                s += ctx.Y[ii](t) / (pprime[ii] * xi_value(ctx.kinds[ii], Rational(-1), xi_index, p) * z_at_minus1[ii]);
            }
            return s;
        };

        const DiscreteMeasure rho = rho_tilde(p, ctx.F, ctx.h);
        const Rational s0 = moment_sum(0);
        const Rational mu0 = rho.integrate(Polynomial(1));
        if (s0.is_zero() || mu0.is_zero())
            return detail::make_check("foeq", false, {{"reason", "constant cannot be fitted at n = 0"}});
        const Rational c = mu0 / s0;
        for (int n = 1; n <= p.N; ++n) {
            const Rational lhs = rho.integrate(hahn_poly(n, p));
            const Rational rhs = c * moment_sum(n);
            if (lhs != rhs)
                return detail::make_check("foeq", false,
                                          {{"part", "moments"}, {"n", n}, {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"c", c.str()}});
        }
        for (int n = 1 - m; n < 0; ++n) {
            const Rational s = negative_sum(theta(Rational(n), ab), -n - 1);
            if (!s.is_zero()) return detail::make_check("foeq", false, {{"part", "vanishing"}, {"n", n}, {"sum", s.str()}});
        }
        const Rational last = negative_sum(theta(Rational(-m), ab), m - 1);
        if (last.is_zero()) return detail::make_check("foeq", false, {{"part", "nonvanishing"}, {"sum", "0"}});
        return detail::make_check("foeq", true,
                                  {{"c", c.str()}, {"moment_range", {0, p.N}}, {"vanishing_range", {1 - m, -1}},
                                   {"nonvanishing_sum", last.str()},
                                   {"note", "constant fitted at n = 0 under the stored weight normalization"}});
    } catch (const Error& e) {
        return detail::make_check("foeq", false, {{"reason", e.what()}});
    }
}

// ---------------------------------------------------------------------------
// Operator-existence oracle

struct OracleResult {
    bool solvable = false;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::optional<DifferenceOperator> op;
};

// Solves D(q_n) = lambda_n q_n for D = sum_{l=-r}^{r} h_l S_l with deg h_l <= cap.
inline OracleResult probe_operator(const std::vector<Polynomial>& qs, const std::vector<Rational>& lambdas, int r_probe,
                                   int cap) {
    if (qs.size() != lambdas.size()) throw Error("oracle: one eigenvalue per polynomial is required");
    if (r_probe < 0 || cap < 0) throw Error("oracle: order and degree cap must be nonnegative");
    const std::size_t width = static_cast<std::size_t>(cap) + 1;
    const std::size_t unknowns = static_cast<std::size_t>(2 * r_probe + 1) * width;
    std::size_t rows = 0;
    for (const auto& q : qs) rows += static_cast<std::size_t>(std::max(q.degree(), 0) + cap + 1);
    const std::size_t needed = static_cast<std::size_t>(2 * r_probe + 1) * static_cast<std::size_t>(cap + 2);
    if (rows < needed)
        throw InsufficientData("oracle needs at least " + std::to_string(needed) + " equations, got " + std::to_string(rows));

    Matrix<Rational> A(rows, unknowns);
    std::vector<Rational> rhs(rows, Rational(0));
    std::size_t row0 = 0;
    for (std::size_t n = 0; n < qs.size(); ++n) {
        const int block = std::max(qs[n].degree(), 0) + cap + 1;
        for (int l = -r_probe; l <= r_probe; ++l) {
            const Polynomial shifted = shift_argument(qs[n], Rational(l));
            for (int k = 0; k <= cap; ++k) {
                const std::size_t col = static_cast<std::size_t>(l + r_probe) * width + static_cast<std::size_t>(k);
                for (int e = 0; e <= shifted.degree(); ++e)
                    A(row0 + static_cast<std::size_t>(e + k), col) = shifted.coeff(e);
            }
        }
        const Polynomial target = qs[n] * lambdas[n];
        for (int e = 0; e <= target.degree(); ++e) rhs[row0 + static_cast<std::size_t>(e)] = target.coeff(e);
        row0 += static_cast<std::size_t>(block);
    }
    const LinearSolution sol = solve_linear(std::move(A), std::move(rhs));
    OracleResult out;
    out.unknowns = unknowns;
    out.equations = rows;
    out.rank = sol.rank;
    out.nullity = sol.nullity;
    out.solvable = sol.consistent;
    if (sol.consistent) {
        DifferenceOperator d;
        for (int l = -r_probe; l <= r_probe; ++l) {
            std::vector<Rational> c(width);
            for (std::size_t k = 0; k < width; ++k) c[k] = sol.solution[static_cast<std::size_t>(l + r_probe) * width + k];
            d.add_term(l, Polynomial(std::move(c)));
        }
        out.op = std::move(d);
    }
    return out;
}

inline std::optional<DifferenceOperator> find_operator_oracle(const std::vector<Polynomial>& qs,
                                                              const std::vector<Rational>& lambdas, int r_probe,
                                                              int coeff_degree_cap) {
    return probe_operator(qs, lambdas, r_probe, coeff_degree_cap).op;
}

inline json to_json(const OracleResult& o) {
    return {{"solvable", o.solvable}, {"unknowns", o.unknowns}, {"equations", o.equations}, {"rank", o.rank},
            {"nullity", o.nullity}};
}

// ---------------------------------------------------------------------------
// Couples (F3, F4) reproducing a Christoffel weight

struct Couple {
    IntSet F3;
    IntSet F4;
    int sign = 1;  // rho^F = sign * target
    int r = 0;
    bool below_half = false;  // f3M, f4M < N/2
};

// All (F3, F4) with F4 within the roots and F3 within N - roots whose weight
// rho^{(0,0,F3,F4)} equals prod(x - root) rho up to a global sign.
inline std::vector<Couple> enumerate_couples(int N, const IntSet& roots, const Rational& a = Rational(1, 2),
                                             const Rational& b = Rational(1, 3)) {
    const HahnParams p = HahnParams::make(a, b, N);
    std::set<int> unique_roots(roots.begin(), roots.end());
    IntSet pool4(unique_roots.begin(), unique_roots.end());
    IntSet pool3;
    for (int v : pool4) pool3.push_back(N - v);
    for (int v : pool4)
        if (v < 1 || v >= N) throw ContextInvalid("roots-range", "roots must lie in 1..N-1");
    Polynomial target_factor(1);
    for (int v : pool4) target_factor *= Polynomial::linear(Rational(-v));
    const DiscreteMeasure target = christoffel(hahn_measure(p), target_factor);

    std::vector<Couple> out;
    const std::size_t k = pool4.size();
    for (std::size_t m3 = 0; m3 < (std::size_t{1} << k); ++m3)
        for (std::size_t m4 = 0; m4 < (std::size_t{1} << k); ++m4) {
            IntSet f3;
            IntSet f4;
            for (std::size_t i = 0; i < k; ++i) {
                if (m3 >> i & 1U) f3.push_back(pool3[i]);
                if (m4 >> i & 1U) f4.push_back(pool4[i]);
            }
            const FiniteSetQuartet F = FiniteSetQuartet::make({IntSet{}, IntSet{}, f3, f4});
            const DiscreteMeasure w = rho_F(p, F);
            int sign = 0;
            if (w == target) sign = 1;
            else if (scale(w, Rational(-1)) == target) sign = -1;
            if (sign == 0) continue;
            Couple c;
            c.F3 = F[3];
            c.F4 = F[4];
            c.sign = sign;
            c.r = order_corollary(F);
            c.below_half = 2 * F.max(3) < N && 2 * F.max(4) < N;
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end(), [](const Couple& x, const Couple& y) { return x.r < y.r || (x.r == y.r && x.F4 < y.F4); });
    return out;
}

// ---------------------------------------------------------------------------
// Full run

struct VerificationReport {
    json config;
    std::string path;
    int m = 0;
    int n_max = 0;
    std::optional<int> r;
    std::optional<Genre> genre;
    std::vector<Rational> lambdas;
    std::optional<Rational> c_fit;
    std::optional<Polynomial> P_S;
    std::optional<DifferenceOperator> Dq;
    Rational translation{0};
    std::vector<CheckResult> checks;
    double elapsed_ms = 0;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
    }
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline bool wants(const ConstructionConfig& cfg, const std::string& name) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

}  // namespace detail

// Runs the construction and the requested checks. Invalid configurations
// throw ContextInvalid; anything failing afterwards becomes a failed check.
inline VerificationReport run_config(const ConstructionConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    const ConstructionContext ctx = make_context(cfg);
    VerificationReport rep;
    rep.config = config_to_json(cfg);
    rep.path = path_name(ctx.path);
    rep.m = ctx.m();
    rep.translation = ctx.translation;
    rep.n_max = ctx.n_max();
    if (cfg.n_max) {
        if (*cfg.n_max < 0 || *cfg.n_max > ctx.n_max())
            throw ContextInvalid("n-max-range", "n_max override must lie in 0.." + std::to_string(ctx.n_max()));
        rep.n_max = *cfg.n_max;
    }
    const int r_formula = ctx.path == ConstructionPath::Theorem ? order_theorem(ctx.F, ctx.h) : order_corollary(ctx.input_F);
    rep.r = r_formula;

    auto timed = [&](const std::string& name, const std::function<CheckResult()>& fn) {
        if (!detail::wants(cfg, name)) return;
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult c;
        try {
            c = fn();
        } catch (const Error& e) {
            c = detail::make_check(name, false, {{"error", e.what()}});
        }
        c.name = name;
        c.elapsed_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    };

    Construction con;
    {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            check_no_resonance(ctx);
            con = construct(ctx);
        } catch (const Error& e) {
            CheckResult c = detail::make_check("construction", false, {{"error", e.what()}});
            c.elapsed_ms = detail::ms_since(t0);
            rep.checks.push_back(std::move(c));
            rep.elapsed_ms = detail::ms_since(t_start);
            return rep;
        }
        CheckResult c = detail::make_check("construction", true);
        c.elapsed_ms = detail::ms_since(t0);
        rep.checks.push_back(std::move(c));
    }
    rep.genre = con.Dq.genre();
    rep.P_S = con.spectral.P_S;
    rep.Dq = con.Dq;
    for (int n = 0; n <= rep.n_max; ++n) rep.lambdas.push_back(con.spectral.lambda(Rational(n)));

    std::vector<Polynomial> qs;
    for (int n = 0; n <= rep.n_max; ++n) qs.push_back(build_qn(ctx, n));

    timed("omega", [&] { return check_omega(ctx, con.omega); });

    // The weight the q_n are orthogonal for, in the variable of the construction.
    auto weight = [&]() -> DiscreteMeasure { return rho_tilde(ctx.params, ctx.F, ctx.h); };

    timed("orthogonality", [&] {
        const DiscreteMeasure rho = weight();
        json w = {{"support_size", rho.size()}};
        if (ctx.path == ConstructionPath::Corollary) {
            const DiscreteMeasure input = rho_F(ctx.input_params, ctx.input_F);
            auto ratio = proportionality(translate(rho, ctx.translation), input);
            if (!ratio) return detail::make_check("orthogonality", false, {{"reason", "translated weight differs from rho^F"}});
            w["rho_F_over_translated"] = ratio->str();
        }
        for (int n = 0; n <= rep.n_max; ++n) {
            const auto nn = static_cast<std::size_t>(n);
            if (qs[nn].degree() != n) return detail::make_check("orthogonality", false, {{"n", n}, {"degree", qs[nn].degree()}});
            for (int k = 0; k < n; ++k) {
                const Rational ip = inner_product(rho, qs[nn], qs[static_cast<std::size_t>(k)]);
                if (!ip.is_zero())
                    return detail::make_check("orthogonality", false, {{"n", n}, {"k", k}, {"inner_product", ip.str()}});
            }
            if (inner_product(rho, qs[nn], qs[nn]).is_zero())
                return detail::make_check("orthogonality", false, {{"n", n}, {"reason", "zero norm"}});
        }
        w["range"] = {0, rep.n_max};
        return detail::make_check("orthogonality", true, w);
    });

    timed("gram-schmidt", [&] {
        const std::vector<Polynomial> gs = gram_schmidt(weight(), rep.n_max);
        for (int n = 0; n <= rep.n_max; ++n) {
            const auto nn = static_cast<std::size_t>(n);
            if (monic(qs[nn]) != gs[nn])
                return detail::make_check("gram-schmidt", false,
                                          {{"n", n}, {"q_monic", to_json(monic(qs[nn]))}, {"oracle", to_json(gs[nn])}});
        }
        return detail::make_check("gram-schmidt", true, {{"range", {0, rep.n_max}}});
    });

    timed("eigen", [&] {
        for (int n = 0; n <= rep.n_max; ++n) {
            const auto nn = static_cast<std::size_t>(n);
            const Polynomial diff = con.Dq(qs[nn]) - qs[nn] * rep.lambdas[nn];
            if (!diff.is_zero()) return detail::make_check("eigen", false, {{"n", n}, {"residual", to_json(diff)}});
        }
        return detail::make_check("eigen", true, {{"range", {0, rep.n_max}}});
    });

    timed("genre", [&] {
        const Genre g = *rep.genre;
        const int r_u = order_from_U(ctx.U);
        json w = {{"genre", {g.s, g.r}}, {"r_formula", r_formula}, {"r_from_U", r_u}, {"deg_P_S", con.spectral.P_S.degree()}};
        bool ok = g.s == -r_formula && g.r == r_formula && r_u == r_formula && con.spectral.P_S.degree() == r_formula;
        if (ok && ctx.path == ConstructionPath::Corollary) ok = order_theorem(ctx.F, ctx.h) == r_formula;
        if (ok) {
            const int d_hi = con.Dq.coefficient(r_formula).degree();
            const int d_lo = con.Dq.coefficient(-r_formula).degree();
            w["extreme_coefficient_degrees"] = {d_lo, d_hi};
            ok = d_hi == 2 * r_formula && d_lo == 2 * r_formula;
        }
        return detail::make_check("genre", ok, w);
    });

    timed("hypotheses", [&] {
        const Rational ab = ctx.params.ab();
        if (con.S * con.omega.value != RationalFunction(con.S_omega))
            return detail::make_check("hypotheses", false, {{"part", "S Omega polynomial"}});
        for (int h = 0; h < ctx.m(); ++h) {
            const auto& row = con.rows[static_cast<std::size_t>(h)];
            if (row.M != sigma_poly(ab, Rational(1)) * compose(row.M_tilde, theta_poly(ab)))
                return detail::make_check("hypotheses", false, {{"part", "M_h = sigma_{x+1} M~_h(theta_x)"}, {"h", h + 1}});
            if (row.M_tilde.degree() > r_formula - ctx.g[static_cast<std::size_t>(h)] - 1)
                return detail::make_check("hypotheses", false,
                                          {{"part", "degree of M~_h"}, {"h", h + 1}, {"degree", row.M_tilde.degree()}});
        }
        if (compose(con.spectral.P_S, theta_poly(ab)) != con.spectral.H)
            return detail::make_check("hypotheses", false, {{"part", "H = P_S(theta_x)"}});
        const Polynomial lhs = compose(con.spectral.P_S, theta_poly(ab)) - compose(con.spectral.P_S, theta_poly(ab, Rational(-1)));
        const Polynomial rhs = con.S_omega + shift_argument(con.S_omega, Rational(ctx.m()));
        if (lhs != rhs) return detail::make_check("hypotheses", false, {{"part", "P_S difference identity"}});
        return detail::make_check("hypotheses", true, {{"S_omega", to_json(con.S_omega)}});
    });

    timed("lemma51", [&] {
        const int d = p_degree_formula(ctx.U);
        const Rational lead = p_leading_formula(ctx);
        json w = {{"degree", con.P.degree()}, {"d", d}, {"leading", con.P.leading().str()}, {"formula", lead.str()}};
        return detail::make_check("lemma51", con.P.degree() == d && con.P.leading() == lead, w);
    });

    timed("foeq", [&] {
        CheckResult c = check_foeq(ctx);
        if (c.status == CheckStatus::Pass && c.witness.contains("c")) rep.c_fit = Rational::parse(c.witness["c"].get<std::string>());
        return c;
    });

    timed("oracle", [&] {
        const int r = r_formula;
        // The eigen-equation holds for every n, so q_n past n_max may be added
        // until the system is overdetermined.
        const int needed = (2 * r + 1) * (2 * r + 2);
        std::vector<Polynomial> data;
        std::vector<Rational> lambdas;
        const Rational l0 = con.spectral.lambda(Rational(0));
        int rows = 0;
        for (int n = 0; n <= rep.n_max || (rows < needed && n <= rep.n_max + needed); ++n) {
            data.push_back(n <= rep.n_max ? qs[static_cast<std::size_t>(n)] : build_qn(ctx, n));
            lambdas.push_back(con.spectral.lambda(Rational(n)) - l0);
            rows += std::max(data.back().degree(), 0) + 2 * r + 1;
        }
        const int count = static_cast<int>(data.size());
        const OracleResult at_r = probe_operator(data, lambdas, r, 2 * r);
        json w = {{"samples", count}, {"at_r", to_json(at_r)}};
        if (r >= 1) {
            try {
                w["at_r_minus_1"] = to_json(probe_operator(data, lambdas, r - 1, 2 * (r - 1)));
            } catch (const InsufficientData& e) {
                w["at_r_minus_1"] = {{"error", e.what()}};
            }
        }
        if (!at_r.solvable) return detail::make_check("oracle", false, w);
        const DifferenceOperator aligned = con.Dq - l0 * DifferenceOperator::identity();
        bool agrees = *at_r.op == aligned;
        if (!agrees && at_r.nullity > 0) {
            // Non-unique solution: Dq only has to satisfy the same equations.
            agrees = true;
            for (std::size_t n = 0; n < data.size(); ++n)
                if (aligned(data[n]) != data[n] * lambdas[n]) agrees = false;
        }
        w["agrees_with_construction"] = agrees;
        return detail::make_check("oracle", agrees, w);
    });

    rep.elapsed_ms = detail::ms_since(t_start);
    return rep;
}

inline json to_json(const CheckResult& c, bool timing = true) {
    json j = {{"name", c.name}, {"status", status_name(c.status)}, {"witness", c.witness}};
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

inline json to_json(const VerificationReport& rep, bool timing = true) {
    json j;
    j["config"] = rep.config;
    j["path"] = rep.path;
    j["m"] = rep.m;
    j["n_max"] = rep.n_max;
    j["translation"] = rep.translation.str();
    if (rep.r) j["r"] = *rep.r;
    if (rep.genre) j["genre"] = {rep.genre->s, rep.genre->r};
    json lambdas = json::array();
    for (const auto& l : rep.lambdas) lambdas.push_back(l.str());
    j["eigenvalues"] = lambdas;
    if (rep.c_fit) j["fitted_constant"] = rep.c_fit->str();
    if (rep.P_S) j["P_S"] = to_json(*rep.P_S);
    if (rep.Dq) j["operator"] = to_json(*rep.Dq);
    json checks = json::array();
    int failed = 0;
    for (const auto& c : rep.checks) {
        checks.push_back(to_json(c, timing));
        if (!c.passed()) ++failed;
    }
    j["checks"] = checks;
    j["summary"] = {{"passed", rep.passed()}, {"checks", rep.checks.size()}, {"failed", failed}};
    if (timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

}  // namespace kh
