#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "krall_hahn/d_operators.hpp"
#include "krall_hahn/finite_sets.hpp"
#include "krall_hahn/involution.hpp"
#include "krall_hahn/matrix.hpp"

namespace kh {

enum class ConstructionPath { Theorem, Corollary };

inline const char* path_name(ConstructionPath p) { return p == ConstructionPath::Theorem ? "theorem" : "corollary"; }

// Degree sets U1..U4 of the dual Hahn rows; rows are numbered block by block.
struct TransformedQuartet {
    std::array<IntSet, 4> U;

    int m(int i) const { return static_cast<int>(U.at(static_cast<std::size_t>(i - 1)).size()); }
    int total() const { return m(1) + m(2) + m(3) + m(4); }
    const IntSet& operator[](int i) const { return U.at(static_cast<std::size_t>(i - 1)); }
};

// Everything a construction run needs, validated once. Immutable afterwards.
struct ConstructionContext {
    HahnParams params;        // parameters the Casorati construction runs with
    HahnParams input_params;  // parameters as supplied by the caller
    ConstructionPath path = ConstructionPath::Theorem;
    FiniteSetQuartet input_F;  // quartet as supplied
    FiniteSetQuartet F;        // quartet entering the theorem (reflected sets on the corollary path)
    std::array<int, 3> h{1, 1, 1};
    TransformedQuartet U;
    std::vector<DOperatorKind> kinds;  // D-operator kind of each row
    std::vector<int> g;                // degree of Y in each row
    std::vector<Rational> g_tilde;     // eta g + kappa per row
    std::vector<Polynomial> Y;         // row polynomials, in the variable t = theta
    Polynomial Xi{1};
    bool default_Y = true;
    // Corollary path: the orthogonality measure of the input is the construction
    // measure moved by this amount (f_{4,M} + 1); zero on the theorem path.
    Rational translation{0};

    int m() const { return static_cast<int>(kinds.size()); }
    // Largest degree for which orthogonality and the eigen-equation are asserted.
    int n_max() const { return params.N + U.m(3) + U.m(4); }
};

namespace detail {

inline bool is_integer_at_most(const Rational& r, long bound) {
    return r.is_integer() && r.numerator() <= bound;
}
inline bool is_positive_integer(const Rational& r) { return r.is_integer() && r.sign() > 0; }

inline void check_theorem_constraints(const HahnParams& p, const FiniteSetQuartet& F, const std::array<int, 3>& h) {
    for (int i = 0; i < 3; ++i) {
        if (h[static_cast<std::size_t>(i)] < 1) throw ContextInvalid("h-positive", "h entries must be >= 1");
        if (F.empty(i + 1) && h[static_cast<std::size_t>(i)] != 1)
            throw ContextInvalid("h-on-empty-set", "h" + std::to_string(i + 1) + " must be 1 when F" +
                                                       std::to_string(i + 1) + " is empty");
    }
    const long fa = F.max(2) + F.max(4) + h[1];
    const long fb = F.max(1) + F.max(3) + h[0] + h[2] - 1;
    const long fab = F.max(1) + F.max(2) + F.max(3) + F.max(4) + h[0] + h[1] + h[2];
    if (is_integer_at_most(p.a, fa))
        throw ContextInvalid("a-integer-bound", "a = " + p.a.str() + " is an integer <= " + std::to_string(fa));
    if (is_integer_at_most(p.b, fb))
        throw ContextInvalid("b-integer-bound", "b = " + p.b.str() + " is an integer <= " + std::to_string(fb));
    if (is_integer_at_most(p.ab(), fab))
        throw ContextInvalid("ab-integer-bound", "a+b = " + p.ab().str() + " is an integer <= " + std::to_string(fab));
    if ((!F.empty(2) || !F.empty(4)) && is_positive_integer(p.a))
        throw ContextInvalid("a-not-positive-integer", "a = " + p.a.str() + " must not be 1,2,... when F2 or F4 is nonempty");
    if ((!F.empty(1) || !F.empty(3)) && is_positive_integer(p.b))
        throw ContextInvalid("b-not-positive-integer", "b = " + p.b.str() + " must not be 1,2,... when F1 or F3 is nonempty");
}

inline Rational g_tilde_of(int kind, int u, const HahnParams& p) {
    switch (kind) {
        case 1: return Rational(u) - p.b - Rational(p.N);
        case 2: return -Rational(u) + p.a;
        case 3: return -Rational(u) - Rational(p.N + 1);
        default: return Rational(u + 1);
    }
}

}  // namespace detail

// Theorem path: U_j = J_{h_j}(F_j) for j = 1,2,3 and U_4 = I(F_4), rows carry the
// dual Hahn polynomials of matching kind and degree.
inline ConstructionContext make_theorem_context(const HahnParams& params, const FiniteSetQuartet& F,
                                                const std::array<int, 3>& h) {
    try {
        params.validate();
    } catch (const ParameterSingularity& e) {
        throw ContextInvalid("hahn-parameters", e.what());
    }
    detail::check_theorem_constraints(params, F, h);

    ConstructionContext ctx;
    ctx.params = params;
    ctx.input_params = params;
    ctx.path = ConstructionPath::Theorem;
    ctx.input_F = F;
    ctx.F = F;
    ctx.h = h;
    for (int j = 1; j <= 3; ++j) ctx.U.U[static_cast<std::size_t>(j - 1)] = transform_J(h[static_cast<std::size_t>(j - 1)], F[j]);
    ctx.U.U[3] = involution_I(F[4]);

    for (int k = 1; k <= 4; ++k)
        for (int u : ctx.U[k]) {
            ctx.kinds.push_back(DOperatorKind::make(k));
            ctx.g.push_back(u);
            ctx.g_tilde.push_back(detail::g_tilde_of(k, u, params));
            Polynomial z = z_poly(k, u, params);
            if (z.degree() != u)
                throw ContextInvalid("dual-hahn-degree", "row polynomial of kind " + std::to_string(k) +
                                                             " has degree " + std::to_string(z.degree()) +
                                                             " instead of " + std::to_string(u));
            ctx.Y.push_back(std::move(z));
        }
    for (std::size_t i = 0; i < ctx.g_tilde.size(); ++i)
        for (std::size_t j = i + 1; j < ctx.g_tilde.size(); ++j)
            if (ctx.g_tilde[i] == ctx.g_tilde[j])
                throw ContextInvalid("simple-roots", "eigen data of rows " + std::to_string(i + 1) + " and " +
                                                         std::to_string(j + 1) + " coincide");
    return ctx;
}

// Corollary path: the Christoffel weight of the input quartet is realised by the
// theorem applied to the reflected sets {f_M - f + 1}, h_j = min F_j (1 when F_j
// is empty) and shifted parameters.
inline ConstructionContext make_corollary_context(const HahnParams& input, const FiniteSetQuartet& F) {
    const Rational& a = input.a;
    const Rational& b = input.b;
    auto negative_integer = [](const Rational& r) { return r.is_integer() && r.sign() < 0; };
    if (negative_integer(a) || negative_integer(b) || negative_integer(a + b))
        throw ContextInvalid("a-b-not-negative-integers", "a, b and a+b must avoid -1,-2,...");
    if (!F.empty(2) || !F.empty(4)) {
        Rational s = a + Rational(F.max(2) + F.max(4) + 1);
        if (s.is_integer() && s.sign() >= 0)
            throw ContextInvalid("a-shift-not-nonnegative-integer", "a+f2M+f4M+1 = " + s.str() + " is a nonnegative integer");
    }
    if (!F.empty(1) || !F.empty(3)) {
        Rational s = b + Rational(F.max(1) + F.max(3) + 1);
        if (s.is_integer() && s.sign() >= 0)
            throw ContextInvalid("b-shift-not-nonnegative-integer", "b+f1M+f3M+1 = " + s.str() + " is a nonnegative integer");
    }
    const int n_shifted = input.N - F.max(3) - F.max(4) - 2;
    if (n_shifted < 1)
        throw ContextInvalid("shifted-N-positive", "N - f3M - f4M - 2 = " + std::to_string(n_shifted) + " must be >= 1");

    std::array<IntSet, 4> reflected;
    std::array<int, 3> h{1, 1, 1};
    for (int j = 1; j <= 3; ++j) {
        const IntSet& f = F[j];
        IntSet r;
        for (auto it = f.rbegin(); it != f.rend(); ++it) r.push_back(set_max(f) - *it + 1);
        reflected[static_cast<std::size_t>(j - 1)] = r;
        if (!f.empty()) h[static_cast<std::size_t>(j - 1)] = f.front();
    }
    reflected[3] = F[4];
    HahnParams shifted{a + Rational(F.max(2) + F.max(4) + 2), b + Rational(F.max(1) + F.max(3) + 2), n_shifted};

    ConstructionContext ctx = make_theorem_context(shifted, FiniteSetQuartet::make(reflected), h);
    ctx.path = ConstructionPath::Corollary;
    ctx.input_params = input;
    ctx.input_F = F;
    ctx.translation = Rational(F.max(4) + 1);
    for (int j = 1; j <= 4; ++j)
        if (ctx.U[j] != involution_I(F[j]))
            throw ContextInvalid("corollary-transform", "J_h of the reflected set differs from I(F" + std::to_string(j) + ")");
    return ctx;
}

// Replace the row polynomials (and optionally Xi) keeping the block structure.
// Orthogonality statements are only made for the default dual Hahn rows.
inline ConstructionContext with_rows(ConstructionContext ctx, std::vector<Polynomial> Y,
                                     std::optional<Polynomial> Xi = std::nullopt) {
    if (Y.size() != ctx.kinds.size())
        throw ContextInvalid("row-count", "expected " + std::to_string(ctx.kinds.size()) + " row polynomials");
    for (const auto& y : Y)
        if (y.is_zero()) throw ContextInvalid("row-nonzero", "row polynomials must be nonzero");
    ctx.Y = std::move(Y);
    ctx.default_Y = false;
    for (std::size_t i = 0; i < ctx.Y.size(); ++i) ctx.g[i] = ctx.Y[i].degree();
    if (Xi) {
        if (!is_invariant(*Xi, ctx.params.ab() - Rational(ctx.m() + 1)))
            throw ContextInvalid("xi-invariance", "Xi must be invariant under x -> -(x+a+b-m)");
        ctx.Xi = *Xi;
    }
    return ctx;
}

// Rows given directly by degree sets U and polynomials Y with deg Y_l = u_l, as
// in the determinant lemma; no finite-set quartet is involved.
inline ConstructionContext make_rows_context(const HahnParams& params, const TransformedQuartet& U, std::vector<Polynomial> Y) {
    try {
        params.validate();
    } catch (const ParameterSingularity& e) {
        throw ContextInvalid("hahn-parameters", e.what());
    }
    ConstructionContext ctx;
    ctx.params = params;
    ctx.input_params = params;
    ctx.U = U;
    ctx.default_Y = false;
    for (int k = 1; k <= 4; ++k)
        for (int u : U[k]) {
            ctx.kinds.push_back(DOperatorKind::make(k));
            ctx.g.push_back(u);
            ctx.g_tilde.push_back(detail::g_tilde_of(k, u, params));
        }
    if (Y.size() != ctx.kinds.size())
        throw ContextInvalid("row-count", "expected " + std::to_string(ctx.kinds.size()) + " row polynomials");
    for (std::size_t i = 0; i < Y.size(); ++i)
        if (Y[i].degree() != ctx.g[i])
            throw ContextInvalid("row-degree", "row " + std::to_string(i + 1) + " must have degree " + std::to_string(ctx.g[i]));
    ctx.Y = std::move(Y);
    return ctx;
}

// ---------------------------------------------------------------------------
// Casorati determinant

// Y_l(theta_{x+c}) as a polynomial in x.
inline Polynomial row_value(const ConstructionContext& ctx, int l, const Rational& c) {
    return compose(ctx.Y[static_cast<std::size_t>(l)], theta_poly(ctx.params.ab(), c));
}

// Entries xi^l_{x-j,m-j} Y_l(theta_{x-j}), l,j = 1..m (stored 0-based).
inline PolyMatrix omega_matrix(const ConstructionContext& ctx) {
    const int m = ctx.m();
    PolyMatrix e(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l)
        for (int j = 1; j <= m; ++j)
            e(static_cast<std::size_t>(l), static_cast<std::size_t>(j - 1)) =
                xi(ctx.kinds[static_cast<std::size_t>(l)], m - j, ctx.params, Rational(-j)) *
                RationalFunction(row_value(ctx, l, Rational(-j)));
    return e;
}

// The same matrix with row l multiplied by its D-factors at x-1, which by the
// splitting N^{m-1}... = N^{j-1} N^{m-j} makes every entry a polynomial.
inline Matrix<Polynomial> cleared_omega_matrix(const ConstructionContext& ctx) {
    const int m = ctx.m();
    const HahnParams& p = ctx.params;
    Matrix<Polynomial> e(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) {
        const DOperatorKind kind = ctx.kinds[static_cast<std::size_t>(l)];
        for (int j = 1; j <= m; ++j) {
            Polynomial v = row_value(ctx, l, Rational(-j));
            for (int family = 1; family <= 2; ++family) {
                const bool used = family == 1 ? kind.uses_first_family() : kind.uses_second_family();
                if (!used) continue;
                v = v * n_factor(family, m - j, Rational(-j), p) * d_factor(family, j - 1, Rational(-1), p);
            }
            e(static_cast<std::size_t>(l), static_cast<std::size_t>(j - 1)) = std::move(v);
        }
    }
    return e;
}

// (D^{1;m-1}_{x-1})^{m2+m4} (D^{2;m-1}_{x-1})^{m1+m2}: the factor the clearing introduces.
inline Polynomial omega_clearing_factor(const ConstructionContext& ctx) {
    const int m = ctx.m();
    const auto& U = ctx.U;
    Polynomial out(1);
    if (m == 0) return out;
    out = out * pow(d_factor(1, m - 1, Rational(-1), ctx.params), static_cast<unsigned>(U.m(2) + U.m(4)));
    out = out * pow(d_factor(2, m - 1, Rational(-1), ctx.params), static_cast<unsigned>(U.m(1) + U.m(2)));
    return out;
}

struct Omega {
    Polynomial cleared;     // det of the cleared matrix
    Polynomial clearing;    // the factor it carries
    RationalFunction value; // Omega(x) = cleared / clearing, reduced

    // Omega at a point; a pole of the reduced form is a parameter singularity.
    Rational at(const Rational& x) const { return value(x); }
};

inline Omega build_omega(const ConstructionContext& ctx) {
    Omega o;
    o.cleared = poly_det(cleared_omega_matrix(ctx));
    o.clearing = omega_clearing_factor(ctx);
    o.value = RationalFunction(o.cleared, o.clearing);
    return o;
}

// ---------------------------------------------------------------------------
// The rational function S and the polynomial P

// p(x) = prod_{i=1}^{m2+m4-1} N^{1;m2+m4-i}_{x-m1-m3-i} D^{1;m2+m4-i}_{x-1}
//      * prod_{i=1}^{m1+m2-1} N^{2;m1+m2-i}_{x-m3-m4-i} D^{2;m1+m2-i}_{x-1}
inline Polynomial p_factor(const ConstructionContext& ctx) {
    const auto& U = ctx.U;
    const HahnParams& p = ctx.params;
    Polynomial out(1);
    const int k1 = U.m(2) + U.m(4);
    for (int i = 1; i <= k1 - 1; ++i)
        out = out * n_factor(1, k1 - i, Rational(-U.m(1) - U.m(3) - i), p) * d_factor(1, k1 - i, Rational(-1), p);
    const int k2 = U.m(1) + U.m(2);
    for (int i = 1; i <= k2 - 1; ++i)
        out = out * n_factor(2, k2 - i, Rational(-U.m(3) - U.m(4) - i), p) * d_factor(2, k2 - i, Rational(-1), p);
    return out;
}

// q(x) = (-1)^{m(m-1)/2} prod_{p=1}^{m-1} prod_{s=1}^{p} sigma_{x-m+(s+p+1)/2}
inline Polynomial q_factor(const ConstructionContext& ctx) {
    const int m = ctx.m();
    Polynomial out(1);
    for (int pp = 1; pp <= m - 1; ++pp)
        for (int s = 1; s <= pp; ++s)
            out = out * sigma_poly(ctx.params.ab(), Rational(-m) + Rational(s + pp + 1, 2));
    return (m * (m - 1) / 2) % 2 == 0 ? out : -out;
}

// P = det(cleared matrix) / (p q); a remainder means a violated precondition.
inline Polynomial build_P(const ConstructionContext& ctx, const Omega& omega) {
    return divide_exact(omega.cleared, p_factor(ctx) * q_factor(ctx));
}
inline Polynomial build_P(const ConstructionContext& ctx) { return build_P(ctx, build_omega(ctx)); }

inline RationalFunction build_S(const ConstructionContext& ctx) {
    const Rational shift = -Rational(ctx.m() - 1, 2);
    return RationalFunction(sigma_poly(ctx.params.ab(), shift) * ctx.Xi * omega_clearing_factor(ctx),
                            p_factor(ctx) * q_factor(ctx));
}

// S(x) Omega(x) = sigma_{x-(m-1)/2} Xi(x) P(x).
inline Polynomial build_S_omega(const ConstructionContext& ctx, const Polynomial& P) {
    const Rational shift = -Rational(ctx.m() - 1, 2);
    return sigma_poly(ctx.params.ab(), shift) * ctx.Xi * P;
}

// Any row set failing z - u + b + N + 1 != 0 or w - v + a + N + 1 != 0 is resonant.
inline void check_no_resonance(const ConstructionContext& ctx) {
    const HahnParams& p = ctx.params;
    const Rational N(p.N);
    for (int u : ctx.U[1])
        for (int z : ctx.U[4])
            if ((Rational(z - u) + p.b + N + Rational(1)).is_zero())
                throw ResonantParameters("z - u + b + N + 1 = 0 for u = " + std::to_string(u) + ", z = " + std::to_string(z));
    for (int v : ctx.U[2])
        for (int w : ctx.U[3])
            if ((Rational(w - v) + p.a + N + Rational(1)).is_zero())
                throw ResonantParameters("w - v + a + N + 1 = 0 for v = " + std::to_string(v) + ", w = " + std::to_string(w));
}

// deg P = 2 sum u - 2 sum C(m_i, 2)
inline int p_degree_formula(const TransformedQuartet& U) {
    int d = 0;
    for (int i = 1; i <= 4; ++i) d += 2 * set_sum(U[i]) - U.m(i) * (U.m(i) - 1);
    return d;
}

inline Rational vandermonde(const IntSet& xs) {
    Rational v(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) v *= Rational(xs[j] - xs[i]);
    return v;
}

// Closed form of the leading coefficient of P for rows with the given leading
// coefficients (one per row, in row order).
inline Rational p_leading_formula(const ConstructionContext& ctx) {
    const auto& U = ctx.U;
    const HahnParams& p = ctx.params;
    int e = U.m(1) * U.m(2) + U.m(2) * U.m(3) + U.m(3) * U.m(4);
    for (int i = 1; i <= 4; ++i) e += U.m(i) * (U.m(i) - 1) / 2;
    Rational r = e % 2 == 0 ? Rational(1) : Rational(-1);
    for (int i = 1; i <= 4; ++i) r *= vandermonde(U[i]);
    for (const auto& y : ctx.Y) r *= y.leading();
    const Rational N(p.N);
    for (int v : U[2])
        for (int w : U[3]) r *= N + p.a + Rational(1 - v + w);
    for (int u : U[1])
        for (int z : U[4]) r *= N + p.b + Rational(1 - u + z);
    return r;
}

// ---------------------------------------------------------------------------
// q_n

// Numeric Casorati rows at degree n: entry (l, j) = xi^l_{n+1-j,m+1-j} Y_l(theta_{n+1-j}), j = 1..m+1.
inline Matrix<Rational> qn_rows(const ConstructionContext& ctx, int n) {
    const int m = ctx.m();
    const Rational ab = ctx.params.ab();
    Matrix<Rational> rows(static_cast<std::size_t>(m), static_cast<std::size_t>(m + 1));
    for (int l = 0; l < m; ++l)
        for (int j = 1; j <= m + 1; ++j) {
            const Rational at(n + 1 - j);
            const Rational xv = xi(ctx.kinds[static_cast<std::size_t>(l)], m + 1 - j, ctx.params)(at);
            rows(static_cast<std::size_t>(l), static_cast<std::size_t>(j - 1)) =
                xv * ctx.Y[static_cast<std::size_t>(l)](theta(at, ab));
        }
    return rows;
}

// q_n as the (m+1)x(m+1) Casorati determinant expanded along its first row
// (h_n, -h_{n-1}, ..., (-1)^m h_{n-m}); h_k = 0 for k < 0.
inline Polynomial build_qn(const ConstructionContext& ctx, int n) {
    if (n < 0) throw Error("build_qn: negative degree");
    const int m = ctx.m();
    const Matrix<Rational> rows = qn_rows(ctx, n);
    Polynomial out;
    for (int j = 1; j <= m + 1; ++j) {
        if (n + 1 - j < 0) break;
        Matrix<Rational> minor(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
        for (int l = 0; l < m; ++l)
            for (int c = 1, oc = 0; c <= m + 1; ++c) {
                if (c == j) continue;
                minor(static_cast<std::size_t>(l), static_cast<std::size_t>(oc++)) =
                    rows(static_cast<std::size_t>(l), static_cast<std::size_t>(c - 1));
            }
        const Rational coef = det(std::move(minor));
        if (!coef.is_zero()) out += hahn_poly(n + 1 - j, ctx.params) * coef;
    }
    return out;
}

// ---------------------------------------------------------------------------
// M_h, lambda, P_S and the operator

struct RowOperatorData {
    Polynomial M;        // M_h(x)
    Polynomial M_tilde;  // M_h = sigma_{x+1} M_tilde(theta_x)
};

// M_h(x) = sum_j (-1)^{h+j} xi^h_{x,m-j} S(x+j) det(E(l,r)(x+j))_{l != h, r != j}
// with E the Omega matrix; the result must be a skew-invariant polynomial.
inline std::vector<RowOperatorData> build_M(const ConstructionContext& ctx, const RationalFunction& S) {
    const int m = ctx.m();
    const Rational ab = ctx.params.ab();
    const PolyMatrix e = omega_matrix(ctx);
    std::vector<RowOperatorData> out;
    for (int h = 1; h <= m; ++h) {
        RationalFunction acc;
        const DOperatorKind kind = ctx.kinds[static_cast<std::size_t>(h - 1)];
        for (int j = 1; j <= m; ++j) {
            const RationalFunction cof =
                rational_det(e.minor(static_cast<std::size_t>(h - 1), static_cast<std::size_t>(j - 1)));
            RationalFunction term = xi(kind, m - j, ctx.params) * shift_argument(S, Rational(j)) *
                                    shift_argument(cof, Rational(j));
            if ((h + j) % 2 == 0) acc += term;
            else acc -= term;
        }
        RowOperatorData d;
        d.M = acc.as_polynomial();
        if (involution_apply(d.M, ab) != -d.M)
            throw NotThetaRepresentable("M_" + std::to_string(h) + " is not skew-invariant");
        d.M_tilde = theta_substitute(divide_exact(d.M, sigma_poly(ab, Rational(1))), ab);
        out.push_back(std::move(d));
    }
    return out;
}

struct SpectralData {
    Polynomial lambda;  // lambda(x) - lambda(x-1) = S(x) Omega(x), lambda(-1) = 0
    Polynomial H;       // 2 lambda + sum_h Y_h(theta_x) M_h(x)
    Polynomial P_S;     // P_S(theta_x) = H(x)
};

inline SpectralData build_lambda_and_PS(const ConstructionContext& ctx, const Polynomial& S_omega,
                                        const std::vector<RowOperatorData>& rows) {
    SpectralData s;
    s.lambda = antidifference(S_omega);
    s.H = s.lambda * Rational(2);
    for (int h = 0; h < ctx.m(); ++h) s.H += row_value(ctx, h, Rational(0)) * rows[static_cast<std::size_t>(h)].M;
    s.P_S = theta_substitute(s.H, ctx.params.ab());
    return s;
}

// D_{q,S} = 1/2 P_S(D_p) + sum_h M_tilde_h(D_p) D_h Y_h(D_p).
inline DifferenceOperator build_Dq(const ConstructionContext& ctx, const SpectralData& s,
                                   const std::vector<RowOperatorData>& rows) {
    const DifferenceOperator dp = hahn_operator(ctx.params);
    DifferenceOperator out = Rational(1, 2) * operator_poly(s.P_S, dp);
    for (int h = 0; h < ctx.m(); ++h) {
        const auto hh = static_cast<std::size_t>(h);
        out = out + compose(operator_poly(rows[hh].M_tilde, dp),
                            compose(d_operator(ctx.kinds[hh], ctx.params), operator_poly(ctx.Y[hh], dp)));
    }
    return out;
}

// Every intermediate object of one construction run.
struct Construction {
    Omega omega;
    Polynomial P;
    RationalFunction S;
    Polynomial S_omega;
    std::vector<RowOperatorData> rows;
    SpectralData spectral;
    DifferenceOperator Dq;
};

inline Construction construct(const ConstructionContext& ctx) {
    Construction c;
    c.omega = build_omega(ctx);
    c.P = build_P(ctx, c.omega);
    c.S = build_S(ctx);
    c.S_omega = build_S_omega(ctx, c.P);
    c.rows = build_M(ctx, c.S);
    c.spectral = build_lambda_and_PS(ctx, c.S_omega, c.rows);
    c.Dq = build_Dq(ctx, c.spectral, c.rows);
    return c;
}

// ---------------------------------------------------------------------------
// Order formulas

inline int choose2(int n) { return n * (n - 1) / 2; }

// r = sum_u u - sum C(m_i, 2) + 1 = deg P_S.
inline int order_from_U(const TransformedQuartet& U) {
    int r = 1;
    for (int i = 1; i <= 4; ++i) r += set_sum(U[i]) - choose2(U.m(i));
    return r;
}

// r for the Christoffel weight of F directly.
inline int order_corollary(const FiniteSetQuartet& F) {
    int r = 1;
    for (int i = 1; i <= 4; ++i) r += set_sum(F[i]) - choose2(F.card(i));
    return r;
}

inline int order_theorem(const FiniteSetQuartet& F, const std::array<int, 3>& h) {
    int r = 1 + set_sum(F[4]);
    for (int i = 1; i <= 4; ++i) r -= choose2(F.card(i));
    for (int i = 1; i <= 3; ++i) r += -set_sum(F[i]) + F.card(i) * (F.max(i) + h[static_cast<std::size_t>(i - 1)]);
    return r;
}

}  // namespace kh
