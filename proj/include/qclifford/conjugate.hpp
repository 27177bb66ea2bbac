#ifndef QCLIFFORD_CONJUGATE_HPP
#define QCLIFFORD_CONJUGATE_HPP

#include "qclifford/fischer.hpp"

#include <optional>
#include <stdexcept>

namespace qclifford {

/// Raised when an input violates the stated precondition of an operation
/// (for example a non-harmonic polynomial handed to construct_conjugate).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HarmonicCheck {
    bool harmonic;
    CliffordPolynomial residual;  // laplace_full(P)
};

inline HarmonicCheck check_harmonic_full(const CliffordPolynomial& p) {
    CliffordPolynomial r = laplace_full(p);
    bool ok = r.is_zero();
    return {ok, std::move(r)};
}

struct MonogenicCheck {
    bool monogenic;
    CliffordPolynomial residual;       // dirac_full(F)
    CliffordPolynomial first_system;   // d^{1/q}_{x0} U + D^q V
    CliffordPolynomial second_system;  // D^q U + d^{1/q}_{x0} V
};

/// Tests dirac_full(F) = 0 directly and through the split F = U + conj(e0) V;
/// the two verdicts must agree.
inline MonogenicCheck check_monogenic_full(const CliffordPolynomial& f) {
    const QContext& ctx = f.ctx();
    CliffordPolynomial u(ctx), v(ctx);
    for (const auto& [a, c] : f.terms()) {
        E0Split s = split_e0(c);
        u.add_term(a, s.u);
        v.add_term(a, s.v);
    }
    MonogenicCheck chk{false, dirac_full(f), CliffordPolynomial(ctx), CliffordPolynomial(ctx)};
    chk.first_system = partial_q(0, u, Deformation::inverse_q) + dirac_q(v);
    chk.second_system = dirac_q(u) + partial_q(0, v, Deformation::inverse_q);
    chk.monogenic = chk.residual.is_zero();
    if (chk.monogenic != (chk.first_system.is_zero() && chk.second_system.is_zero()))
        throw std::logic_error("monogenicity verdicts of the full operator and the split system disagree");
    return chk;
}

struct ConjugateResult {
    HomogeneousPolynomial u;            // input, degree k
    HomogeneousPolynomial v;            // conjugate, degree k
    HomogeneousPolynomial w;            // correction term, degree k, x-bar only
    HomogeneousPolynomial h_poisson;    // Laplace_q h = d^{1/q}_{x0} U(0, x), degree k+1
    HomogeneousPolynomial h_potential;  // H = A(U) - h, degree k+1
    CliffordPolynomial f;               // U + conj(e0) V
};

namespace detail {

inline void require_conjugate_input(const HomogeneousPolynomial& u) {
    if (u.ctx().q() <= Rational(1)) throw std::domain_error("conjugate construction requires q > 1");
    if (!check_harmonic_full(u.poly()).harmonic)
        throw PreconditionError("input polynomial is not (1/q,q)-harmonic");
}

/// d^{1/q}_{x0} U restricted to x0 = 0, as an x-bar polynomial of degree k-1.
inline HomogeneousPolynomial poisson_rhs(const HomogeneousPolynomial& u) {
    const unsigned k = u.degree();
    CliffordPolynomial g = partial_q(0, u.poly(), Deformation::inverse_q).at_x0_zero();
    return HomogeneousPolynomial(std::move(g), k >= 1 ? k - 1 : 0);
}

} // namespace detail

/// Builds the conjugate V_k, correction W, Poisson solution h_{k+1} and
/// potential H_{k+1} for a (1/q,q)-harmonic U_k, q > 1.
///
/// By default h_{k+1} is the unique solution inside |x|^2 P_{k-1}. A caller
/// may pass any other particular solution of Laplace_q h = d^{1/q}_{x0} U(0,x);
/// it is checked and used instead.
inline ConjugateResult construct_conjugate(const HomogeneousPolynomial& u,
                                           const std::optional<HomogeneousPolynomial>& particular = std::nullopt) {
    detail::require_conjugate_input(u);
    const QContext& ctx = u.ctx();
    const unsigned k = u.degree();
    const HomogeneousPolynomial g = detail::poisson_rhs(u);

    CliffordPolynomial h(ctx);
    if (particular) {
        const CliffordPolynomial& hp = particular->poly();
        if (!(hp.ctx() == ctx)) throw std::invalid_argument("particular solution lives in a different q-context");
        if (!hp.is_xbar_only() || !hp.is_homogeneous(k + 1))
            throw PreconditionError("particular solution must be x-bar only and homogeneous of degree k+1");
        if (laplace_q(hp) != g.poly()) throw PreconditionError("particular solution does not solve the q-Poisson equation");
        h = hp;
    } else if (!g.poly().is_zero()) {
        h = solve_q_poisson(g).poly();
    }

    CliffordPolynomial w = dirac_q(h);
    CliffordPolynomial v = -antiderivative_x0(dirac_q(u.poly())) + w;
    CliffordPolynomial big_h = antiderivative_x0(u.poly()) - h;
    CliffordPolynomial f = u.poly() + ebar0() * v;
    return {u,
            HomogeneousPolynomial(std::move(v), k),
            HomogeneousPolynomial(std::move(w), k),
            HomogeneousPolynomial(std::move(h), k + 1),
            HomogeneousPolynomial(std::move(big_h), k + 1),
            std::move(f)};
}

/// Outcome of testing P_k = conj(e0) (e0 d_{x0} - D^q) H_{k+1} for the
/// potential H_{k+1} of the conjugate construction, with the x0-derivative
/// read either as d^q (printed form) or d^{1/q}.
struct Theorem2Report {
    HomogeneousPolynomial h_potential;
    bool q_derivative_holds;        // d^q_{x0}
    bool inverse_derivative_holds;  // d^{1/q}_{x0}
    CliffordPolynomial q_derivative_residual;
    CliffordPolynomial inverse_derivative_residual;
    /// conj(e0)(e0 d^{1/q}_{x0} - D^q) H equals the monogenic F = P + conj(e0) V.
    bool reproduces_monogenic_f;
};

inline Theorem2Report verify_theorem2(const HomogeneousPolynomial& p) {
    if (!p.poly().is_e0_free()) throw PreconditionError("verify_theorem2 expects a Cl(0,n)-valued polynomial");
    ConjugateResult c = construct_conjugate(p);
    const CliffordPolynomial& hh = c.h_potential.poly();
    const CliffordElement e0 = CliffordElement::generator(0);
    auto rebuild = [&](Deformation d) { return ebar0() * (e0 * partial_q(0, hh, d) - dirac_q(hh)); };
    CliffordPolynomial with_q = rebuild(Deformation::q);
    CliffordPolynomial with_inv = rebuild(Deformation::inverse_q);
    CliffordPolynomial rq = with_q - p.poly();
    CliffordPolynomial ri = with_inv - p.poly();
    return {c.h_potential, rq.is_zero(), ri.is_zero(), std::move(rq), std::move(ri), with_inv == c.f};
}

/// Pieces of the real-valued case:
///   V = -v1 - sum_i x_i e_i gamma_i(w1) + |x|^2 w2
/// with v1 = A(D^q u), w1 = [2]_q h_{k-1}, w2 = -D^q h_{k-1} and
/// h_{k+1} = -|x|^2 h_{k-1}.
struct RealConjugateResult {
    ConjugateResult base;
    HomogeneousPolynomial h_lower;  // h_{k-1}
    HomogeneousPolynomial v1;       // degree k
    HomogeneousPolynomial w1;       // degree k-1
    HomogeneousPolynomial w2;       // degree k-2
};

/// Reassembles V from the triple; used to cross-check conjugate_real.
inline CliffordPolynomial reassemble_real_conjugate(const RealConjugateResult& r) {
    const QContext& ctx = r.base.u.ctx();
    CliffordPolynomial v = -r.v1.poly();
    for (std::size_t i = 1; i <= ctx.n(); ++i) {
        CliffordPolynomial xi_ei = CliffordPolynomial::variable(ctx, i) * CliffordElement::generator(static_cast<unsigned>(i));
        v -= xi_ei * gamma_scale(i, r.w1.poly());
    }
    v += radius_sq(ctx) * r.w2.poly();
    return v;
}

inline RealConjugateResult conjugate_real(const HomogeneousPolynomial& u) {
    if (!u.poly().is_real_valued()) throw std::domain_error("conjugate_real expects a real-valued polynomial");
    detail::require_conjugate_input(u);
    const QContext& ctx = u.ctx();
    const unsigned k = u.degree();
    const unsigned k1 = k >= 1 ? k - 1 : 0;
    const unsigned k2 = k >= 2 ? k - 2 : 0;

    const HomogeneousPolynomial g = detail::poisson_rhs(u);
    CliffordPolynomial h_lower(ctx);
    std::optional<HomogeneousPolynomial> h;
    if (!g.poly().is_zero()) {
        PoissonSolution sol = solve_q_poisson_factored(g);
        h_lower = -sol.cofactor.poly();
        h = sol.h;
    }
    ConjugateResult base = construct_conjugate(u, h);
    if (!base.h_poisson.poly().is_real_valued() || !base.h_potential.poly().is_real_valued())
        throw std::logic_error("real input produced a non-real Poisson solution or potential");

    CliffordPolynomial v1 = antiderivative_x0(dirac_q(u.poly()));
    CliffordPolynomial w1 = q_int(2, ctx.q()) * h_lower;
    CliffordPolynomial w2 = -dirac_q(h_lower);
    RealConjugateResult r{std::move(base), HomogeneousPolynomial(h_lower, k1), HomogeneousPolynomial(std::move(v1), k),
                          HomogeneousPolynomial(std::move(w1), k1), HomogeneousPolynomial(std::move(w2), k2)};
    if (reassemble_real_conjugate(r) != r.base.v.poly())
        throw std::logic_error("real conjugate decomposition does not reassemble V");
    return r;
}

} // namespace qclifford

#endif // QCLIFFORD_CONJUGATE_HPP
