#ifndef QCLIFFORD_OPERATORS_HPP
#define QCLIFFORD_OPERATORS_HPP

#include "qclifford/polynomial.hpp"

#include <stdexcept>

namespace qclifford {

// Jackson-type operators acting on CliffordPolynomial. Derivatives use the
// exact monomial rule d_r x^m = [m]_r x^{m-1}, which coincides with the
// difference quotient (f(r x) - f(x)) / ((r - 1) x) on polynomials.

enum class Deformation { q, inverse_q };

inline Rational deformation_base(const QContext& ctx, Deformation d) {
    return d == Deformation::q ? ctx.q() : ctx.inverse_q();
}

namespace detail {
inline void check_axis(const QContext& ctx, std::size_t i) {
    if (i > ctx.n()) throw std::out_of_range("axis index " + std::to_string(i) + " beyond x" + std::to_string(ctx.n()));
}
} // namespace detail

/// gamma_i: substitutes q x_i for x_i.
inline CliffordPolynomial gamma_scale(std::size_t i, const CliffordPolynomial& p) {
    detail::check_axis(p.ctx(), i);
    CliffordPolynomial r(p.ctx());
    for (const auto& [a, c] : p.terms()) r.add_term(a, c * p.ctx().q().pow(a[i]));
    return r;
}

/// q- or 1/q-partial derivative in x_i.
inline CliffordPolynomial partial_q(std::size_t i, const CliffordPolynomial& p, Deformation d = Deformation::q) {
    detail::check_axis(p.ctx(), i);
    const Rational base = deformation_base(p.ctx(), d);
    CliffordPolynomial r(p.ctx());
    for (const auto& [a, c] : p.terms()) {
        if (a[i] == 0) continue;
        r.add_term(a.shifted(i, -1), c * q_int(a[i], base));
    }
    return r;
}

/// Formal antiderivative for the 1/q-derivative in x0 with zero constant:
/// x0^m x^beta -> x0^{m+1} x^beta / [m+1]_{1/q}.
inline CliffordPolynomial antiderivative_x0(const CliffordPolynomial& p) {
    const Rational base = p.ctx().inverse_q();
    CliffordPolynomial r(p.ctx());
    for (const auto& [a, c] : p.terms()) r.add_term(a.shifted(0, 1), c * q_int(a[0] + 1, base).inverse());
    return r;
}

/// sum_{i=1..n} e_i d^q_{x_i} p, units acting from the left.
inline CliffordPolynomial dirac_q(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.ctx());
    for (std::size_t i = 1; i <= p.ctx().n(); ++i)
        r += CliffordElement::generator(static_cast<unsigned>(i)) * partial_q(i, p, Deformation::q);
    return r;
}

/// e0 d^{1/q}_{x0} p + dirac_q(p).
inline CliffordPolynomial dirac_full(const CliffordPolynomial& p) {
    return CliffordElement::generator(0) * partial_q(0, p, Deformation::inverse_q) + dirac_q(p);
}

/// sum_{i=1..n} (d^q_{x_i})^2 p.
inline CliffordPolynomial laplace_q(const CliffordPolynomial& p) {
    CliffordPolynomial r(p.ctx());
    for (std::size_t i = 1; i <= p.ctx().n(); ++i)
        r += partial_q(i, partial_q(i, p, Deformation::q), Deformation::q);
    return r;
}

/// (d^{1/q}_{x0})^2 p + laplace_q(p).
inline CliffordPolynomial laplace_full(const CliffordPolynomial& p) {
    return partial_q(0, partial_q(0, p, Deformation::inverse_q), Deformation::inverse_q) + laplace_q(p);
}

} // namespace qclifford

#endif // QCLIFFORD_OPERATORS_HPP
