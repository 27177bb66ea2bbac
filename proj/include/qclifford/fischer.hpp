#ifndef QCLIFFORD_FISCHER_HPP
#define QCLIFFORD_FISCHER_HPP

#include "qclifford/linalg.hpp"
#include "qclifford/operators.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <map>
#include <stdexcept>
#include <vector>

namespace qclifford {

/// Ordered monomial basis of the k-homogeneous polynomials, either on R^n
/// (x0 exponent fixed to 0) or on R^{n+1}. Order is graded-lex descending:
/// for n = 2, k = 2 on R^n this is x1^2, x1 x2, x2^2.
class MonomialBasis {
public:
    static MonomialBasis xbar(const QContext& ctx, unsigned k) { return MonomialBasis(ctx, k, false); }
    static MonomialBasis full(const QContext& ctx, unsigned k) { return MonomialBasis(ctx, k, true); }

    unsigned degree() const { return k_; }
    std::size_t size() const { return indices_.size(); }
    bool includes_x0() const { return with_x0_; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }

    /// Position of alpha, or size() if alpha is not in the basis.
    std::size_t index_of(const MultiIndex& alpha) const {
        auto it = lookup_.find(alpha);
        return it == lookup_.end() ? size() : it->second;
    }

    /// Coordinates of the real polynomial obtained from blade component b.
    std::vector<Rational> coordinates(const CliffordPolynomial& p, Blade b = Blade::identity()) const {
        std::vector<Rational> x(size());
        for (const auto& [a, c] : p.terms()) {
            Rational v = c.coefficient(b);
            if (v.is_zero()) continue;
            std::size_t i = index_of(a);
            if (i == size()) throw std::invalid_argument("polynomial has a monomial outside the basis");
            x[i] = v;
        }
        return x;
    }

    CliffordPolynomial assemble(const QContext& ctx, const std::vector<Rational>& x, Blade b = Blade::identity()) const {
        CliffordPolynomial p(ctx);
        for (std::size_t i = 0; i < size(); ++i) p.add_term(indices_[i], CliffordElement(b, x[i]));
        return p;
    }

private:
    MonomialBasis(const QContext& ctx, unsigned k, bool with_x0) : k_(k), with_x0_(with_x0) {
        MultiIndex a(ctx.generators());
        enumerate(a, with_x0 ? 0 : 1, k);
        std::sort(indices_.begin(), indices_.end(), MonomialOrder{});
        for (std::size_t i = 0; i < indices_.size(); ++i) lookup_.emplace(indices_[i], i);
    }

    void enumerate(MultiIndex& a, std::size_t slot, unsigned left) {
        if (slot + 1 == a.size()) {
            a[slot] = left;
            indices_.push_back(a);
            a[slot] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            a[slot] = e;
            enumerate(a, slot + 1, left - e);
        }
        a[slot] = 0;
    }

    unsigned k_;
    bool with_x0_;
    std::vector<MultiIndex> indices_;
    std::map<MultiIndex, std::size_t, MonomialOrder> lookup_;
};

using FischerBasis = MonomialBasis;

/// Blades e_B with B a subset of {1..n}, in Blade order.
inline std::vector<Blade> xbar_blades(const QContext& ctx) {
    std::vector<Blade> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ctx.n()); ++m) out.push_back(Blade{m << 1});
    std::sort(out.begin(), out.end());
    return out;
}

/// All blades of Cl(0,n+1), in Blade order.
inline std::vector<Blade> all_blades(const QContext& ctx) {
    std::vector<Blade> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ctx.generators()); ++m) out.push_back(Blade{m});
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

using PolyOperator = std::function<CliffordPolynomial(const CliffordPolynomial&)>;

/// Matrix of op on (domain monomial x domain blade) -> (codomain monomial x codomain blade).
inline RationalMatrix operator_matrix(const QContext& ctx, const MonomialBasis& dom, const std::vector<Blade>& dom_blades,
                                      const MonomialBasis& cod, const std::vector<Blade>& cod_blades,
                                      const PolyOperator& op) {
    RationalMatrix m(cod.size() * cod_blades.size(), dom.size() * dom_blades.size());
    std::map<Blade, std::size_t> blade_pos;
    for (std::size_t i = 0; i < cod_blades.size(); ++i) blade_pos.emplace(cod_blades[i], i);
    for (std::size_t j = 0; j < dom.size(); ++j)
        for (std::size_t b = 0; b < dom_blades.size(); ++b) {
            const std::size_t col = j * dom_blades.size() + b;
            CliffordPolynomial image = op(CliffordPolynomial::monomial(ctx, dom[j], CliffordElement(dom_blades[b])));
            for (const auto& [a, c] : image.terms()) {
                std::size_t i = cod.index_of(a);
                if (i == cod.size()) throw std::logic_error("operator image leaves the codomain basis");
                for (const auto& [blade, v] : c.terms()) {
                    auto it = blade_pos.find(blade);
                    if (it == blade_pos.end()) throw std::logic_error("operator image leaves the codomain blades");
                    m(i * cod_blades.size() + it->second, col) = v;
                }
            }
        }
    return m;
}

inline std::vector<Rational> clifford_coordinates(const MonomialBasis& basis, const std::vector<Blade>& blades,
                                                  const CliffordPolynomial& p) {
    std::vector<Rational> x(basis.size() * blades.size());
    for (std::size_t b = 0; b < blades.size(); ++b) {
        auto c = basis.coordinates(p, blades[b]);
        for (std::size_t i = 0; i < basis.size(); ++i) x[i * blades.size() + b] = c[i];
    }
    return x;
}

inline CliffordPolynomial clifford_assemble(const QContext& ctx, const MonomialBasis& basis,
                                            const std::vector<Blade>& blades, const std::vector<Rational>& x) {
    CliffordPolynomial p(ctx);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t b = 0; b < blades.size(); ++b)
            p.add_term(basis[i], CliffordElement(blades[b], x[i * blades.size() + b]));
    return p;
}

inline void require_xbar_homogeneous(const HomogeneousPolynomial& p, const char* what) {
    if (!p.poly().is_xbar_only()) throw std::domain_error(std::string(what) + ": polynomial must not depend on x0");
}

/// Applies d^alpha = prod_i (d^q_{x_i})^{alpha_i}.
inline CliffordPolynomial apply_partials(const MultiIndex& alpha, CliffordPolynomial p) {
    for (std::size_t i = 0; i < alpha.size() && !p.is_zero(); ++i)
        for (unsigned r = 0; r < alpha[i]; ++r) p = partial_q(i, p, Deformation::q);
    return p;
}

inline void require_same_space(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (!(a.ctx() == b.ctx())) throw std::invalid_argument("polynomials live in different q-contexts");
    if (a.degree() != b.degree()) throw std::domain_error("Fischer inner product needs equal degrees");
    require_xbar_homogeneous(a, "Fischer inner product");
    require_xbar_homogeneous(b, "Fischer inner product");
}

} // namespace detail

/// <R1,R2>_{k,q} = sum_alpha [alpha]_q! (conj(a1_alpha) a2_alpha)_0.
inline Rational fischer_ip_coefficients(const HomogeneousPolynomial& r1, const HomogeneousPolynomial& r2) {
    detail::require_same_space(r1, r2);
    const Rational& q = r1.ctx().q();
    Rational sum = 0;
    for (const auto& [a, c1] : r1.poly().terms()) {
        CliffordElement c2 = r2.poly().coefficient(a);
        if (c2.is_zero()) continue;
        sum += q_multiindex_factorial(a, q) * scalar_part(conjugate(c1) * c2);
    }
    return sum;
}

/// (conj(R1)(D) R2)_0: each x_j of conj(R1) replaced by d^q_{x_j}.
inline Rational fischer_ip_differential(const HomogeneousPolynomial& r1, const HomogeneousPolynomial& r2) {
    detail::require_same_space(r1, r2);
    CliffordPolynomial acc(r1.ctx());
    for (const auto& [a, c1] : r1.poly().terms()) acc += conjugate(c1) * detail::apply_partials(a, r2.poly());
    if (!acc.is_homogeneous(0)) throw std::logic_error("differential Fischer form left a non-constant remainder");
    return scalar_part(acc.coefficient(MultiIndex(r1.ctx().generators())));
}

/// Fischer inner product. Debug builds cross-check the coefficient formula
/// against the differential form.
inline Rational fischer_ip(const HomogeneousPolynomial& r1, const HomogeneousPolynomial& r2) {
    Rational v = fischer_ip_coefficients(r1, r2);
#ifndef NDEBUG
    if (v != fischer_ip_differential(r1, r2)) throw std::logic_error("Fischer inner product formulas disagree");
#endif
    return v;
}

struct AdjointnessReport {
    Rational vector_lhs;  // <x Q, P>_{k+1}
    Rational vector_rhs;  // -<Q, D P>_k
    Rational radial_lhs;  // <|x|^2 Q, R>_{k+2}  (x x = -|x|^2)
    Rational radial_rhs;  // <Q, Laplace R>_k

    bool holds() const { return vector_lhs == vector_rhs && radial_lhs == radial_rhs; }
};

inline AdjointnessReport check_adjointness(const HomogeneousPolynomial& q_k, const HomogeneousPolynomial& p_k1,
                                           const HomogeneousPolynomial& r_k2) {
    const unsigned k = q_k.degree();
    if (p_k1.degree() != k + 1 || r_k2.degree() != k + 2)
        throw std::domain_error("check_adjointness needs degrees k, k+1, k+2");
    const QContext& ctx = q_k.ctx();
    AdjointnessReport rep;
    rep.vector_lhs = fischer_ip(HomogeneousPolynomial(vector_x(ctx) * q_k.poly(), k + 1), p_k1);
    rep.vector_rhs = -fischer_ip(q_k, HomogeneousPolynomial(dirac_q(p_k1.poly()), k));
    rep.radial_lhs = fischer_ip(HomogeneousPolynomial(radius_sq(ctx) * q_k.poly(), k + 2), r_k2);
    rep.radial_rhs = fischer_ip(q_k, HomogeneousPolynomial(laplace_q(r_k2.poly()), k));
    return rep;
}

/// Solves Laplace_q(|x|^2 p) = g for p in P_d (x-bar only, real matrix,
/// applied blade by blade). The map is invertible for every q > 0 because it
/// is positive definite for the Fischer inner product.
class RadialLaplaceSolver {
public:
    RadialLaplaceSolver(const QContext& ctx, unsigned d)
        : ctx_(ctx), basis_(MonomialBasis::xbar(ctx, d)), solver_(build(ctx, basis_)) {}

    unsigned degree() const { return basis_.degree(); }
    const QContext& ctx() const { return ctx_; }

    /// Returns p with Laplace_q(|x|^2 p) = g, for g in P_d.
    CliffordPolynomial solve(const CliffordPolynomial& g) const {
        if (!(g.ctx() == ctx_)) throw std::invalid_argument("polynomial lives in a different q-context");
        CliffordPolynomial p(ctx_);
        for (Blade b : g.blades()) p += basis_.assemble(ctx_, solver_.solve(basis_.coordinates(g, b)), b);
        return p;
    }

private:
    static RationalMatrix build(const QContext& ctx, const MonomialBasis& basis) {
        const CliffordPolynomial r2 = radius_sq(ctx);
        return detail::operator_matrix(ctx, basis, {Blade::identity()}, basis, {Blade::identity()},
                                       [&](const CliffordPolynomial& p) { return laplace_q(r2 * p); });
    }

    QContext ctx_;
    MonomialBasis basis_;
    SquareSolver solver_;
};

struct HarmonicSplit {
    HomogeneousPolynomial harmonic;  // degree k, Laplace_q-free
    HomogeneousPolynomial cofactor;  // degree k-2, P = H + |x|^2 Q
};

/// P_k = H_k (+) |x|^2 P_{k-2}, reusable for many inputs of one degree.
class HarmonicSplitter {
public:
    HarmonicSplitter(const QContext& ctx, unsigned k) : ctx_(ctx), k_(k) {
        if (k >= 2) solver_.emplace(ctx, k - 2);
    }

    HarmonicSplit split(const HomogeneousPolynomial& p) const {
        check(p);
        const unsigned low = k_ >= 2 ? k_ - 2 : 0;
        if (k_ < 2) return {p, HomogeneousPolynomial(CliffordPolynomial(ctx_), low)};
        CliffordPolynomial q = solver_->solve(laplace_q(p.poly()));
        CliffordPolynomial h = p.poly() - radius_sq(ctx_) * q;
        return {HomogeneousPolynomial(std::move(h), k_), HomogeneousPolynomial(std::move(q), low)};
    }

private:
    void check(const HomogeneousPolynomial& p) const {
        if (!(p.ctx() == ctx_)) throw std::invalid_argument("polynomial lives in a different q-context");
        if (p.degree() != k_) throw std::domain_error("harmonic splitter built for another degree");
        detail::require_xbar_homogeneous(p, "decompose_harmonic");
    }

    QContext ctx_;
    unsigned k_;
    std::optional<RadialLaplaceSolver> solver_;
};

inline HarmonicSplit decompose_harmonic(const HomogeneousPolynomial& p) {
    return HarmonicSplitter(p.ctx(), p.degree()).split(p);
}

struct MonogenicSplit {
    HomogeneousPolynomial monogenic;  // degree k, D^q M = 0
    HomogeneousPolynomial cofactor;   // degree k-1, P = M + x Q
};

/// P_k = M_k (+) x P_{k-1}. The Cl(0,n)-valued system D(x Q) = D P is
/// solved once per (context, degree); coefficients carrying e0 are handled
/// by factoring e0 out on the left.
class MonogenicSplitter {
public:
    MonogenicSplitter(const QContext& ctx, unsigned k)
        : ctx_(ctx), k_(k), blades_(xbar_blades(ctx)), basis_(MonomialBasis::xbar(ctx, k >= 1 ? k - 1 : 0)) {
        if (k >= 1) {
            const CliffordPolynomial x = vector_x(ctx);
            solver_.emplace(detail::operator_matrix(ctx, basis_, blades_, basis_, blades_,
                                                    [&](const CliffordPolynomial& q) { return dirac_q(x * q); }));
        }
    }

    MonogenicSplit split(const HomogeneousPolynomial& p) const {
        if (!(p.ctx() == ctx_)) throw std::invalid_argument("polynomial lives in a different q-context");
        if (p.degree() != k_) throw std::domain_error("monogenic splitter built for another degree");
        detail::require_xbar_homogeneous(p, "decompose_monogenic");
        const unsigned low = k_ >= 1 ? k_ - 1 : 0;
        if (k_ == 0) return {p, HomogeneousPolynomial(CliffordPolynomial(ctx_), low)};

        // P = P0 + e0 P1 with P0, P1 in Cl(0,n).
        CliffordPolynomial p0(ctx_), p1(ctx_);
        for (const auto& [a, c] : p.poly().terms())
            for (const auto& [b, v] : c.terms()) {
                if (b.contains(0)) p1.add_term(a, CliffordElement(Blade{b.mask & ~std::uint64_t{1}}, v));
                else p0.add_term(a, CliffordElement(b, v));
            }
        const CliffordPolynomial q0 = solve_cofactor(p0);
        const CliffordPolynomial q1 = solve_cofactor(p1);
        // e0 x = -x e0, so e0 (M1 + x Q1) = e0 M1 + x (-e0 Q1).
        CliffordPolynomial q = q0 - CliffordElement::generator(0) * q1;
        CliffordPolynomial m = p.poly() - vector_x(ctx_) * q;
        return {HomogeneousPolynomial(std::move(m), k_), HomogeneousPolynomial(std::move(q), low)};
    }

private:
    CliffordPolynomial solve_cofactor(const CliffordPolynomial& p) const {
        if (p.is_zero()) return CliffordPolynomial(ctx_);
        auto rhs = detail::clifford_coordinates(basis_, blades_, dirac_q(p));
        return detail::clifford_assemble(ctx_, basis_, blades_, solver_->solve(rhs));
    }

    QContext ctx_;
    unsigned k_;
    std::vector<Blade> blades_;
    MonomialBasis basis_;
    std::optional<SquareSolver> solver_;
};

inline MonogenicSplit decompose_monogenic(const HomogeneousPolynomial& p) {
    return MonogenicSplitter(p.ctx(), p.degree()).split(p);
}

/// Unique solution h in |x|^2 P_{d} of Laplace_q h = g for g in P_d.
struct PoissonSolution {
    HomogeneousPolynomial h;         // degree d+2
    HomogeneousPolynomial cofactor;  // degree d, h = |x|^2 cofactor
};

inline PoissonSolution solve_q_poisson_factored(const HomogeneousPolynomial& g) {
    detail::require_xbar_homogeneous(g, "solve_q_poisson");
    const QContext& ctx = g.ctx();
    const unsigned d = g.degree();
    if (g.poly().is_zero())
        return {HomogeneousPolynomial(CliffordPolynomial(ctx), d + 2), HomogeneousPolynomial(CliffordPolynomial(ctx), d)};
    CliffordPolynomial p = RadialLaplaceSolver(ctx, d).solve(g.poly());
    CliffordPolynomial h = radius_sq(ctx) * p;
    if (laplace_q(h) != g.poly()) throw std::logic_error("q-Poisson solve failed to reproduce the right-hand side");
    return {HomogeneousPolynomial(std::move(h), d + 2), HomogeneousPolynomial(std::move(p), d)};
}

inline HomogeneousPolynomial solve_q_poisson(const HomogeneousPolynomial& g) { return solve_q_poisson_factored(g).h; }

enum class KernelOperator { laplace_q, laplace_full, dirac_q, dirac_full };
enum class ValueSpace { scalar, clifford };

/// Exact basis of the degree-k kernel of the operator. Operators on R^n use
/// x-bar-only monomials and Cl(0,n) values; the full operators use R^{n+1}
/// and Cl(0,n+1) values.
inline std::vector<HomogeneousPolynomial> kernel_basis(const QContext& ctx, KernelOperator op, unsigned k,
                                                       ValueSpace values = ValueSpace::scalar) {
    const bool full = op == KernelOperator::laplace_full || op == KernelOperator::dirac_full;
    const bool laplacian = op == KernelOperator::laplace_q || op == KernelOperator::laplace_full;
    const MonomialBasis dom = full ? MonomialBasis::full(ctx, k) : MonomialBasis::xbar(ctx, k);
    const unsigned drop = laplacian ? 2 : 1;
    std::vector<Blade> blades = values == ValueSpace::scalar ? std::vector<Blade>{Blade::identity()}
                                                             : (full ? all_blades(ctx) : xbar_blades(ctx));
    std::vector<HomogeneousPolynomial> out;

    if (k < drop) {
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (Blade b : blades)
                out.emplace_back(CliffordPolynomial::monomial(ctx, dom[i], CliffordElement(b)), k);
        return out;
    }
    const MonomialBasis cod = full ? MonomialBasis::full(ctx, k - drop) : MonomialBasis::xbar(ctx, k - drop);
    detail::PolyOperator f;
    switch (op) {
    case KernelOperator::laplace_q: f = [](const CliffordPolynomial& p) { return laplace_q(p); }; break;
    case KernelOperator::laplace_full: f = [](const CliffordPolynomial& p) { return laplace_full(p); }; break;
    case KernelOperator::dirac_q: f = [](const CliffordPolynomial& p) { return dirac_q(p); }; break;
    case KernelOperator::dirac_full: f = [](const CliffordPolynomial& p) { return dirac_full(p); }; break;
    }

    if (laplacian) {
        // Blade-diagonal: real kernel tensored with each blade.
        auto real = null_space(detail::operator_matrix(ctx, dom, {Blade::identity()}, cod, {Blade::identity()}, f));
        for (const auto& v : real)
            for (Blade b : blades) out.emplace_back(dom.assemble(ctx, v, b), k);
        return out;
    }
    auto kernel = null_space(detail::operator_matrix(ctx, dom, blades, cod, all_blades(ctx), f));
    for (const auto& v : kernel) out.emplace_back(detail::clifford_assemble(ctx, dom, blades, v), k);
    return out;
}

} // namespace qclifford

#endif // QCLIFFORD_FISCHER_HPP
