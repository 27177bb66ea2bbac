#ifndef QCLIFFORD_POLYNOMIAL_HPP
#define QCLIFFORD_POLYNOMIAL_HPP

#include "qclifford/clifford.hpp"
#include "qclifford/qcore.hpp"

#include <map>
#include <vector>
#include <stdexcept>
#include <string>

namespace qclifford {

/// Sparse polynomial in x0, x1, ..., xn with Cl(0,n+1) coefficients.
/// Variables commute with everything; coefficients need not commute with
/// each other. No zero coefficient is ever stored.
class CliffordPolynomial {
public:
    using Terms = std::map<MultiIndex, CliffordElement, MonomialOrder>;

    explicit CliffordPolynomial(QContext ctx) : ctx_(std::move(ctx)) {}

    static CliffordPolynomial constant(const QContext& ctx, const CliffordElement& c) {
        CliffordPolynomial p(ctx);
        p.add_term(MultiIndex(ctx.generators()), c);
        return p;
    }

    static CliffordPolynomial monomial(const QContext& ctx, const MultiIndex& alpha, const CliffordElement& c = 1) {
        CliffordPolynomial p(ctx);
        p.add_term(alpha, c);
        return p;
    }

    /// The coordinate x_i as a polynomial.
    static CliffordPolynomial variable(const QContext& ctx, std::size_t i) {
        MultiIndex a(ctx.generators());
        a[i] = 1;
        return monomial(ctx, a);
    }

    const QContext& ctx() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CliffordElement coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? CliffordElement() : it->second;
    }

    void add_term(const MultiIndex& alpha, const CliffordElement& c) {
        if (alpha.size() != ctx_.generators())
            throw std::invalid_argument("multi-index has " + std::to_string(alpha.size()) + " slots, expected " +
                                        std::to_string(ctx_.generators()));
        if (c.top_generator() > static_cast<int>(ctx_.n()))
            throw std::invalid_argument("blade uses a generator beyond e" + std::to_string(ctx_.n()));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Maximal total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

    /// Zero counts as homogeneous of every degree.
    bool is_homogeneous(unsigned k) const {
        for (const auto& [a, c] : terms_)
            if (a.degree() != k) return false;
        return true;
    }

    /// No stored monomial depends on x0.
    bool is_xbar_only() const {
        for (const auto& [a, c] : terms_)
            if (a[0] != 0) return false;
        return true;
    }

    bool is_real_valued() const {
        for (const auto& [a, c] : terms_)
            if (!c.is_scalar()) return false;
        return true;
    }

    /// No coefficient contains e0, i.e. values lie in Cl(0,n).
    bool is_e0_free() const {
        for (const auto& [a, c] : terms_)
            for (const auto& [b, r] : c.terms())
                if (b.contains(0)) return false;
        return true;
    }

    /// Real polynomial of blade component b.
    CliffordPolynomial component(Blade b) const {
        CliffordPolynomial r(ctx_);
        for (const auto& [a, c] : terms_) r.add_term(a, c.coefficient(b));
        return r;
    }

    /// Blades that occur in any coefficient.
    std::vector<Blade> blades() const {
        std::map<Blade, bool> seen;
        for (const auto& [a, c] : terms_)
            for (const auto& [b, r] : c.terms()) seen[b] = true;
        std::vector<Blade> out;
        for (const auto& [b, _] : seen) out.push_back(b);
        return out;
    }

    /// Terms with exponent of x0 equal to zero, i.e. the restriction x0 = 0.
    CliffordPolynomial at_x0_zero() const {
        CliffordPolynomial r(ctx_);
        for (const auto& [a, c] : terms_)
            if (a[0] == 0) r.terms_.emplace(a, c);
        return r;
    }

    CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
        check_ctx(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
        check_ctx(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    CliffordPolynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [a, c] : terms_) c *= s;
        return *this;
    }

    friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
    friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
    friend CliffordPolynomial operator-(CliffordPolynomial a) { return a *= Rational(-1); }
    friend CliffordPolynomial operator*(CliffordPolynomial a, const Rational& s) { return a *= s; }
    friend CliffordPolynomial operator*(const Rational& s, CliffordPolynomial a) { return a *= s; }

    /// c * P: every coefficient multiplied by c from the left.
    friend CliffordPolynomial operator*(const CliffordElement& c, const CliffordPolynomial& p) {
        CliffordPolynomial r(p.ctx_);
        for (const auto& [a, v] : p.terms_) r.add_term(a, c * v);
        return r;
    }
    /// P * c: every coefficient multiplied by c from the right.
    friend CliffordPolynomial operator*(const CliffordPolynomial& p, const CliffordElement& c) {
        CliffordPolynomial r(p.ctx_);
        for (const auto& [a, v] : p.terms_) r.add_term(a, v * c);
        return r;
    }

    /// Polynomial product; variables commute, coefficients multiply in order.
    friend CliffordPolynomial operator*(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        p.check_ctx(q);
        CliffordPolynomial r(p.ctx_);
        for (const auto& [a, ca] : p.terms_)
            for (const auto& [b, cb] : q.terms_) r.add_term(a + b, ca * cb);
        return r;
    }

    friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    void check_ctx(const CliffordPolynomial& o) const {
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomials live in different q-contexts");
    }

    QContext ctx_;
    Terms terms_;
};

inline CliffordPolynomial mul_poly(const CliffordPolynomial& a, const CliffordPolynomial& b) { return a * b; }

/// x = x1 e1 + ... + xn en.
inline CliffordPolynomial vector_x(const QContext& ctx) {
    CliffordPolynomial r(ctx);
    for (std::size_t i = 1; i <= ctx.n(); ++i) {
        MultiIndex a(ctx.generators());
        a[i] = 1;
        r.add_term(a, CliffordElement::generator(static_cast<unsigned>(i)));
    }
    return r;
}

/// |x|^2 = x1^2 + ... + xn^2.
inline CliffordPolynomial radius_sq(const QContext& ctx) {
    CliffordPolynomial r(ctx);
    for (std::size_t i = 1; i <= ctx.n(); ++i) {
        MultiIndex a(ctx.generators());
        a[i] = 2;
        r.add_term(a, 1);
    }
    return r;
}

/// A polynomial known to be homogeneous of a fixed degree k.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(CliffordPolynomial p, unsigned k) : p_(std::move(p)), k_(k) {
        if (!p_.is_homogeneous(k_))
            throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(k_));
    }

    /// Degree taken from the polynomial itself; the zero polynomial needs an explicit degree.
    explicit HomogeneousPolynomial(CliffordPolynomial p) : p_(std::move(p)), k_(0) {
        if (p_.is_zero()) throw std::invalid_argument("zero polynomial has no intrinsic degree");
        k_ = static_cast<unsigned>(p_.degree());
        if (!p_.is_homogeneous(k_)) throw std::invalid_argument("polynomial is not homogeneous");
    }

    const CliffordPolynomial& poly() const { return p_; }
    unsigned degree() const { return k_; }
    const QContext& ctx() const { return p_.ctx(); }

    friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

private:
    CliffordPolynomial p_;
    unsigned k_;
};

} // namespace qclifford

#endif // QCLIFFORD_POLYNOMIAL_HPP
