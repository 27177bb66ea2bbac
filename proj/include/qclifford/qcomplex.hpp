#ifndef QCLIFFORD_QCOMPLEX_HPP
#define QCLIFFORD_QCOMPLEX_HPP

#include "qclifford/qcore.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qclifford {

/// Gaussian rational re + i im.
struct Complex {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Rational& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const Complex&, const Complex&) = default;

    /// i^k.
    static Complex i_pow(unsigned k) {
        switch (k % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
        }
    }
};

/// Real univariate polynomial, coefficient j multiplies x^j.
using RealPolynomial = std::vector<Rational>;

/// Polynomial in x, y with Gaussian rational coefficients, keyed by (a, b)
/// for x^a y^b. Highest total degree first, then higher x exponent first.
class ComplexQPolynomial {
public:
    struct Order {
        bool operator()(const std::pair<unsigned, unsigned>& s, const std::pair<unsigned, unsigned>& t) const {
            unsigned ds = s.first + s.second, dt = t.first + t.second;
            if (ds != dt) return ds > dt;
            return s.first > t.first;
        }
    };
    using Terms = std::map<std::pair<unsigned, unsigned>, Complex, Order>;

    explicit ComplexQPolynomial(Rational q) : q_(std::move(q)) {
        if (q_.sign() <= 0) throw std::domain_error("deformation parameter q must be positive");
    }

    const Rational& q() const { return q_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.first + terms_.begin()->first.second);
    }

    Complex coefficient(unsigned a, unsigned b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Complex{} : it->second;
    }

    void add_term(unsigned a, unsigned b, const Complex& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({a, b}, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ComplexQPolynomial operator+(ComplexQPolynomial a, const ComplexQPolynomial& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e.first, e.second, c);
        return a;
    }
    friend ComplexQPolynomial operator*(const ComplexQPolynomial& a, const ComplexQPolynomial& b) {
        ComplexQPolynomial r(a.q_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend bool operator==(const ComplexQPolynomial&, const ComplexQPolynomial&) = default;

private:
    Rational q_;
    Terms terms_;
};

/// Jackson derivative of a real univariate polynomial.
inline RealPolynomial jackson_derivative(const RealPolynomial& f, const Rational& q) {
    if (f.size() <= 1) return {};
    RealPolynomial d(f.size() - 1);
    for (std::size_t j = 1; j < f.size(); ++j) d[j - 1] = f[j] * q_int(static_cast<unsigned>(j), q);
    return d;
}

/// q-analytic extension exp_{1/q}(i y D_x^q) f0:
///   sum_k q^{k(k-1)/2} / [k]_q! (i y)^k (D_x^q)^k f0(x).
/// The sum stops once the derivative vanishes, i.e. after deg f0.
inline ComplexQPolynomial ck_extend(const RealPolynomial& f0, const Rational& q) {
    ComplexQPolynomial p(q);
    RealPolynomial d = f0;
    for (unsigned k = 0; !d.empty(); ++k) {
        const Rational weight = q.pow(static_cast<long>(k) * (static_cast<long>(k) - 1) / 2) / q_factorial(k, q);
        const Complex ik = Complex::i_pow(k);
        for (std::size_t j = 0; j < d.size(); ++j)
            if (!d[j].is_zero()) p.add_term(static_cast<unsigned>(j), k, (weight * d[j]) * ik);
        d = jackson_derivative(d, q);
    }
    return p;
}

/// (x + i y)(x + i q y) ... (x + i q^{k-1} y).
inline ComplexQPolynomial q_binomial_z(unsigned k, const Rational& q) {
    ComplexQPolynomial p(q);
    p.add_term(0, 0, {1, 0});
    for (unsigned j = 0; j < k; ++j) {
        ComplexQPolynomial factor(q);
        factor.add_term(1, 0, {1, 0});
        factor.add_term(0, 1, {0, q.pow(j)});
        p = p * factor;
    }
    return p;
}

/// (1/2)(d^q_x + i d^{1/q}_y); p is q-analytic iff the result vanishes.
inline ComplexQPolynomial dbar_q(const ComplexQPolynomial& p) {
    const Rational half(1, 2);
    const Rational inv = p.q().inverse();
    ComplexQPolynomial r(p.q());
    for (const auto& [e, c] : p.terms()) {
        auto [a, b] = e;
        if (a > 0) r.add_term(a - 1, b, (half * q_int(a, p.q())) * c);
        if (b > 0) r.add_term(a, b - 1, (half * q_int(b, inv)) * (Complex{0, 1} * c));
    }
    return r;
}

/// x + i q^n y = c_z z + c_zbar zbar.
struct ZqSplit {
    Rational z_coeff;
    Rational zbar_coeff;
};

inline ZqSplit zq_split(unsigned n, const Rational& q) {
    const Rational qn = q.pow(n);
    return {(1 + qn) / 2, (1 - qn) / 2};
}

} // namespace qclifford

#endif // QCLIFFORD_QCOMPLEX_HPP
