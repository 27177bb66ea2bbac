#ifndef QCLIFFORD_QCORE_HPP
#define QCLIFFORD_QCORE_HPP

#include "qclifford/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qclifford {

/// Deformation parameter q together with the dimension n of the vector
/// variable. The ambient space is R^{n+1} with coordinates x0, x1, ..., xn.
/// Any q > 0 is accepted here (q = 1 gives the classical theory); the
/// conjugate construction imposes q > 1 on its own.
class QContext {
public:
    QContext(Rational q, std::size_t n) : q_(std::move(q)), n_(n) {
        if (q_.sign() <= 0) throw std::domain_error("deformation parameter q must be positive");
        if (n_ < 1) throw std::domain_error("dimension n must be at least 1");
        if (n_ + 1 > 63) throw std::domain_error("dimension n too large for bitmask blades");
    }

    const Rational& q() const { return q_; }
    Rational inverse_q() const { return q_.inverse(); }
    std::size_t n() const { return n_; }
    /// Number of Clifford generators e0..en.
    std::size_t generators() const { return n_ + 1; }

    friend bool operator==(const QContext&, const QContext&) = default;

private:
    Rational q_;
    std::size_t n_;
};

/// Exponent vector (a0, a1, ..., an); slot 0 belongs to x0.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t slots) : e_(slots, 0) {}
    MultiIndex(std::initializer_list<unsigned> exps) : e_(exps) {}
    explicit MultiIndex(std::vector<unsigned> exps) : e_(std::move(exps)) {}

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_.at(i); }
    unsigned& operator[](std::size_t i) { return e_.at(i); }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

    MultiIndex shifted(std::size_t i, int delta) const {
        MultiIndex r = *this;
        r.e_.at(i) = static_cast<unsigned>(static_cast<int>(r.e_.at(i)) + delta);
        return r;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw std::invalid_argument("multi-index size mismatch");
        MultiIndex r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
        os << '(';
        for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.e_[i];
        return os << ')';
    }

private:
    std::vector<unsigned> e_;
};

/// Canonical monomial order: higher total degree first, then lexicographically
/// larger exponent vectors first (x0 > x1 > ... > xn). Within one degree this
/// is graded-lex descending, so x1^k precedes x2^k.
struct MonomialOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                            a.exponents().begin(), a.exponents().end());
    }
};

/// Basic number [u]_q = 1 + q + ... + q^{u-1}; defined for every q, including 1.
inline Rational q_int(unsigned u, const Rational& q) {
    Rational sum = 0, term = 1;
    for (unsigned j = 0; j < u; ++j) {
        sum += term;
        term *= q;
    }
    return sum;
}

inline Rational q_factorial(unsigned k, const Rational& q) {
    Rational f = 1;
    for (unsigned j = 2; j <= k; ++j) f *= q_int(j, q);
    return f;
}

inline Rational q_multiindex_factorial(const MultiIndex& alpha, const Rational& q) {
    Rational f = 1;
    for (unsigned a : alpha.exponents()) f *= q_factorial(a, q);
    return f;
}

inline Rational q_binomial_coeff(unsigned n, unsigned k, const Rational& q) {
    if (k > n) throw std::domain_error("q-binomial coefficient requires k <= n");
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

} // namespace qclifford

#endif // QCLIFFORD_QCORE_HPP
