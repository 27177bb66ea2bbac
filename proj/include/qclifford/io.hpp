#ifndef QCLIFFORD_IO_HPP
#define QCLIFFORD_IO_HPP

#include "qclifford/polynomial.hpp"
#include "qclifford/qcomplex.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qclifford {

/// Syntax error in polynomial text, with the 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// poly   := term (('+'|'-') term)*      (optional leading sign)
// term   := coeff? ('*'? factor)*
// factor := var '^' int | var | blade
// var    := 'x' digit+          blade := 'e' digit+ (strictly ascending)
// coeff  := int ('/' int)?
class PolyParser {
public:
    PolyParser(std::string_view text, const QContext& ctx) : s_(text), ctx_(ctx) {}

    CliffordPolynomial parse() {
        CliffordPolynomial p(ctx_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        Rational sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        for (;;) {
            p += sign * parse_term();
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        return p;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned small_int(const std::string& d, std::size_t at) const {
        if (d.size() > 6) throw ParseError("integer '" + d + "' too large", at);
        return static_cast<unsigned>(std::stoul(d));
    }

    CliffordPolynomial parse_term() {
        skip_ws();
        const std::size_t start = pos_;
        Rational coeff = 1;
        bool have_coeff = false, have_factor = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (!at_end() && peek() == '/') {
                ++pos_;
                std::size_t den_at = pos_;
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_at);
                coeff = Rational(mpz_class(num, 10), mpz_class(den, 10));
            } else {
                coeff = Rational(mpz_class(num, 10));
            }
            have_coeff = true;
        }
        MultiIndex alpha(ctx_.generators());
        CliffordElement unit = 1;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            bool star = false;
            if (peek() == '*') {
                star = true;
                ++pos_;
                skip_ws();
                if (at_end()) fail("expected factor after '*'");
            }
            if (peek() == 'x') {
                const std::size_t at = pos_++;
                unsigned var = small_int(digits(), at);
                if (var > ctx_.n()) throw ParseError("variable x" + std::to_string(var) + " beyond x" + std::to_string(ctx_.n()), at);
                unsigned exp = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    std::size_t exp_at = pos_;
                    exp = small_int(digits(), exp_at);
                }
                alpha[var] += exp;
            } else if (peek() == 'e') {
                const std::size_t at = pos_++;
                std::string d = digits();
                Blade b;
                int last = -1;
                for (char c : d) {
                    int g = c - '0';
                    if (g <= last) throw ParseError("blade digits must be strictly ascending", at);
                    if (static_cast<std::size_t>(g) > ctx_.n())
                        throw ParseError("blade generator e" + std::string(1, c) + " beyond e" + std::to_string(ctx_.n()), at);
                    last = g;
                    b.mask |= std::uint64_t{1} << g;
                }
                unit = unit * CliffordElement(b);
            } else {
                if (star) fail("expected variable or blade after '*'");
                break;
            }
            have_factor = true;
        }
        if (!have_coeff && !have_factor) throw ParseError("expected a term", start);
        return CliffordPolynomial::monomial(ctx_, alpha, coeff * unit);
    }

    std::string_view s_;
    const QContext& ctx_;
    std::size_t pos_ = 0;
};

inline std::string monomial_text(const MultiIndex& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (a[i] > 1) s += '^' + std::to_string(a[i]);
    }
    return s;
}

} // namespace detail

inline CliffordPolynomial parse_poly(std::string_view text, const QContext& ctx) {
    return detail::PolyParser(text, ctx).parse();
}

/// Canonical text, e.g. "x0^3 - x0*x1^2 - 47/64*x0*x2^2". parse_poly inverts it.
inline std::string format_poly(const CliffordPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [a, c] : p.terms())
        for (const auto& [b, v] : c.terms()) {
            const bool neg = v.sign() < 0;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            const Rational mag = neg ? -v : v;
            std::string mono = detail::monomial_text(a);
            std::string term;
            if (mag != 1 || (mono.empty() && b.is_identity())) term = mag.to_string();
            for (const std::string& part : {mono, b.is_identity() ? std::string() : b.to_string()}) {
                if (part.empty()) continue;
                if (!term.empty()) term += '*';
                term += part;
            }
            out += term;
        }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const CliffordPolynomial& p) { return os << format_poly(p); }

/// [{"alpha":[a0,...,an],"blade":"e12","coeff":"3/4"}, ...] in canonical order.
inline nlohmann::json poly_to_json(const CliffordPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [a, c] : p.terms())
        for (const auto& [b, v] : c.terms())
            arr.push_back({{"alpha", a.exponents()}, {"blade", b.to_string()}, {"coeff", v.to_string()}});
    return arr;
}

inline CliffordPolynomial poly_from_json(const nlohmann::json& j, const QContext& ctx) {
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (j.contains("terms")) arr = &j.at("terms");
        else if (j.contains("poly")) arr = &j.at("poly");
        else throw std::invalid_argument("JSON polynomial object needs a \"terms\" array");
    }
    if (!arr->is_array()) throw std::invalid_argument("JSON polynomial must be an array of terms");
    CliffordPolynomial p(ctx);
    for (const auto& t : *arr) {
        if (!t.is_object() || !t.contains("alpha") || !t.contains("coeff"))
            throw std::invalid_argument("JSON term needs \"alpha\" and \"coeff\"");
        auto exps = t.at("alpha").get<std::vector<unsigned>>();
        if (exps.size() != ctx.generators())
            throw std::invalid_argument("JSON term alpha must have " + std::to_string(ctx.generators()) + " entries");
        Blade b = t.contains("blade") ? Blade::parse(t.at("blade").get<std::string>()) : Blade::identity();
        if (b.top_generator() > static_cast<int>(ctx.n())) throw std::invalid_argument("JSON term blade beyond e" + std::to_string(ctx.n()));
        const auto& cj = t.at("coeff");
        Rational c = cj.is_string() ? Rational::parse(cj.get<std::string>()) : Rational(cj.get<long>());
        p.add_term(MultiIndex(std::move(exps)), CliffordElement(b, c));
    }
    return p;
}

/// Grammar text, or JSON when the first non-blank character is '{' or '['.
inline CliffordPolynomial read_poly(std::string_view text, const QContext& ctx) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string_view::npos && (text[i] == '{' || text[i] == '['))
        return poly_from_json(nlohmann::json::parse(text), ctx);
    return parse_poly(text, ctx);
}

/// [{"xexp":a,"yexp":b,"re":"p/q","im":"r/s"}, ...].
inline nlohmann::json complex_to_json(const ComplexQPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"xexp", e.first}, {"yexp", e.second}, {"re", c.re.to_string()}, {"im", c.im.to_string()}});
    return arr;
}

inline ComplexQPolynomial complex_from_json(const nlohmann::json& arr, const Rational& q) {
    ComplexQPolynomial p(q);
    for (const auto& t : arr)
        p.add_term(t.at("xexp").get<unsigned>(), t.at("yexp").get<unsigned>(),
                   {Rational::parse(t.at("re").get<std::string>()), Rational::parse(t.at("im").get<std::string>())});
    return p;
}

inline std::string format_complex(const ComplexQPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.re;
        if (!c.im.is_zero()) os << (c.im.sign() < 0 ? " - " : " + ") << (c.im.sign() < 0 ? -c.im : c.im) << "i";
        os << ')';
        if (e.first) os << "*x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) os << "*y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

/// Univariate real polynomial in x0 (the only variable allowed), for ck-extend.
inline RealPolynomial to_real_univariate(const CliffordPolynomial& p) {
    RealPolynomial f;
    for (const auto& [a, c] : p.terms()) {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i]) throw std::invalid_argument("univariate input may only use x0");
        if (!c.is_scalar()) throw std::invalid_argument("univariate input must be real-valued");
        if (f.size() <= a[0]) f.resize(a[0] + 1);
        f[a[0]] = scalar_part(c);
    }
    return f;
}

} // namespace qclifford

#endif // QCLIFFORD_IO_HPP
