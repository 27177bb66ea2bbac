// qclifford: command-line front end for the exact q-Clifford toolkit.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 usage or input error.

#include "qclifford/qclifford.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace qclifford;
using nlohmann::json;

struct Options {
    std::string q = "4/3";
    std::size_t n = 2;
    std::string poly;
    std::string poisson;
    std::string format = "text";
    bool verify = false;
    bool real = false;
    std::string kind = "harmonic";
    std::string op = "laplace_full";
    std::string values = "scalar";
    unsigned degree = 0;
    unsigned k = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string load_text(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliffordPolynomial load_poly(const std::string& arg, const QContext& ctx, const char* what) {
    if (arg.empty()) throw UsageError(std::string("missing --") + what);
    return read_poly(load_text(arg), ctx);
}

HomogeneousPolynomial homogeneous(const CliffordPolynomial& p) {
    if (p.is_zero()) return HomogeneousPolynomial(p, 0);
    if (!p.is_homogeneous(static_cast<unsigned>(p.degree()))) throw UsageError("polynomial must be homogeneous");
    return HomogeneousPolynomial(p);
}

class Emitter {
public:
    explicit Emitter(const Options& o) : json_(o.format == "json") {}

    void poly(const std::string& key, const CliffordPolynomial& p) {
        if (json_) doc_[key] = poly_to_json(p);
        else text_ << key << ": " << format_poly(p) << '\n';
    }
    void value(const std::string& key, const json& v) {
        if (json_) doc_[key] = v;
        else text_ << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    void flush(std::ostream& os) {
        if (json_) os << doc_.dump(2) << '\n';
        else os << text_.str();
    }

private:
    bool json_;
    json doc_ = json::object();
    std::ostringstream text_;
};

int cmd_check_harmonic(const Options& o, const QContext& ctx, Emitter& out) {
    HarmonicCheck chk = check_harmonic_full(load_poly(o.poly, ctx, "poly"));
    out.value("harmonic", chk.harmonic);
    if (!chk.harmonic) out.poly("residual", chk.residual);
    return chk.harmonic ? 0 : 1;
}

int cmd_check_monogenic(const Options& o, const QContext& ctx, Emitter& out) {
    MonogenicCheck chk = check_monogenic_full(load_poly(o.poly, ctx, "poly"));
    out.value("monogenic", chk.monogenic);
    if (!chk.monogenic) {
        out.poly("residual", chk.residual);
        out.poly("first_system", chk.first_system);
        out.poly("second_system", chk.second_system);
    }
    return chk.monogenic ? 0 : 1;
}

int cmd_conjugate(const Options& o, const QContext& ctx, Emitter& out) {
    HomogeneousPolynomial u = homogeneous(load_poly(o.poly, ctx, "poly"));
    std::optional<HomogeneousPolynomial> particular;
    if (!o.poisson.empty()) {
        CliffordPolynomial h = load_poly(o.poisson, ctx, "poisson");
        particular.emplace(std::move(h), u.degree() + 1);
    }
    std::optional<RealConjugateResult> real;
    ConjugateResult res = [&] {
        if (o.real) {
            if (particular) throw UsageError("--real and --poisson cannot be combined");
            real = conjugate_real(u);
            return real->base;
        }
        return construct_conjugate(u, particular);
    }();
    MonogenicCheck mono = check_monogenic_full(res.f);

    out.value("k", res.u.degree());
    out.poly("U", res.u.poly());
    out.poly("V", res.v.poly());
    out.poly("W", res.w.poly());
    out.poly("h", res.h_poisson.poly());
    out.poly("H", res.h_potential.poly());
    out.poly("F", res.f);
    if (real) {
        out.poly("h_lower", real->h_lower.poly());
        out.poly("v1", real->v1.poly());
        out.poly("w1", real->w1.poly());
        out.poly("w2", real->w2.poly());
    }
    out.value("monogenic", mono.monogenic);

    bool ok = mono.monogenic;
    if (o.verify) {
        json checks = json::object();
        checks["U_harmonic"] = check_harmonic_full(res.u.poly()).harmonic;
        checks["V_harmonic"] = check_harmonic_full(res.v.poly()).harmonic;
        checks["H_harmonic"] = check_harmonic_full(res.h_potential.poly()).harmonic;
        checks["poisson_equation"] =
            laplace_q(res.h_poisson.poly()) == partial_q(0, res.u.poly(), Deformation::inverse_q).at_x0_zero();
        checks["V_equals_minus_DH"] = res.v.poly() == -dirac_q(res.h_potential.poly());
        checks["F_equals_dirac_of_ebar0_H"] = res.f == dirac_full(ebar0() * res.h_potential.poly());
        for (const auto& [key, v] : checks.items()) ok = ok && v.get<bool>();
        out.value("checks", checks);
    }
    return ok ? 0 : 1;
}

int cmd_fischer(const Options& o, const QContext& ctx, Emitter& out) {
    HomogeneousPolynomial p = homogeneous(load_poly(o.poly, ctx, "poly"));
    bool ok = true;
    if (o.kind == "harmonic") {
        HarmonicSplit s = decompose_harmonic(p);
        out.poly("H", s.harmonic.poly());
        out.poly("Q", s.cofactor.poly());
        if (o.verify) {
            bool reassembles = s.harmonic.poly() + radius_sq(ctx) * s.cofactor.poly() == p.poly();
            bool harmonic = laplace_q(s.harmonic.poly()).is_zero();
            bool orthogonal = fischer_ip(s.harmonic, HomogeneousPolynomial(radius_sq(ctx) * s.cofactor.poly(), p.degree())).is_zero();
            out.value("checks", {{"reassembles", reassembles}, {"harmonic", harmonic}, {"orthogonal", orthogonal}});
            ok = reassembles && harmonic && orthogonal;
        }
    } else if (o.kind == "monogenic") {
        MonogenicSplit s = decompose_monogenic(p);
        out.poly("M", s.monogenic.poly());
        out.poly("Q", s.cofactor.poly());
        if (o.verify) {
            bool reassembles = s.monogenic.poly() + vector_x(ctx) * s.cofactor.poly() == p.poly();
            bool monogenic = dirac_q(s.monogenic.poly()).is_zero();
            bool orthogonal = fischer_ip(s.monogenic, HomogeneousPolynomial(vector_x(ctx) * s.cofactor.poly(), p.degree())).is_zero();
            out.value("checks", {{"reassembles", reassembles}, {"monogenic", monogenic}, {"orthogonal", orthogonal}});
            ok = reassembles && monogenic && orthogonal;
        }
    } else {
        throw UsageError("--kind must be harmonic or monogenic");
    }
    return ok ? 0 : 1;
}

int cmd_poisson(const Options& o, const QContext& ctx, Emitter& out) {
    HomogeneousPolynomial g = homogeneous(load_poly(o.poly, ctx, "poly"));
    PoissonSolution s = solve_q_poisson_factored(g);
    out.poly("h", s.h.poly());
    out.poly("cofactor", s.cofactor.poly());
    bool ok = true;
    if (o.verify) {
        ok = laplace_q(s.h.poly()) == g.poly();
        out.value("checks", {{"poisson_equation", ok}});
    }
    return ok ? 0 : 1;
}

int cmd_kernel_basis(const Options& o, const QContext& ctx, Emitter& out) {
    KernelOperator op;
    if (o.op == "laplace_q") op = KernelOperator::laplace_q;
    else if (o.op == "laplace_full") op = KernelOperator::laplace_full;
    else if (o.op == "dirac_q") op = KernelOperator::dirac_q;
    else if (o.op == "dirac_full") op = KernelOperator::dirac_full;
    else throw UsageError("unknown --operator " + o.op);
    ValueSpace vs;
    if (o.values == "scalar") vs = ValueSpace::scalar;
    else if (o.values == "clifford") vs = ValueSpace::clifford;
    else throw UsageError("--value-space must be scalar or clifford");

    auto basis = kernel_basis(ctx, op, o.degree, vs);
    json list = json::array();
    std::ostringstream text;
    for (const auto& b : basis) {
        list.push_back(poly_to_json(b.poly()));
        text << "\n  " << format_poly(b.poly());
    }
    out.value("dimension", basis.size());
    if (o.format == "json") out.value("basis", list);
    else out.value("basis", text.str());
    return 0;
}

int cmd_ck_extend(const Options& o, Emitter& out) {
    const QContext ctx(Rational::parse(o.q), 1);
    RealPolynomial f0 = to_real_univariate(load_poly(o.poly, ctx, "poly"));
    ComplexQPolynomial p = ck_extend(f0, ctx.q());
    if (o.format == "json") out.value("extension", complex_to_json(p));
    else out.value("extension", format_complex(p));
    bool ok = true;
    if (o.verify) {
        ok = dbar_q(p).is_zero();
        out.value("checks", {{"q_analytic", ok}});
    }
    return ok ? 0 : 1;
}

int cmd_qbinomial(const Options& o, Emitter& out) {
    const Rational q = Rational::parse(o.q);
    ComplexQPolynomial p = q_binomial_z(o.k, q);
    if (o.format == "json") out.value("expansion", complex_to_json(p));
    else out.value("expansion", format_complex(p));
    bool ok = true;
    if (o.verify) {
        RealPolynomial xk(o.k + 1);
        xk[o.k] = 1;
        bool analytic = dbar_q(p).is_zero();
        bool matches = ck_extend(xk, q) == p;
        out.value("checks", {{"q_analytic", analytic}, {"matches_ck_extension", matches}});
        ok = analytic && matches;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Clifford analysis on homogeneous polynomials"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_poly = true) {
        sub->add_option("--q", o.q, "deformation parameter as p/q (default 4/3)");
        sub->add_option("--n", o.n, "dimension of the vector variable (default 2)");
        if (with_poly) sub->add_option("--poly", o.poly, "polynomial text, JSON, or @file");
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--verify", o.verify, "run internal cross-checks");
    };

    auto* harmonic = app.add_subcommand("check-harmonic", "test laplace_full(P) = 0");
    common(harmonic);
    auto* monogenic = app.add_subcommand("check-monogenic", "test dirac_full(F) = 0");
    common(monogenic);
    auto* conj = app.add_subcommand("conjugate", "build the conjugate of a (1/q,q)-harmonic U_k");
    common(conj);
    conj->add_option("--poisson", o.poisson, "particular solution h_{k+1} of the q-Poisson equation");
    conj->add_flag("--real", o.real, "real-valued input: also report h_{k-1}, v1, w1, w2");
    auto* fischer = app.add_subcommand("fischer-decompose", "harmonic or monogenic Fischer decomposition");
    common(fischer);
    fischer->add_option("--kind", o.kind, "harmonic or monogenic");
    auto* poisson = app.add_subcommand("poisson", "solve Laplace_q h = g with h in |x|^2 P_{k-1}");
    common(poisson);
    auto* kernel = app.add_subcommand("kernel-basis", "exact kernel basis of an operator in degree k");
    common(kernel, false);
    kernel->add_option("--operator", o.op, "laplace_q, laplace_full, dirac_q or dirac_full");
    kernel->add_option("--degree", o.degree, "homogeneous degree")->required();
    kernel->add_option("--value-space", o.values, "scalar or clifford");
    auto* ck = app.add_subcommand("ck-extend", "q-analytic extension of a real polynomial in x0");
    common(ck);
    auto* qbin = app.add_subcommand("qbinomial", "expand the complex q-binomial z_q^k");
    common(qbin, false);
    qbin->add_option("--k", o.k, "power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Emitter out(o);
    try {
        const Rational q = Rational::parse(o.q);
        out.value("q", q.to_string());
        int rc = 0;
        if (*ck) rc = cmd_ck_extend(o, out);
        else if (*qbin) rc = cmd_qbinomial(o, out);
        else {
            const QContext ctx(q, o.n);
            out.value("n", o.n);
            if (*harmonic) rc = cmd_check_harmonic(o, ctx, out);
            else if (*monogenic) rc = cmd_check_monogenic(o, ctx, out);
            else if (*conj) rc = cmd_conjugate(o, ctx, out);
            else if (*fischer) rc = cmd_fischer(o, ctx, out);
            else if (*poisson) rc = cmd_poisson(o, ctx, out);
            else if (*kernel) rc = cmd_kernel_basis(o, ctx, out);
        }
        out.flush(std::cout);
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
