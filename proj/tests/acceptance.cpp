// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace qclifford;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    // Records a failed check; only the first message is kept.
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

constexpr const char* kU3 = "x0^3 - x0*x1^2 - 47/64*x0*x2^2";

const std::array<Rational, 3> kThreeQ{Rational(4, 3), Rational(3, 2), Rational(2)};

CliffordPolynomial reference_h4(const QContext& ctx) {
    const Rational q = ctx.q();
    return (q_int(4, q) * q_int(3, q)).inverse() * parse_poly("-x1^4 - 47/64*x2^4", ctx);
}

// 1. worked cubic example at q = 4/3, n = 2
Outcome example_cubic() {
    Outcome r;
    const QContext ctx(Rational(4, 3), 2);
    const HomogeneousPolynomial u(parse_poly(kU3, ctx));
    r.require(laplace_full(u.poly()).is_zero(), "(a) U3 is not harmonic");

    const CliffordPolynomial g = partial_q(0, u.poly(), Deformation::inverse_q).at_x0_zero();
    r.require(g == parse_poly("-x1^2 - 47/64*x2^2", ctx), "(b) unexpected right-hand side " + format_poly(g));
    const CliffordPolynomial h4 = reference_h4(ctx);
    r.require(laplace_q(h4) == g, "(b) Laplace_q h4 != g");

    const CliffordPolynomial w = dirac_q(h4);
    r.require(q_int(3, ctx.q()) == Rational(37, 9), "(c) [3]_q != 37/9");
    r.require(w == parse_poly("-9/37*x1^3*e1 - 423/2368*x2^3*e2", ctx), "(c) W = " + format_poly(w));

    const ConjugateResult c = construct_conjugate(u);
    r.require(dirac_full(c.f).is_zero(), "(d) F is not monogenic");
    const ConjugateResult given = construct_conjugate(u, HomogeneousPolynomial(h4, 4));
    r.require(given.w.poly() == w, "(d) W from the given h4 differs");
    r.require(dirac_full(given.f).is_zero(), "(d) F from the given h4 is not monogenic");
    if (r.ok) r.detail = "g = " + format_poly(g) + ", W = " + format_poly(w);
    return r;
}

// 2. squared Dirac operators against Laplacians on every monomial
Outcome operator_identities() {
    Outcome r;
    std::size_t count = 0;
    for (const Rational& q : kThreeQ)
        for (std::size_t n = 1; n <= 4; ++n) {
            const QContext ctx(q, n);
            for (const auto& m : oracle::all_monomials(ctx, 8, true)) {
                r.require(dirac_q(dirac_q(m)) == -laplace_q(m), "D^2 != -Laplace on " + format_poly(m));
                ++count;
            }
            for (const auto& m : oracle::all_monomials(ctx, 8, false)) {
                r.require(dirac_full(dirac_full(m)) == -laplace_full(m), "full D^2 != -Laplace on " + format_poly(m));
                ++count;
            }
        }
    if (r.ok) r.detail = std::to_string(count) + " monomial checks";
    return r;
}

// 3. Fischer inner product, adjointness, decompositions
Outcome fischer_suite() {
    Outcome r;
    std::mt19937 rng(2024);
    std::map<std::tuple<std::string, std::size_t, unsigned>, HarmonicSplitter> harmonic;
    std::map<std::tuple<std::string, std::size_t, unsigned>, MonogenicSplitter> monogenic;
    const std::array<Rational, 3> qs{Rational(4, 3), Rational(2), Rational(1, 2)};
    const int trials = 120;
    std::uniform_int_distribution<std::size_t> pick_q(0, 2), pick_n(1, 3);
    std::uniform_int_distribution<unsigned> pick_k(0, 5);

    for (int t = 0; t < trials; ++t) {
        const QContext ctx(qs[pick_q(rng)], pick_n(rng));
        const unsigned k = pick_k(rng);
        oracle::PolySpec spec{.real = t % 2 == 0};
        HomogeneousPolynomial a(oracle::random_homogeneous(rng, ctx, k, spec), k);
        HomogeneousPolynomial b(oracle::random_homogeneous(rng, ctx, k, spec), k);
        r.require(fischer_ip_coefficients(a, b) == fischer_ip_differential(a, b), "dual formulas disagree");
    }
    for (int t = 0; t < trials; ++t) {
        const QContext ctx(qs[pick_q(rng)], pick_n(rng));
        const unsigned k = pick_k(rng) % 4;
        oracle::PolySpec spec{.real = t % 2 == 0};
        HomogeneousPolynomial qk(oracle::random_homogeneous(rng, ctx, k, spec), k);
        HomogeneousPolynomial pk(oracle::random_homogeneous(rng, ctx, k + 1, spec), k + 1);
        HomogeneousPolynomial rk(oracle::random_homogeneous(rng, ctx, k + 2, spec), k + 2);
        r.require(check_adjointness(qk, pk, rk).holds(), "adjointness fails");
    }
    for (int t = 0; t < trials; ++t) {
        const QContext ctx(qs[pick_q(rng)], pick_n(rng));
        const unsigned k = pick_k(rng);
        const auto key = std::make_tuple(ctx.q().to_string(), ctx.n(), k);
        auto it = harmonic.try_emplace(key, ctx, k).first;
        HomogeneousPolynomial p(oracle::random_homogeneous(rng, ctx, k, {.real = t % 2 == 0}), k);
        HarmonicSplit s = it->second.split(p);
        HomogeneousPolynomial radial(radius_sq(ctx) * s.cofactor.poly(), k);
        r.require(s.harmonic.poly() + radial.poly() == p.poly(), "harmonic split does not reassemble");
        r.require(laplace_q(s.harmonic.poly()).is_zero(), "harmonic part not harmonic");
        r.require(fischer_ip(s.harmonic, radial).is_zero(), "harmonic split not orthogonal");
    }
    for (int t = 0; t < trials; ++t) {
        const QContext ctx(qs[pick_q(rng)], pick_n(rng));
        const unsigned k = pick_k(rng);
        const auto key = std::make_tuple(ctx.q().to_string(), ctx.n(), k);
        auto it = monogenic.try_emplace(key, ctx, k).first;
        HomogeneousPolynomial p(oracle::random_homogeneous(rng, ctx, k, {.real = t % 3 == 0, .with_e0 = t % 4 == 1}), k);
        MonogenicSplit s = it->second.split(p);
        HomogeneousPolynomial xq(vector_x(ctx) * s.cofactor.poly(), k);
        r.require(s.monogenic.poly() + xq.poly() == p.poly(), "monogenic split does not reassemble");
        r.require(dirac_q(s.monogenic.poly()).is_zero(), "monogenic part not monogenic");
        r.require(fischer_ip(s.monogenic, xq).is_zero(), "monogenic split not orthogonal");
    }
    if (r.ok) r.detail = std::to_string(trials) + " inputs per property";
    return r;
}

// 4. q-Poisson solver
Outcome poisson_suite() {
    Outcome r;
    std::mt19937 rng(77);
    const int trials = 120;
    for (int t = 0; t < trials; ++t) {
        const QContext ctx(t % 2 ? Rational(4, 3) : Rational(2), 1 + t % 3);
        const unsigned d = t % 6;
        HomogeneousPolynomial g(oracle::random_homogeneous(rng, ctx, d, {.real = t % 3 != 0}), d);
        PoissonSolution s = solve_q_poisson_factored(g);
        r.require(laplace_q(s.h.poly()) == g.poly(), "Laplace_q h != g");
        r.require(s.h.poly() == radius_sq(ctx) * s.cofactor.poly(), "h not in |x|^2 P");
        r.require(decompose_harmonic(s.h).harmonic.poly().is_zero(), "h has a harmonic component");
    }
    if (r.ok) r.detail = std::to_string(trials) + " right-hand sides";
    return r;
}

// 5. conjugation on every harmonic basis element
Outcome conjugation_pipeline() {
    Outcome r;
    std::size_t count = 0;
    for (const Rational& q : kThreeQ)
        for (std::size_t n = 1; n <= 3; ++n) {
            const QContext ctx(q, n);
            for (unsigned k = 0; k <= 5; ++k)
                for (const auto& u : kernel_basis(ctx, KernelOperator::laplace_full, k)) {
                    ++count;
                    const ConjugateResult c = construct_conjugate(u);
                    const std::string where = " for " + format_poly(u.poly());
                    MonogenicCheck m = check_monogenic_full(c.f);
                    r.require(m.monogenic, "F not monogenic" + where);
                    r.require(m.first_system.is_zero() && m.second_system.is_zero(), "system fails" + where);
                    r.require(laplace_full(c.h_potential.poly()).is_zero(), "H not harmonic" + where);
                    r.require(c.f == dirac_full(ebar0() * c.h_potential.poly()), "F != D(conj(e0) H)" + where);
                }
        }
    if (r.ok) r.detail = std::to_string(count) + " kernel elements";
    return r;
}

// 6. q = 1 against classical derivatives and the classical harmonic projection
Outcome classical_limit() {
    Outcome r;
    for (std::size_t n = 1; n <= 3; ++n) {
        const QContext ctx(Rational(1), n);
        for (const auto& m : oracle::all_monomials(ctx, 6, false)) {
            for (std::size_t i = 0; i <= n; ++i) {
                r.require(partial_q(i, m) == oracle::classical_partial(i, m), "partial_q");
                r.require(partial_q(i, m, Deformation::inverse_q) == oracle::classical_partial(i, m), "partial_{1/q}");
                r.require(i == 0 || gamma_scale(i, m) == m, "gamma_scale");
            }
            r.require(dirac_q(m) == oracle::classical_dirac(m), "dirac_q");
            r.require(dirac_full(m) == oracle::classical_dirac_full(m), "dirac_full");
            r.require(laplace_q(m) == oracle::classical_laplace(m), "laplace_q");
            r.require(laplace_full(m) == oracle::classical_laplace_full(m), "laplace_full");
            r.require(antiderivative_x0(oracle::classical_partial(0, m)) == m - m.at_x0_zero(), "antiderivative");
        }
        for (unsigned k = 0; k <= 4; ++k) {
            const auto basis = MonomialBasis::xbar(ctx, k);
            for (const auto& a : basis.indices()) {
                HomogeneousPolynomial p(CliffordPolynomial::monomial(ctx, a), k);
                r.require(decompose_harmonic(p).harmonic.poly() == oracle::classical_harmonic_projection(p.poly(), k),
                          "harmonic projection of " + format_poly(p.poly()));
            }
        }
    }
    return r;
}

// 7. q-analytic extension of x^n
Outcome qcomplex_suite() {
    Outcome r;
    for (Rational q : {Rational(1, 2), Rational(2, 3)})
        for (unsigned n = 0; n <= 10; ++n) {
            RealPolynomial xn(n + 1);
            xn[n] = 1;
            const ComplexQPolynomial ext = ck_extend(xn, q);
            const ComplexQPolynomial prod = q_binomial_z(n, q);
            r.require(ext == prod, "extension of x^" + std::to_string(n) + " differs from product");
            r.require(dbar_q(ext).is_zero() && dbar_q(prod).is_zero(), "dbar_q does not annihilate x^" + std::to_string(n));
        }
    return r;
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    std::string cmd = std::string(QCLIFFORD_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Parses every polynomial-valued key and checks the bytes survive a round trip.
bool reparses_exactly(const nlohmann::json& doc, const QContext& ctx) {
    for (const char* key : {"U", "V", "W", "h", "H", "F"}) {
        if (!doc.contains(key)) return false;
        if (poly_to_json(poly_from_json(doc[key], ctx)).dump() != doc[key].dump()) return false;
    }
    return true;
}

// 8. CLI end to end
Outcome cli_suite() {
    Outcome r;
    const std::string u3 = std::string("'") + kU3 + "'";
    const QContext ctx(Rational(4, 3), 2);

    r.require(run_cli("check-harmonic --q 4/3 --n 2 --poly " + u3).code == 0, "check-harmonic U3 exit code");
    Run bad = run_cli("check-harmonic --q 4/3 --n 2 --poly x0^2");
    r.require(bad.code == 1, "check-harmonic x0^2 exit code");
    r.require(bad.out.find("residual: 7/4") != std::string::npos, "residual not printed");
    r.require(run_cli("check-harmonic --q 4/3 --n 2 --poly 'x0 +'").code == 2, "parse error exit code");

    Run def = run_cli("conjugate --q 4/3 --n 2 --format json --poly " + u3);
    r.require(def.code == 0, "conjugate exit code");
    if (def.code == 0) {
        auto doc = nlohmann::json::parse(def.out);
        r.require(reparses_exactly(doc, ctx), "conjugate JSON does not re-parse exactly");
        const CliffordPolynomial w = poly_from_json(doc["W"], ctx);
        r.require(dirac_q(w) == parse_poly("x1^2 + 47/64*x2^2", ctx), "default W violates D W = -g");
        r.require(doc["monogenic"] == true, "conjugate verdict");
    }

    Run given = run_cli("conjugate --q 4/3 --n 2 --format json --poly " + u3 + " --poisson '" +
                        format_poly(reference_h4(ctx)) + "'");
    r.require(given.code == 0, "conjugate --poisson exit code");
    if (given.code == 0) {
        auto doc = nlohmann::json::parse(given.out);
        r.require(reparses_exactly(doc, ctx), "conjugate --poisson JSON does not re-parse exactly");
        r.require(poly_from_json(doc["W"], ctx) == parse_poly("-9/37*x1^3*e1 - 423/2368*x2^3*e2", ctx),
                  "W with the given h4 is " + format_poly(poly_from_json(doc["W"], ctx)));
    }
    if (r.ok) r.detail = "exit codes 0/1/2, W = -9/37*x1^3*e1 - 423/2368*x2^3*e2 via --poisson";
    return r;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked cubic example", 1.0, example_cubic},
        {2, "operator identities", 10.0, operator_identities},
        {3, "Fischer suite", 30.0, fischer_suite},
        {4, "q-Poisson solver", 0.0, poisson_suite},
        {5, "conjugation pipeline", 120.0, conjugation_pipeline},
        {6, "classical degeneration", 0.0, classical_limit},
        {7, "q-complex extension", 0.0, qcomplex_suite},
        {8, "CLI end to end", 0.0, cli_suite},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.ok = false;
            o.detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        all = all && o.ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "criterion " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " [" << c.name << "] " << secs << " s";
        if (!o.detail.empty()) line << " - " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
