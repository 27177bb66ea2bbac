#include "oracles.hpp"

#include <gtest/gtest.h>


using namespace qclifford;

namespace {

const QContext kCtx(Rational(4, 3), 2);

std::size_t error_position(std::string_view text, const QContext& ctx = kCtx) {
    try {
        parse_poly(text, ctx);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for '" << text << "'";
    return std::string::npos;
}

} // namespace

TEST(Parse, Examples) {
    auto u3 = parse_poly("x0^3 - x0*x1^2 - 47/64*x0*x2^2", kCtx);
    EXPECT_EQ(u3.terms().size(), 3u);
    EXPECT_EQ(u3.coefficient(MultiIndex{1, 0, 2}), CliffordElement(Rational(-47, 64)));
    EXPECT_EQ(parse_poly("1", kCtx), CliffordPolynomial::constant(kCtx, 1));

    auto t = parse_poly("3/4 * x1 * e12", kCtx);
    ASSERT_EQ(t.terms().size(), 1u);
    EXPECT_EQ(t.coefficient(MultiIndex{0, 1, 0}), CliffordElement(Blade::parse("e12"), Rational(3, 4)));
}

TEST(Parse, WhitespaceAndImplicitProducts) {
    EXPECT_EQ(parse_poly("  x1 x2  ", kCtx), parse_poly("x1*x2", kCtx));
    EXPECT_EQ(parse_poly("2 x1 ^ 2", kCtx), parse_poly("2*x1^2", kCtx));
    EXPECT_EQ(parse_poly("-x1 + x1", kCtx), CliffordPolynomial(kCtx));
    EXPECT_EQ(parse_poly("x1*x1", kCtx), parse_poly("x1^2", kCtx));
    // blades multiply in order: e2 e1 = -e12
    EXPECT_EQ(parse_poly("e2*e1", kCtx), parse_poly("-e12", kCtx));
    EXPECT_EQ(parse_poly("e1 e1", kCtx), parse_poly("-1", kCtx));
    EXPECT_EQ(parse_poly("10/4", kCtx), parse_poly("5/2", kCtx));
}

TEST(Parse, Errors) {
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("x1 +"), 4u);
    EXPECT_EQ(error_position("x1 ? x2"), 3u);
    EXPECT_EQ(error_position("x3"), 0u);
    EXPECT_EQ(error_position("2*e21"), 2u);
    EXPECT_EQ(error_position("e13"), 0u);
    EXPECT_EQ(error_position("1/0"), 2u);
    EXPECT_EQ(error_position("x1^"), 3u);
    EXPECT_EQ(error_position("x1*"), 3u);
    EXPECT_EQ(error_position("1.5"), 1u);
    EXPECT_THROW(parse_poly("e11", kCtx), ParseError);
}

TEST(Format, Examples) {
    EXPECT_EQ(format_poly(parse_poly("x0^3 - x0*x1^2 - 47/64*x0*x2^2", kCtx)), "x0^3 - x0*x1^2 - 47/64*x0*x2^2");
    EXPECT_EQ(format_poly(CliffordPolynomial(kCtx)), "0");
    EXPECT_EQ(format_poly(parse_poly("-3", kCtx)), "-3");
    EXPECT_EQ(format_poly(parse_poly("3/4 x1 e12", kCtx)), "3/4*x1*e12");
    EXPECT_EQ(format_poly(parse_poly("e1 - x2^2*e2 + x2^2", kCtx)), "x2^2 - x2^2*e2 + e1");
}

TEST(Format, RoundTripRandom) {
    std::mt19937 rng(31);
    for (int t = 0; t < 200; ++t) {
        QContext ctx(Rational(3, 2), 1 + t % 4);
        auto p = oracle::random_homogeneous(rng, ctx, t % 5, {.xbar_only = t % 2 == 0, .real = t % 3 == 0, .with_e0 = true});
        p += oracle::random_homogeneous(rng, ctx, t % 3, {.xbar_only = false, .real = false, .with_e0 = true});
        const std::string text = format_poly(p);
        auto back = parse_poly(text, ctx);
        ASSERT_EQ(back, p) << text;
        ASSERT_EQ(format_poly(back), text);
    }
}

TEST(Json, RoundTripRandom) {
    std::mt19937 rng(32);
    for (int t = 0; t < 200; ++t) {
        QContext ctx(Rational(2), 1 + t % 3);
        auto p = oracle::random_homogeneous(rng, ctx, t % 5, {.xbar_only = false, .real = false, .with_e0 = true});
        auto j = poly_to_json(p);
        auto text = j.dump();
        ASSERT_EQ(poly_from_json(nlohmann::json::parse(text), ctx), p) << text;
        ASSERT_EQ(poly_to_json(poly_from_json(j, ctx)).dump(), text);
    }
}

TEST(Json, Shape) {
    auto j = poly_to_json(parse_poly("-47/64*x0*x2^2*e1 + 2", kCtx));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["alpha"], nlohmann::json::array({1, 0, 2}));
    EXPECT_EQ(j[0]["blade"], "e1");
    EXPECT_EQ(j[0]["coeff"], "-47/64");
    EXPECT_EQ(j[1]["blade"], "1");
    EXPECT_EQ(j[1]["coeff"], "2");
}

TEST(Json, InputForms) {
    auto p = parse_poly("x1 - 1/2*e2", kCtx);
    EXPECT_EQ(read_poly(poly_to_json(p).dump(), kCtx), p);
    EXPECT_EQ(read_poly(nlohmann::json{{"terms", poly_to_json(p)}}.dump(), kCtx), p);
    EXPECT_EQ(read_poly(nlohmann::json{{"poly", poly_to_json(p)}}.dump(), kCtx), p);
    EXPECT_EQ(read_poly(R"([{"alpha":[0,1,0],"coeff":3}])", kCtx), parse_poly("3*x1", kCtx));
    EXPECT_EQ(read_poly("  x1 - 1/2*e2", kCtx), p);
    EXPECT_THROW(read_poly(R"([{"alpha":[0,1],"coeff":"1"}])", kCtx), std::invalid_argument);
    EXPECT_THROW(read_poly(R"([{"alpha":[0,1,0],"blade":"e3","coeff":"1"}])", kCtx), std::invalid_argument);
    EXPECT_THROW(read_poly(R"({"nothing":1})", kCtx), std::invalid_argument);
    EXPECT_THROW(read_poly("[1,", kCtx), nlohmann::json::parse_error);
}

TEST(Complex, JsonAndText) {
    auto p = q_binomial_z(2, Rational(1, 2));
    auto j = complex_to_json(p);
    EXPECT_EQ(complex_from_json(nlohmann::json::parse(j.dump()), Rational(1, 2)), p);
    EXPECT_EQ(format_complex(p), "(1)*x^2 + (0 + 3/2i)*x*y + (-1/2)*y^2");
    EXPECT_EQ(format_complex(ComplexQPolynomial(Rational(2))), "0");
}

TEST(Univariate, Conversion) {
    QContext ctx(Rational(1, 2), 1);
    auto f = to_real_univariate(parse_poly("3*x0^2 - 1", ctx));
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], Rational(-1));
    EXPECT_EQ(f[1], Rational(0));
    EXPECT_EQ(f[2], Rational(3));
    EXPECT_THROW(to_real_univariate(parse_poly("x1", ctx)), std::invalid_argument);
    EXPECT_THROW(to_real_univariate(parse_poly("x0*e1", ctx)), std::invalid_argument);
}
