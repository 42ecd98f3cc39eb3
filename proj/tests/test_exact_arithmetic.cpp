#include <catch2/catch_amalgamated.hpp>

#include "harper/monomial.hpp"

using namespace harper;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(7, 3).mod1() == Rational(1, 3));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK(root_of_unity_order(Rational(5, 10)) == 2);
    CHECK(root_of_unity_order(Rational(2)) == 1);
}

TEST_CASE("monomial product and adjoint") {
    UnitaryMonomial A = UnitaryMonomial::generator(3, 0);
    // A * A^* is the identity monomial
    CHECK(mono_mul(A, mono_adjoint(A)).is_one());
    UnitaryMonomial m(Rational(1, 3), {1, -2, 0});
    UnitaryMonomial mm = mono_mul(m, m);
    CHECK(mm.phase == Rational(2, 3));
    CHECK(mm.exponent == std::vector<long long>{2, -4, 0});
    CHECK_THROWS(mono_mul(A, UnitaryMonomial::one(2)));
}

TEST_CASE("monomial evaluation, exact and floating") {
    // phase 1/2 negates the plain monomial value
    UnitaryMonomial plain(Rational(0), {1, 0});
    UnitaryMonomial flipped(Rational(1, 2), {1, 0});
    TorusPoint t = TorusPoint::turns(std::vector<Rational>{Rational(1, 8), Rational(0)});
    CHECK(std::abs(mono_eval(flipped, t) + mono_eval(plain, t)) < 1e-15);
    // exact evaluation returns the right root of unity
    CHECK(mono_eval_turns(plain, {Rational(1, 8), Rational(0)}) == Rational(1, 8));
    CHECK(mono_eval_turns(UnitaryMonomial(Rational(1, 4), {2, 3}),
                          {Rational(1, 8), Rational(1, 3)}) == Rational(1, 2));
    // float evaluation agrees with exact
    TorusPoint tf = TorusPoint::turns(std::vector<double>{0.125, 0.0});
    CHECK(std::abs(mono_eval(plain, t) - mono_eval(plain, tf)) < 1e-15);
}

TEST_CASE("torus point normalization") {
    TorusPoint p = TorusPoint::turns(std::vector<Rational>{Rational(-1, 4), Rational(5, 4)});
    CHECK(p.turns_exact()[0] == Rational(3, 4));
    CHECK(p.turns_exact()[1] == Rational(1, 4));
    TorusPoint r = TorusPoint::radians({std::numbers::pi});
    CHECK(std::abs(r.turns_d()[0] - 0.5) < 1e-15);
}

TEST_CASE("torus polynomial canonical ring operations") {
    const int n = 3;
    TorusPolynomial p = TorusPolynomial::one(n);
    for (int i = 0; i < n; ++i) p = p + TorusPolynomial::from_mono(UnitaryMonomial::generator(n, i));
    // 1 + A + B + C at t = 0 evaluates to 4
    CHECK(std::abs(poly_eval(p, TorusPoint::turns(std::vector<double>(n, 0.0))) - 4.0) < 1e-14);
    // A + A^* at (a, ., .) is 2 cos(2 pi a)
    TorusPolynomial q = TorusPolynomial::from_mono(UnitaryMonomial::generator(n, 0));
    q = q + q.adjoint();
    double a = 0.3173;
    Complex v = poly_eval(q, TorusPoint::turns(std::vector<double>{a, 0.1, 0.9}));
    CHECK(std::abs(v - Complex(2 * std::cos(2 * std::numbers::pi * a), 0)) < 1e-13);
    // cancellation drops terms entirely
    TorusPolynomial z = q - q;
    CHECK(z.is_zero());
    // product rule on exponents
    TorusPolynomial ab = TorusPolynomial::from_mono(UnitaryMonomial::generator(n, 0)) *
                         TorusPolynomial::from_mono(UnitaryMonomial::generator(n, 1));
    CHECK(ab.terms().size() == 1);
    CHECK(ab.terms().begin()->first == std::vector<long long>{1, 1, 0});
    // adjoint conjugates coefficients and negates exponents
    TorusPolynomial w = TorusPolynomial::from_mono(UnitaryMonomial(Rational(1, 4), {1, 0, 0}));
    TorusPolynomial wadj = w.adjoint();
    CHECK(wadj.terms().begin()->first == std::vector<long long>{-1, 0, 0});
    CHECK((w * wadj).approx_equal(TorusPolynomial::one(n)));
}
