#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "base/rng.hpp"
#include "exactalg/cone_series.hpp"
#include "exactalg/laurent.hpp"
#include "exactalg/ratfun.hpp"

using namespace exactalg;

namespace {

Laurent rand_laurent(base::Rng& rng, int rank, int nterms) {
    Laurent a(rank);
    for (int t = 0; t < nterms; ++t) {
        Exp e(1 + rank);
        for (auto& k : e) k = static_cast<int>(rng.uniform(-3, 3));
        a.add_term(e, make_rational(rng.uniform(-5, 5), rng.uniform(1, 4)));
    }
    return a;
}

}  // namespace

TEST_CASE("laurent ring axioms on random triples") {
    base::Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int rank = trial % 2;
        Laurent a = rand_laurent(rng, rank, 3), b = rand_laurent(rng, rank, 3),
                c = rand_laurent(rng, rank, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Laurent::one(rank) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("laurent text form and eval") {
    Laurent a = Laurent::monomial(make_rational(3), 2, {-1});
    a.add_term(Exp{0, 0}, make_rational(1));
    CHECK(a.str() == "1 + 3*v^2*z1^-1");
    CHECK(a.eval(make_rational(2), {make_rational(3)}) == make_rational(3 * 4, 3) + 1);
    CHECK(a.eval_q(make_rational(4), {make_rational(2)}) == make_rational(12, 2) + 1);
}

TEST_CASE("ratfun equality by cross multiplication") {
    Laurent z = Laurent::z(0, 1);
    Laurent one = Laurent::one(1);
    RatFun a(one - z, one);
    RatFun b((one - z) * (one + z), one + z);
    CHECK(a == b);
    RatFun c = a / b;
    CHECK(c == RatFun::one(1));
    CHECK_THROWS_AS(RatFun(one, Laurent::zero(1)), base::Error);
}

TEST_CASE("geometric series expansions") {
    Laurent z = Laurent::z(0, 1);
    Laurent one = Laurent::one(1);
    RatFun f(one, one - z);

    ConeSeries pos = cone_expand(f, Cone::positive(1), 3);
    CHECK(pos.coeff({0}) == RatFun::one(0));
    CHECK(pos.coeff({1}) == RatFun::one(0));
    CHECK(pos.coeff({2}) == RatFun::one(0));
    CHECK(pos.coeff({3}) == RatFun::one(0));
    CHECK(pos.coeffs().size() == 4);

    ConeSeries neg = cone_expand(f, Cone::negative_line(), 3);
    CHECK(neg.coeff({-1}) == -RatFun::one(0));
    CHECK(neg.coeff({-2}) == -RatFun::one(0));
    CHECK(neg.coeff({-3}) == -RatFun::one(0));
    CHECK(neg.coeffs().size() == 3);

    // z^2/(1 - q^-1 z), positive cone, order 4 -> z^2 + q^-1 z^3 + q^-2 z^4
    Laurent qinv = Laurent::monomial(make_rational(1), -2, {0});
    RatFun g(z * z, one - qinv * z);
    ConeSeries s = cone_expand(g, Cone::positive(1), 4);
    CHECK(s.coeffs().size() == 3);
    CHECK(s.coeff({2}) == RatFun::one(0));
    CHECK(s.coeff({3}) == RatFun(Laurent::monomial(make_rational(1), -2, {})));
    CHECK(s.coeff({4}) == RatFun(Laurent::monomial(make_rational(1), -4, {})));
}

TEST_CASE("const_term basics") {
    Laurent z = Laurent::z(0, 1);
    Laurent one = Laurent::one(1);
    ConeSeries pos = cone_expand(RatFun(one, one - z), Cone::positive(1), 5);
    CHECK(pos.const_term() == RatFun::one(0));

    Laurent qinv = Laurent::monomial(make_rational(1), -2, {0});
    ConeSeries s = cone_expand(RatFun(z * z, one - qinv * z), Cone::positive(1), 4);
    CHECK(s.const_term().is_zero());
}

TEST_CASE("opposed-pair window expansion and the double geometric oracle") {
    Rational a = make_rational(1, 3), b = make_rational(2, 5);
    RatFun ar = RatFun::constant(a), br = RatFun::constant(b);
    int order = 6;
    ConeSeries s = cone_expand_opposed(Laurent::one(1), ar, br, order);

    Rational expect_ct = Rational(1) / (Rational(1) - a * b);
    CHECK(s.const_term() == RatFun::constant(expect_ct));

    // oracle: partial double geometric sum plus its exact geometric tail
    const int M = 40;
    for (int k = -order; k <= order; ++k) {
        Rational partial(0);
        for (int j = 0; j <= M; ++j) {
            long n = k >= 0 ? k + j : j;
            long m = n - k;
            partial += rational_pow(a, n) * rational_pow(b, m);
        }
        Rational shell = k >= 0 ? rational_pow(a, k) : rational_pow(b, -k);
        Rational closed = shell / (Rational(1) - a * b);
        Rational tail = shell * rational_pow(a * b, M + 1) / (Rational(1) - a * b);
        CHECK(partial + tail == closed);
        CHECK(s.coeff({k}) == RatFun::constant(closed));
    }
}

TEST_CASE("cone_expand is multiplicative up to shared truncation") {
    base::Rng rng(11);
    Laurent z = Laurent::z(0, 1);
    Laurent one = Laurent::one(1);
    Laurent q = Laurent::q(1);
    for (int trial = 0; trial < 10; ++trial) {
        Laurent n1 = rand_laurent(rng, 1, 2), n2 = rand_laurent(rng, 1, 2);
        if (n1.is_zero() || n2.is_zero()) continue;
        RatFun f(n1, one - q * z);
        RatFun g(n2, one - z * z);
        int ord = 6;
        ConeSeries sf = cone_expand(f, Cone::positive(1), ord + 8);
        ConeSeries sg = cone_expand(g, Cone::positive(1), ord + 8);
        ConeSeries prod = cone_expand(f * g, Cone::positive(1), ord);
        ConeSeries sfg = sf * sg;
        for (int k = -10; k <= ord; ++k) CHECK(prod.coeff({k}) == sfg.coeff({k}));
    }
}

TEST_CASE("const_term is linear and stable under raising the order") {
    Laurent z = Laurent::z(0, 1);
    Laurent one = Laurent::one(1);
    RatFun f(one + z, one - z);
    RatFun g(z, one - z * z);
    for (int ord : {4, 6, 9}) {
        ConeSeries sf = cone_expand(f, Cone::positive(1), ord);
        ConeSeries sg = cone_expand(g, Cone::positive(1), ord);
        ConeSeries sum = sf + sg;
        CHECK(sum.const_term() == sf.const_term() + sg.const_term());
        CHECK(sf.const_term() == cone_expand(f, Cone::positive(1), 12).const_term());
    }
}

TEST_CASE("NotExpandable without a unit part in the cone") {
    Laurent z1 = Laurent::z(0, 2), z2 = Laurent::z(1, 2);
    RatFun f(Laurent::one(2), z1 + z2);
    CHECK_THROWS_AS(cone_expand(f, Cone::positive(2), 4), base::NotExpandable);
    RatFun g(Laurent::one(1), Laurent::one(1) - Laurent::z(0, 1));
    CHECK_THROWS_AS(cone_expand(g, Cone::full_line(), 4), base::NotExpandable);
}
