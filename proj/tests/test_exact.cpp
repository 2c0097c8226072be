#include <doctest.h>

#include <algorithm>
#include <random>

#include "logbehave/poly.hpp"
#include "logbehave/ratfun.hpp"
#include "logbehave/ray.hpp"
#include "logbehave/series.hpp"
#include "logbehave/sturm.hpp"

using namespace logbehave;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return Rat(num(rng), den(rng));
}

Quad random_quad(long d) {
    return Quad(random_rat(), random_rat(), d);
}

PolyQ poly(std::initializer_list<long> cs) {
    std::vector<Quad> v;
    for (long c : cs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

}  // namespace

TEST_CASE("Rat canonical form and arithmetic") {
    Rat a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat::parse("1.5") == Rat(3, 2));
    CHECK(Rat::parse("-7/2") == Rat(-7, 2));
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("field laws on random rationals and quadratic elements") {
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Rat(1));
    }
    for (long d : {2L, 5L}) {
        for (int i = 0; i < 100; ++i) {
            Quad x = random_quad(d), y = random_quad(d), z = random_quad(d);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            if (!x.is_zero()) CHECK(x * x.inv() == Quad(1));
        }
    }
}

TEST_CASE("quad_sign decides exactly") {
    CHECK(quad_sign(Quad(Rat(1), Rat(1), 2)) == 1);
    // 3 - 2 sqrt 2: compare 9 against 8
    CHECK(quad_sign(Quad(Rat(3), Rat(-2), 2)) == 1);
    // 2 - 2 sqrt 2: compare 4 against 8
    CHECK(quad_sign(Quad(Rat(2), Rat(-2), 2)) == -1);
    CHECK(quad_sign(Quad(Rat(0))) == 0);
    // sqrt(4) would not be squarefree; 1 folds into the rational part
    CHECK(Quad(Rat(0), Rat(3), 1) == Quad(Rat(3)));
    CHECK_THROWS(Quad(Rat(0), Rat(1), 4));
    CHECK_THROWS(Quad::sqrt_of(2) + Quad::sqrt_of(5));
    for (int i = 0; i < 100; ++i) {
        Quad x = random_quad(5);
        if (!x.is_zero()) CHECK(quad_sign(x) * quad_sign(-x) == -1);
    }
}

TEST_CASE("poly_shift is the exact binomial expansion") {
    CHECK(poly_shift(poly({0, 0, 1}), Rat(1)) == poly({1, 2, 1}));
    CHECK(poly_shift(poly({-6, 1}), Rat(6)) == poly({0, 1}));
    // 1.5x^2 + 61.5x + 117 shifted by 1 -> 1.5x^2 + 64.5x + 180
    PolyQ p({Quad(Rat(117)), Quad(Rat(123, 2)), Quad(Rat(3, 2))});
    CHECK(poly_shift(p, Rat(1)) ==
          PolyQ({Quad(Rat(180)), Quad(Rat(129, 2)), Quad(Rat(3, 2))}));
    for (int i = 0; i < 50; ++i) {
        std::vector<Quad> cs;
        for (int j = 0; j < 6; ++j) cs.push_back(Quad(random_rat()));
        PolyQ q(cs);
        Rat c = random_rat();
        CHECK(poly_shift(poly_shift(q, c), -c) == q);
    }
}

TEST_CASE("polynomial division and gcd") {
    PolyQ a = poly({-1, 0, 1});           // x^2 - 1
    PolyQ b = poly({1, 1});               // x + 1
    auto [q, r] = PolyQ::divmod(a, b);
    CHECK(q == poly({-1, 1}));
    CHECK(r.is_zero());
    CHECK(PolyQ::gcd(a, b) == b.monic());
    CHECK((a * b % a).is_zero());
}

TEST_CASE("RatFun stays reduced with monic denominator") {
    RatFun f(poly({0, 2}), poly({0, 0, 4}));  // 2x / 4x^2 = 1/(2x)
    CHECK(f.num() == PolyQ(Quad(Rat(1, 2))));
    CHECK(f.den() == poly({0, 1}));
    for (int i = 0; i < 40; ++i) {
        RatFun g(poly({1, 1}) * PolyQ(Quad(random_rat())), poly({-2, 1}));
        RatFun h(poly({0, 1}), poly({3, 1}));
        RatFun sum = g + h, prod = g * h;
        for (const RatFun& x : {sum, prod})
            CHECK(PolyQ::gcd(x.num(), x.den()).degree() == 0);
    }
    // derivative identity (p/q)' q^2 = p'q - pq' at random points
    RatFun f2(poly({1, 3, 2}), poly({5, 0, 1}));
    RatFun d = f2.derivative();
    for (int i = 0; i < 20; ++i) {
        Quad x{random_rat()};
        Quad q2 = f2.den()(x) * f2.den()(x);
        if (q2.is_zero() || d.den()(x).is_zero()) continue;
        Quad lhs = d(x) * q2;
        Quad rhs = f2.num().derivative()(x) * f2.den()(x) -
                   f2.num()(x) * f2.den().derivative()(x);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("series_exp via the differential identity") {
    SeriesQ x(4, {Rat(0), Rat(1)});
    SeriesQ e = series_exp(x);
    CHECK(e.coeff(0) == Rat(1));
    CHECK(e.coeff(1) == Rat(1));
    CHECK(e.coeff(2) == Rat(1, 2));
    CHECK(e.coeff(3) == Rat(1, 6));
    CHECK(e.coeff(4) == Rat(1, 24));

    // a = e^x - 1 gives n!-scaled Bell numbers 1,1,2,5,15,52
    SeriesQ a(5);
    Rat fact(1);
    for (int k = 1; k <= 5; ++k) {
        fact *= Rat(k);
        a.coeff(k) = Rat(1) / fact;
    }
    SeriesQ bell = series_exp(a);
    std::vector<long> expect{1, 1, 2, 5, 15, 52};
    fact = Rat(1);
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) fact *= Rat(n);
        CHECK(bell.coeff(n) * fact == Rat(expect[n]));
    }

    CHECK(series_exp(SeriesQ(3)).coeff(0) == Rat(1));
    CHECK_THROWS(series_exp(SeriesQ(3, {Rat(1)})));

    // exp(a+b) = exp(a) exp(b) at matching truncation order
    for (int i = 0; i < 20; ++i) {
        SeriesQ u(8), v(8);
        for (int k = 1; k <= 8; ++k) {
            u.coeff(k) = random_rat();
            v.coeff(k) = random_rat();
        }
        CHECK(series_exp(u + v) == series_exp(u) * series_exp(v));
    }
}

TEST_CASE("ray_positive: certificate polynomials and controls") {
    // 1.5x^2 + 61.5x + 117 >= 0 for x >= 1
    PolyQ p1({Quad(Rat(117)), Quad(Rat(123, 2)), Quad(Rat(3, 2))});
    RayVerdict v1 = ray_positive(p1, Rat(1));
    CHECK(v1.proved());
    CHECK(v1.shift_used.has_value());

    PolyQ p2 = poly({650, -1021, 643});
    CHECK(ray_positive(p2, Rat(1)).proved());

    RayVerdict v3 = ray_positive(poly({-5, 1}), Rat(1));
    CHECK(v3.status == Verdict::Disproved);
    CHECK(*v3.witness == Rat(1));

    // needs a shift: negative dip below the ray start is fine
    PolyQ dip = poly({2, -4, 1});  // roots 2 +- sqrt 2
    RayVerdict v4 = ray_positive(dip, Rat(4));
    CHECK(v4.proved());
    // but from 1 the dip is inside the ray
    CHECK(ray_positive(dip, Rat(1)).status == Verdict::Disproved);

    // a non-integer dip cannot be shift-proved and must not be Proved:
    // (x - 3/2)^2 - 1/100 is negative only on (1.4, 1.6)
    PolyQ tiny({Quad(Rat(56, 25)), Quad(Rat(-3)), Quad(Rat(1))});
    RayVerdict v5 = ray_positive(tiny, Rat(1));
    CHECK(v5.status == Verdict::Inconclusive);

    CHECK_THROWS(ray_positive(PolyQ(), Rat(0), true));
    CHECK(ray_positive(PolyQ(), Rat(0), false).proved());

    // quadratic-field coefficients decide exactly
    PolyQ quad({Quad(Rat(126), Rat(54), 5), Quad(Rat(-1023), Rat(-438), 5),
                Quad(Rat(1694), Rat(764), 5), Quad(Rat(-482), Rat(-242), 5),
                Quad(Rat(60), Rat(12), 5)});
    CHECK(ray_positive(quad, Rat(6)).proved());
}

TEST_CASE("ray_positive Proved implies nonnegativity on sampled points") {
    PolyQ p({Quad(Rat(117)), Quad(Rat(123, 2)), Quad(Rat(3, 2))});
    RayVerdict v = ray_positive(p, Rat(1));
    REQUIRE(v.proved());
    std::uniform_int_distribution<long> num(0, 4000), den(1, 9);
    for (int i = 0; i < 1000; ++i) {
        Rat x = Rat(1) + Rat(num(rng), den(rng));
        CHECK(p(Quad(x)).sign() >= 0);
    }
}

TEST_CASE("ray_positive agrees with constructively known positivity") {
    // p = leading * prod (x - r_i) * (x^2 + 1): positive exactly beyond the
    // largest real root when every real root is simple
    std::uniform_int_distribution<long> root(-8, 8), nroots(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int k = static_cast<int>(nroots(rng));
        std::vector<long> roots;
        PolyQ p(Quad(Rat(1 + trial % 3)));
        long maxroot = -100;
        for (int i = 0; i < k; ++i) {
            long r = root(rng);
            if (std::find(roots.begin(), roots.end(), r) != roots.end())
                continue;  // keep the roots simple
            roots.push_back(r);
            maxroot = std::max(maxroot, r);
            p *= PolyQ({Quad(Rat(-r)), Quad(1)});
        }
        p *= PolyQ({Quad(1), Quad(0), Quad(1)});
        RayVerdict above = ray_positive(p, Rat(maxroot + 1));
        CHECK(above.proved());
        // strictly inside the sign-changing region the scan finds a witness
        if (roots.size() >= 2) {
            std::sort(roots.begin(), roots.end());
            long a = roots[roots.size() - 2], b = roots.back();
            if (b - a >= 2) {
                RayVerdict inside = ray_positive(p, Rat(a + 1));
                CHECK(inside.status == Verdict::Disproved);
            }
        }
        // and Proved of the strict query implies a root-free ray over Q
        RayVerdict strict = ray_positive(p, Rat(maxroot + 1), true);
        if (strict.proved())
            CHECK(sturm_root_count(p, Rat(maxroot + 1), Rat(maxroot + 2000)) == 0);
    }
}

TEST_CASE("sturm_root_count") {
    CHECK(sturm_root_count(poly({-2, 0, 1}), Rat(0), Rat(2)) == 1);
    CHECK(sturm_root_count(poly({1, 0, 1}), Rat(-10), Rat(10)) == 0);
    CHECK(sturm_root_count(poly({650, -1021, 643}), Rat(0), Rat(100)) == 0);
    // repeated factors are removed internally
    CHECK(sturm_root_count(poly({1, 2, 1}) * poly({-3, 1}), Rat(-5), Rat(5)) == 2);
    PolyQ with_radical({Quad(Rat(0), Rat(1), 5), Quad(1)});
    CHECK_THROWS(sturm_root_count(with_radical, Rat(0), Rat(1)));
}
