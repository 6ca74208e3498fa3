#include <algorithm>
#include <random>

#include "doctest.h"
#include "rmap/errors.hpp"
#include "rmap/fixtures.hpp"
#include "rmap/polynomial.hpp"
#include "rmap/rational.hpp"

using namespace rmap;

namespace {

// Independent oracle: real roots of a real polynomial by sign-change
// bisection on a fine grid.
std::vector<double> bisect_real_roots(const Polynomial& p, double lo, double hi, int grid) {
    auto val = [&](double x) { return p(Cx(x, 0.0)).real(); };
    std::vector<double> found;
    double prev = val(lo);
    for (int i = 1; i <= grid; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double cur = val(x);
        if (prev == 0.0) found.push_back(lo + (hi - lo) * (i - 1) / grid);
        if (prev * cur < 0.0) {
            double a = lo + (hi - lo) * (i - 1) / grid, b = x;
            for (int k = 0; k < 200; ++k) {
                const double mid = 0.5 * (a + b);
                if (val(a) * val(mid) <= 0.0)
                    b = mid;
                else
                    a = mid;
            }
            found.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return found;
}

} // namespace

TEST_CASE("derivative basics") {
    Polynomial p = Polynomial::from_real({0, 0, 0, 1}); // z^3
    auto d = p.derivative();
    CHECK(d.degree() == 2);
    CHECK(d.coeffs()[2] == Cx(3.0));

    CHECK(Polynomial::from_real({5}).derivative().is_zero());

    Polynomial q = Polynomial::from_real({0, -5, 0, 0, 0, 1}); // z^5 - 5z
    auto dq = q.derivative();                                  // 5z^4 - 5
    CHECK(dq.degree() == 4);
    CHECK(dq.coeffs()[0] == Cx(-5.0));
    CHECK(dq.coeffs()[4] == Cx(5.0));
}

TEST_CASE("roots of simple polynomials") {
    auto r = roots(Polynomial::from_real({-1, 0, 1})); // z^2 - 1
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 1);
    CHECK(std::abs(r[0].root - Cx(-1.0)) < 1e-10);
    CHECK(std::abs(r[1].root - Cx(1.0)) < 1e-10);
}

TEST_CASE("triple root is quantized") {
    // (z-2)^3 = z^3 - 6z^2 + 12z - 8
    auto r = roots(Polynomial::from_real({-8, 12, -6, 1}));
    REQUIRE(r.size() == 1);
    CHECK(r[0].multiplicity == 3);
    CHECK(std::abs(r[0].root - Cx(2.0)) < 1e-9);
}

TEST_CASE("derivative numerator of the degree-5 example has five simple real roots") {
    RationalFunction f = fixtures::deg5_function();
    Polynomial d = derivative_numerator(f);
    auto r = roots(d);
    REQUIRE(r.size() == 5);
    for (const auto& rc : r) {
        CHECK(rc.multiplicity == 1);
        CHECK(std::abs(rc.root.imag()) < 1e-9);
    }
    // Bisection oracle agrees.
    auto oracle = bisect_real_roots(d, -10.0, 10.0, 4000);
    REQUIRE(oracle.size() == 5);
    for (size_t i = 0; i < 5; ++i) CHECK(std::abs(r[i].root.real() - oracle[i]) < 1e-8);
}

TEST_CASE("root product reconstructs monic polynomial") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 2 + int(rng() % 9);
        std::vector<Cx> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.push_back(Cx(box(rng), box(rng)));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() += Cx(0.5);
        Polynomial p(coeffs);
        auto rs = roots(p);
        std::vector<Cx> expanded;
        for (const auto& rc : rs)
            for (int k = 0; k < rc.multiplicity; ++k) expanded.push_back(rc.root);
        REQUIRE(int(expanded.size()) == p.degree());
        Polynomial back = Polynomial::from_roots(expanded, p.lead());
        for (int i = 0; i <= p.degree(); ++i)
            CHECK(std::abs(back.coeffs()[i] - p.coeffs()[i]) <= 1e-6 * (1.0 + p.coeff_scale()));
    }
}

TEST_CASE("rational evaluation in both charts") {
    Polynomial num = Polynomial::from_real({0, 0, 1}); // z^2
    RationalFunction sq(num, Polynomial::from_real({1}));
    CHECK(eval(sq, SpherePoint(Cx(3.0))).value == Cx(9.0));

    RationalFunction inv(Polynomial::from_real({1}), Polynomial::from_real({0, 0, 1}));
    CHECK(eval(inv, SpherePoint(Cx(0.0))).is_infinity());

    RationalFunction f = fixtures::deg5_function();
    CHECK(eval(f, SpherePoint::infinity()).is_infinity());
    CHECK(f.local_degree_at_infinity() == 4);
}

TEST_CASE("chart consistency near the switch radius") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Cx> nc, dc;
        for (int i = 0; i < 4; ++i) nc.push_back(Cx(box(rng), box(rng)));
        for (int i = 0; i < 3; ++i) dc.push_back(Cx(box(rng), box(rng)));
        nc.back() += Cx(1.0);
        dc.back() += Cx(1.0);
        RationalFunction f{Polynomial(nc), Polynomial(dc)};
        const Cx z = std::polar(2.0 + box(rng), box(rng) * 3.0);
        // Direct quotient vs reversed-polynomial route.
        const Cx direct = f.num()(z) / f.den()(z);
        const Cx t = Cx(1.0) / z;
        const Cx via_rev = f.num_rev()(t) / f.den_rev()(t);
        CHECK(std::abs(direct - via_rev) <= 1e-10 * std::abs(direct));
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(RationalFunction(Polynomial::from_real({0, 1}), Polynomial::from_real({1})),
                    DegenerateFunction);
    CHECK_THROWS_AS(RationalFunction(Polynomial::from_real({0, 0, 1}),
                                     Polynomial::from_real({0, 1})),
                    DegenerateFunction); // shared root at 0
}
