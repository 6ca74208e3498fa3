#include "rmap/trace.hpp"
#include "rmap/labelling.hpp"
#include <cmath>

#include "doctest.h"
#include "rmap/errors.hpp"
#include "rmap/fixtures.hpp"
#include "rmap/jordan.hpp"

using namespace rmap;

TEST_CASE("real line gamma for the degree-5 example") {
    CriticalData cd = critical_data(fixtures::deg5_function());
    JordanPath g = real_line_gamma(cd);
    REQUIRE(g.q() == 6);
    CHECK(g.infinity_vertex() == 5); // infinity labelled last
    for (int j = 0; j + 2 < 6; ++j)
        CHECK(g.vertices[j].value.real() < g.vertices[j + 1].value.real());
    CHECK(g.through_infinity_segment() == -1);
}

TEST_CASE("real line gamma for z^n") {
    std::vector<double> c(4, 0.0);
    c[3] = 1.0;
    RationalFunction f(Polynomial::from_real(c), Polynomial::from_real({1}));
    CriticalData cd = critical_data(f);
    JordanPath g = real_line_gamma(cd);
    REQUIRE(g.q() == 2);
    CHECK(std::abs(g.vertices[0].value) < 1e-12);
    CHECK(g.vertices[1].is_infinity());
}

TEST_CASE("non-real critical value rejected") {
    CriticalData cd;
    cd.critical_values = {SpherePoint(Cx(1.0, 1.0)), SpherePoint(Cx(0.0))};
    CHECK_THROWS_AS(real_line_gamma(cd), NotFortunate);
}

TEST_CASE("polygonal gamma on convex positions") {
    std::vector<SpherePoint> vals{SpherePoint(Cx(1.0, 0.0)), SpherePoint(Cx(0.0, 1.0)),
                                  SpherePoint(Cx(-1.0, 0.0)), SpherePoint(Cx(0.0, -1.0))};
    JordanPath g = polygonal_gamma(vals, {0, 1, 2, 3});
    CHECK(g.q() == 4);
    // Swapping two adjacent vertices crosses the diagonals.
    CHECK_THROWS_AS(polygonal_gamma(vals, {1, 0, 2, 3}), NotJordan);
}

TEST_CASE("polygon through infinity") {
    std::vector<SpherePoint> vals{SpherePoint(Cx(0.0)), SpherePoint(Cx(1.0)),
                                  SpherePoint::infinity()};
    JordanPath g = polygonal_gamma(vals, {0, 1, 2});
    CHECK(g.q() == 3);
    CHECK(g.infinity_vertex() == 2);
    // The two rays leave right of 1 and return left of 0.
    CHECK(g.segments[1].dir_out.real() > 0);
    CHECK(g.segments[2].dir_in.real() < 0);
}

TEST_CASE("default cyclic order") {
    std::vector<SpherePoint> collinear{SpherePoint(Cx(3.0)), SpherePoint(Cx(-1.0)),
                                       SpherePoint(Cx(0.5))};
    auto ord = default_cyclic_order(collinear);
    // Indices sorted by angle around the centroid: for collinear reals this
    // is increasing or decreasing order; accept increasing traversal.
    std::vector<double> xs;
    for (int i : ord) xs.push_back(collinear[i].value.real());
    const bool inc = std::is_sorted(xs.begin(), xs.end());
    const bool dec = std::is_sorted(xs.rbegin(), xs.rend());
    CHECK((inc || dec));

    std::vector<SpherePoint> square{SpherePoint(Cx(1.0, 0.0)), SpherePoint(Cx(-1.0, 0.0)),
                                    SpherePoint(Cx(0.0, 1.0)), SpherePoint(Cx(0.0, -1.0))};
    auto ord2 = default_cyclic_order(square);
    JordanPath g = polygonal_gamma(square, ord2); // must be Jordan
    CHECK(g.q() == 4);

    std::vector<SpherePoint> withinf{SpherePoint(Cx(0.0)), SpherePoint(Cx(1.0)),
                                     SpherePoint::infinity()};
    auto ord3 = default_cyclic_order(withinf);
    CHECK(withinf[ord3.back()].is_infinity());
}

TEST_CASE("labelling respects the segment order") {
    CriticalData cd = critical_data(fixtures::deg5_function());
    JordanPath g = real_line_gamma(cd);
    for (int j = 0; j < g.q(); ++j) {
        // Segment j joins the vertices labelled j and j+1.
        CHECK(chordal(g.segments[j].a, g.vertices[j]) < 1e-12);
        CHECK(chordal(g.segments[j].b, g.vertices[(j + 1) % g.q()]) < 1e-12);
    }
}

TEST_CASE("segment sampling stays on the locus") {
    PathSegment chord{SpherePoint(Cx(0.0)), SpherePoint(Cx(2.0, 2.0))};
    auto pts = sample_segment(chord, 16);
    CHECK(pts.size() >= 16);
    PathSegment ray{SpherePoint(Cx(1.0)), SpherePoint::infinity()};
    ray.dir_out = Cx(1.0, 0.0);
    auto rp = sample_segment(ray, 16);
    for (Cx z : rp) {
        CHECK(z.imag() == 0.0);
        CHECK(z.real() >= 1.0);
    }
}

TEST_CASE("two finite values close through infinity") {
    std::vector<SpherePoint> vals{SpherePoint(Cx(0.0, 1.0)), SpherePoint(Cx(0.0, -1.0))};
    JordanPath g = polygonal_gamma(vals, {0, 1});
    CHECK(g.q() == 2);
    CHECK(g.through_infinity_segment() == 1);
}

TEST_CASE("joukowski-type map traced with the default polygon") {
    // (z^2 - 1) / (2z): two non-real critical values i, -i.
    RationalFunction f(Polynomial::from_real({-1, 0, 1}), Polynomial::from_real({0, 2}));
    CriticalData cd = critical_data(f);
    REQUIRE(cd.q() == 2);
    for (const auto& w : cd.critical_values) CHECK(std::abs(w.value.real()) < 1e-9);
    auto order = default_cyclic_order(cd.critical_values);
    JordanPath g = polygonal_gamma(cd.critical_values, order);
    EmbeddedRMap em = pullback_rmap(f, g);
    CHECK(em.map.vertex_count() == 2);
    CHECK(em.map.edge_count() == 4);
    CHECK(faces(em.map).size() == 4);
    CHECK(map_isomorphic(em.map, fixtures::bigon_rmap(2), true).isomorphic);
}
