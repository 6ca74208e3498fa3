#include <random>
#include <cmath>

#include "doctest.h"
#include "rmap/errors.hpp"
#include "rmap/fixtures.hpp"
#include "rmap/labelling.hpp"
#include "rmap/trace.hpp"

using namespace rmap;
using namespace rmap::fixtures;

namespace {

RationalFunction power_map(int n) {
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    return RationalFunction(Polynomial::from_real(c), Polynomial::from_real({1}));
}

JordanPath gamma_of(const RationalFunction& f) {
    return real_line_gamma(critical_data(f));
}

} // namespace

TEST_CASE("tracking the square root along a real segment") {
    RationalFunction f = power_map(2);
    TraceOptions opt;
    FiberTracker tr(f, opt, 10.0);
    std::vector<TrackedPoint> pts{{Cx(1.0), false}, {Cx(-1.0), false}};
    tr.track_leg({Cx(1.0), Cx(4.0), false}, 0.0, 1.0, pts, nullptr);
    CHECK(std::abs(pts[0].z - Cx(2.0)) < 1e-9);
    CHECK(std::abs(pts[1].z - Cx(-2.0)) < 1e-9);
}

TEST_CASE("tracking the square root along the upper unit semicircle") {
    RationalFunction f = power_map(2);
    TraceOptions opt;
    FiberTracker tr(f, opt, 10.0);
    std::vector<TrackedPoint> pts{{Cx(1.0), false}, {Cx(-1.0), false}};
    // Sampled semicircle from 1 to -1 through i as straight target legs.
    std::vector<TargetLeg> legs;
    const int m = 32;
    for (int s = 0; s < m; ++s) {
        const Cx a = std::polar(1.0, M_PI * s / m);
        const Cx b = std::polar(1.0, M_PI * (s + 1) / m);
        legs.push_back({a, b, false});
    }
    tr.track_legs(legs, pts, nullptr);
    CHECK(std::abs(pts[0].z - Cx(0.0, 1.0)) < 1e-8);
    CHECK(std::abs(pts[1].z - Cx(0.0, -1.0)) < 1e-8);
}

TEST_CASE("lifted arcs over a subsegment of the degree-5 example are disjoint") {
    RationalFunction f = deg5_function();
    JordanPath g = gamma_of(f);
    // Interior subsegment of segment 0 (between the two smallest values).
    PathSegment sub;
    const Cx a = g.vertices[0].value, b = g.vertices[1].value;
    sub.a = SpherePoint(a + 0.2 * (b - a));
    sub.b = SpherePoint(a + 0.8 * (b - a));
    Fiber starts = fiber(f, SpherePoint(a + 0.2 * (b - a) + 0.001 * (b - a)));
    auto arcs = lift_segment(f, sub, 0, starts);
    REQUIRE(arcs.size() == 5);
    double min_sep = 1e300;
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            for (const auto& s : arcs[i].samples)
                for (const auto& t : arcs[j].samples) {
                    SpherePoint ps = TrackedPoint{s.z, s.inverted}.to_sphere();
                    SpherePoint pt = TrackedPoint{t.z, t.inverted}.to_sphere();
                    min_sep = std::min(min_sep, chordal(ps, pt));
                }
    CHECK(min_sep > 1e-4);
}

TEST_CASE("lifted samples stay on the preimage of the segment") {
    RationalFunction f = belyi_cubic_function();
    JordanPath g = gamma_of(f);
    std::vector<TargetLeg> legs = segment_legs(g.segments[0], 16.0);
    const Cx w0 = legs[0].from + (legs[0].to - legs[0].from) * 1e-3;
    Fiber starts = fiber(f, SpherePoint(w0));
    auto arcs = lift_segment(f, g.segments[0], 0, starts);
    for (const auto& a : arcs)
        for (size_t k = 0; k < a.samples.size(); k += 5) {
            SpherePoint z = TrackedPoint{a.samples[k].z, a.samples[k].inverted}.to_sphere();
            SpherePoint w = eval(f, z);
            if (w.infinite) continue;
            // Image lies on the real axis between the two segment endpoints.
            CHECK(std::abs(w.value.imag()) < 1e-7 * (1.0 + std::abs(w.value.real())));
        }
}

TEST_CASE("pullback of z^n is the bigon map") {
    for (int n = 2; n <= 4; ++n) {
        RationalFunction f = power_map(n);
        EmbeddedRMap em = pullback_rmap(f, gamma_of(f));
        CHECK(em.map.vertex_count() == 2);
        CHECK(em.map.edge_count() == 2 * n);
        CHECK(int(faces(em.map).size()) == 2 * n);
        CHECK(map_isomorphic(em.map, bigon_rmap(n), true).isomorphic);
        // Valence 2n at both vertices.
        CHECK(em.map.valence(0) == 2 * n);
        CHECK(em.map.valence(1) == 2 * n);
    }
}

TEST_CASE("pullback of the cubic has six triangles") {
    RationalFunction f = belyi_cubic_function();
    EmbeddedRMap em = pullback_rmap(f, gamma_of(f));
    CHECK(em.map.vertex_count() == 5);
    CHECK(em.map.edge_count() == 9);
    auto fc = faces(em.map);
    CHECK(fc.size() == 6);
    for (const auto& c : fc) CHECK(c.size() == 3);
    CHECK(euler_genus(em.map) == 0);
    Constellation c = constellation_from_rmap(em.map);
    CHECK(conjugate_constellations(c, belyi_cubic_constellation()));
}

TEST_CASE("monodromy of z^2 around the origin is a transposition") {
    RationalFunction f = power_map(2);
    JordanPath g = gamma_of(f);
    Constellation c = monodromy_by_continuation(f, g, default_basepoint(g));
    REQUIRE(c.q == 2);
    CHECK(cycle_type(c.sigmas[0]) == std::vector<int>{2});
    CHECK(cycle_type(c.sigmas[1]) == std::vector<int>{2});
    CHECK(validate_constellation(c).valid);
}

TEST_CASE("monodromy of z^n is an n-cycle") {
    for (int n = 3; n <= 5; ++n) {
        RationalFunction f = power_map(n);
        JordanPath g = gamma_of(f);
        Constellation c = monodromy_by_continuation(f, g, default_basepoint(g));
        CHECK(cycle_type(c.sigmas[0]) == std::vector<int>{n});
        CHECK(validate_constellation(c).valid);
    }
}

TEST_CASE("two monodromy routes agree for the cubic") {
    RationalFunction f = belyi_cubic_function();
    JordanPath g = gamma_of(f);
    Constellation via_loops = monodromy_by_continuation(f, g, default_basepoint(g));
    Constellation via_map = constellation_from_rmap(pullback_rmap(f, g).map);
    CHECK(validate_constellation(via_loops).valid);
    CHECK(conjugate_constellations(via_loops, via_map));
}

TEST_CASE("isotopy invariance for the cubic") {
    RationalFunction f = belyi_cubic_function();
    std::vector<SpherePoint> vals{SpherePoint(Cx(0.0)), SpherePoint(Cx(1.0)),
                                  SpherePoint::infinity()};
    JordanPath g1 = polygonal_gamma(vals, {0, 1, 2});
    // A second path with the same cyclic order but different ray directions.
    JordanPath g2 = g1;
    g2.segments[1].dir_out = std::polar(1.0, -M_PI / 6);
    g2.segments[2].dir_in = std::polar(1.0, 5 * M_PI / 6);
    CHECK(!segments_intersect(g2.segments[1], g2.segments[2], true));
    EmbeddedRMap m1 = pullback_rmap(f, g1);
    EmbeddedRMap m2 = pullback_rmap(f, g2);
    CHECK(map_isomorphic(m1.map, m2.map, true).isomorphic);
}

TEST_CASE("monodromy over an all-finite polygon agrees with the map route") {
    // Equal-degree random function: all critical values finite, generic
    // complex positions, corridor corners all in the w chart.
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    std::vector<Cx> nc, dc;
    for (int i = 0; i <= 3; ++i) nc.push_back(Cx(box(rng), box(rng)));
    for (int i = 0; i <= 3; ++i) dc.push_back(Cx(box(rng), box(rng)));
    nc.back() += Cx(0.7);
    dc.back() += Cx(0.7);
    RationalFunction f{Polynomial(nc), Polynomial(dc)};
    CriticalData cd = critical_data(f);
    JordanPath g = polygonal_gamma(cd.critical_values, default_cyclic_order(cd.critical_values));
    Constellation via_loops = monodromy_by_continuation(f, g, default_basepoint(g));
    Constellation via_map = constellation_from_rmap(pullback_rmap(f, g).map);
    CHECK(validate_constellation(via_loops).valid);
    CHECK(conjugate_constellations(via_loops, via_map));
}

TEST_CASE("monodromy through the virtual corner at infinity") {
    // Bigon polygon of a Joukowski-type map: the corridor passes the
    // through-infinity segment in the 1/w chart.
    RationalFunction f(Polynomial::from_real({-1, 0, 1}), Polynomial::from_real({0, 2}));
    CriticalData cd = critical_data(f);
    JordanPath g = polygonal_gamma(cd.critical_values, default_cyclic_order(cd.critical_values));
    REQUIRE(g.through_infinity_segment() == 1);
    Constellation via_loops = monodromy_by_continuation(f, g, default_basepoint(g));
    Constellation via_map = constellation_from_rmap(pullback_rmap(f, g).map);
    CHECK(validate_constellation(via_loops).valid);
    CHECK(conjugate_constellations(via_loops, via_map));
    CHECK(cycle_type(via_loops.sigmas[0]) == std::vector<int>{2});
}

TEST_CASE("real-line path closing through infinity traces the bigon") {
    // (z^2 + 1) / (2z): real critical values -1, 1; infinity is regular, so
    // the real-line path closes through it and one lifted arc passes the
    // pole at infinity mid-segment.
    RationalFunction f(Polynomial::from_real({1, 0, 1}), Polynomial::from_real({0, 2}));
    CriticalData cd = critical_data(f);
    JordanPath g = real_line_gamma(cd);
    REQUIRE(g.q() == 2);
    CHECK(g.through_infinity_segment() == 1);
    EmbeddedRMap em = pullback_rmap(f, g);
    CHECK(map_isomorphic(em.map, fixtures::bigon_rmap(2), true).isomorphic);
}
