#include <sstream>

#include "doctest.h"
#include "rmap/fixtures.hpp"
#include "rmap/json_io.hpp"
#include "rmap/render.hpp"
#include "rmap/trace.hpp"

using namespace rmap;
using namespace rmap::fixtures;

namespace {

int count_occurrences(const std::string& text, const std::string& what) {
    int n = 0;
    for (size_t pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1))
        ++n;
    return n;
}

EmbeddedRMap traced_power(int n) {
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    RationalFunction f(Polynomial::from_real(c), Polynomial::from_real({1}));
    return pullback_rmap(f, real_line_gamma(critical_data(f)));
}

} // namespace

TEST_CASE("svg of the power map has 2n sectors") {
    EmbeddedRMap em = traced_power(3);
    std::string svg = render_svg(em);
    // F-1 filled paths plus one background rect.
    CHECK(count_occurrences(svg, "<path") == int(faces(em.map).size()) - 1);
    CHECK(count_occurrences(svg, "<rect") == 1);
    // Both fills appear.
    CHECK(svg.find("#a8c6e8") != std::string::npos);
    CHECK(svg.find("#d9d9d9") != std::string::npos);
    // Two vertex dots: one critical (red); infinity is not drawn.
    CHECK(count_occurrences(svg, "<circle") == 1);
}

TEST_CASE("svg rejects an empty viewport") {
    EmbeddedRMap em = traced_power(2);
    RenderStyle style;
    style.width = -1.0;
    style.height = 2.0;
    CHECK_THROWS_AS(render_svg(em, style), MissingCoords);
    EmbeddedRMap empty;
    CHECK_THROWS_AS(render_svg(empty), MissingCoords);
}

TEST_CASE("dot output lists one edge per twin pair") {
    CombinatorialMap m = deg5_tgraph();
    std::string dot = render_dot(m);
    CHECK(count_occurrences(dot, " -- ") == m.edge_count());
    CHECK(count_occurrences(dot, "label=") == m.vertex_count());
    CHECK(dot.find("0:0") != std::string::npos); // id:label captions
}

TEST_CASE("rational function json round trip") {
    RationalFunction f = deg5_function();
    Json j = to_json(f);
    RationalFunction g = rational_from_json(j);
    CHECK(g.degree() == 5);
    CHECK(dump(to_json(g)) == dump(j));
}

TEST_CASE("map json round trip preserves structure") {
    for (const CombinatorialMap& m :
         {deg5_tgraph(), chessboard_torus(2, 2), l_chessboard(), fake_value_rmap()}) {
        Json j = to_json(m);
        CombinatorialMap back = map_from_json(j);
        CHECK(map_isomorphic(m, back, m.has_labels()).isomorphic);
        CHECK(dump(to_json(back)) == dump(j));
    }
}

TEST_CASE("map json accepts sparse ids") {
    // A 2-gon written with arbitrary vertex and half-edge ids.
    Json j = Json::parse(R"({
      "vertices": [{"id": 10, "rot": [7, 100]}, {"id": 3, "rot": [8, 101]}],
      "half_edges": [
        {"id": 7, "twin": 8, "origin": 10},
        {"id": 8, "twin": 7, "origin": 3},
        {"id": 100, "twin": 101, "origin": 10},
        {"id": 101, "twin": 100, "origin": 3}
      ]
    })");
    CombinatorialMap m = map_from_json(j);
    CHECK(m.vertex_count() == 2);
    CHECK(m.edge_count() == 2);
    CHECK(faces(m).size() == 2);
}

TEST_CASE("constellation json uses one-based cycles") {
    Constellation c = belyi_cubic_constellation();
    Json j = to_json(c);
    CHECK(j["n"] == 3);
    // sigma_2 = (0 1 2) serializes as the single cycle [1, 2, 3].
    bool found = false;
    for (const Json& cyc : j["sigmas"][2])
        if (cyc.size() == 3) found = true;
    CHECK(found);
    Constellation back = constellation_from_json(j);
    CHECK(back.sigmas == c.sigmas);
}

TEST_CASE("jordan path json round trip") {
    CriticalData cd = critical_data(deg5_function());
    JordanPath g = real_line_gamma(cd);
    JordanPath back = jordan_from_json(to_json(g));
    REQUIRE(back.q() == g.q());
    for (int j = 0; j < g.q(); ++j) {
        CHECK(chordal(back.vertices[j], g.vertices[j]) < 1e-12);
        CHECK(back.segments[j].through_inf == g.segments[j].through_inf);
    }
}

TEST_CASE("embedded map json round trip") {
    EmbeddedRMap em = traced_power(2);
    Json j = to_json(em);
    EmbeddedRMap back = embedded_from_json(j);
    CHECK(map_isomorphic(em.map, back.map, true).isomorphic);
    CHECK(back.coords.size() == em.coords.size());
    CHECK(back.arcs.size() == em.arcs.size());
    // Deterministic dump.
    CHECK(dump(j) == dump(to_json(em)));
}

TEST_CASE("surgery plan json shape") {
    Realization r = realize(chessboard_torus(2, 2), labels_of(chessboard_torus(2, 2)));
    Json j = to_json(r.plan);
    CHECK(j["n"] == 2);
    CHECK(j["q"] == 4);
    CHECK(j["gluings"].size() == 8); // nq edge pairings
    CHECK(j["cone_points"].size() == 4);
    for (const Json& cp : j["cone_points"]) CHECK(cp["angle_multiple"] == 2);
}
