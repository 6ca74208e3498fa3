#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rmap/fixtures.hpp"
#include "rmap/json_io.hpp"
#include "rmap/render.hpp"

namespace py = pybind11;
using namespace rmap;

namespace {

// Sphere points cross the boundary as python complex or the string "inf".
SpherePoint sphere_from_py(const py::object& o) {
    if (py::isinstance<py::str>(o)) {
        if (o.cast<std::string>() == "inf") return SpherePoint::infinity();
        throw py::value_error("sphere point must be complex or \"inf\"");
    }
    return SpherePoint(o.cast<Cx>());
}

py::object sphere_to_py(const SpherePoint& p) {
    if (p.infinite) return py::str("inf");
    return py::cast(p.value);
}

RationalFunction make_rational(const std::vector<Cx>& num, const std::vector<Cx>& den) {
    return RationalFunction(Polynomial(num), Polynomial(den));
}

std::string json_str(const Json& j) { return dump(j); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tessellations of rational maps: Schwarz-Klein tracing and "
              "combinatorial realization";

    py::register_exception<NonConvergence>(m, "NonConvergence");
    py::register_exception<PathJump>(m, "PathJump");
    py::register_exception<AmbiguousSnap>(m, "AmbiguousSnap");
    py::register_exception<NotJordan>(m, "NotJordan");
    py::register_exception<NotFortunate>(m, "NotFortunate");
    py::register_exception<MalformedMap>(m, "MalformedMap");
    py::register_exception<InconsistentLabelling>(m, "InconsistentLabelling");
    py::register_exception<InvalidConstellation>(m, "InvalidConstellation");

    py::class_<RationalFunction>(m, "RationalFunction")
        .def(py::init(&make_rational), py::arg("num"), py::arg("den"))
        .def_property_readonly("degree", &RationalFunction::degree)
        .def("__call__",
             [](const RationalFunction& f, const py::object& z) {
                 return sphere_to_py(eval(f, sphere_from_py(z)));
             })
        .def("derivative_numerator_coeffs",
             [](const RationalFunction& f) { return derivative_numerator(f).coeffs(); })
        .def("to_json", [](const RationalFunction& f) { return json_str(to_json(f)); })
        .def_static("from_json",
                    [](const std::string& s) { return rational_from_json(Json::parse(s)); });

    m.def("roots", [](const std::vector<Cx>& coeffs) {
        std::vector<std::pair<Cx, int>> out;
        for (const auto& r : roots(Polynomial(coeffs))) out.push_back({r.root, r.multiplicity});
        return out;
    });

    m.def("critical_data_json",
          [](const RationalFunction& f) { return json_str(to_json(critical_data(f))); });
    m.def("fiber", [](const RationalFunction& f, const py::object& w) {
        std::vector<std::pair<py::object, int>> out;
        for (const auto& fp : fiber(f, sphere_from_py(w)).points)
            out.push_back({sphere_to_py(fp.point), fp.multiplicity});
        return out;
    });
    m.def("cocritical_points", [](const RationalFunction& f) {
        CriticalData cd = critical_data(f);
        std::vector<py::object> out;
        for (const auto& p : cocritical_points(f, cd)) out.push_back(sphere_to_py(p));
        return out;
    });
    m.def("riemann_hurwitz_genus", &riemann_hurwitz_genus, py::arg("n"), py::arg("mults"));

    py::class_<JordanPath>(m, "JordanPath")
        .def_property_readonly("q", &JordanPath::q)
        .def("vertex", [](const JordanPath& g, int j) { return sphere_to_py(g.vertices.at(j)); })
        .def("to_json", [](const JordanPath& g) { return json_str(to_json(g)); })
        .def_static("from_json",
                    [](const std::string& s) { return jordan_from_json(Json::parse(s)); });

    m.def("real_line_gamma",
          [](const RationalFunction& f) { return real_line_gamma(critical_data(f)); });
    m.def("default_gamma", [](const RationalFunction& f) {
        CriticalData cd = critical_data(f);
        return polygonal_gamma(cd.critical_values, default_cyclic_order(cd.critical_values));
    });
    m.def("polygonal_gamma", [](const std::vector<py::object>& values, const std::vector<int>& order) {
        std::vector<SpherePoint> vs;
        for (const auto& v : values) vs.push_back(sphere_from_py(v));
        return polygonal_gamma(vs, order);
    });

    py::class_<CombinatorialMap>(m, "CombinatorialMap")
        .def_property_readonly("vertex_count", &CombinatorialMap::vertex_count)
        .def_property_readonly("edge_count", &CombinatorialMap::edge_count)
        .def_property_readonly("face_count",
                               [](const CombinatorialMap& m_) { return int(faces(m_).size()); })
        .def("valence", &CombinatorialMap::valence)
        .def("labels", [](const CombinatorialMap& m_) { return m_.labels; })
        .def("euler_genus", [](const CombinatorialMap& m_) { return euler_genus(m_); })
        .def("classify",
             [](const CombinatorialMap& m_) {
                 Classification c = classify(m_);
                 py::dict d;
                 d["kind"] = c.kind == MapKind::TGraph  ? "t-graph"
                             : c.kind == MapKind::RMap ? "R-map"
                                                       : "raw";
                 d["degree"] = c.degree;
                 d["gonality"] = c.gonality;
                 d["violations"] = c.violations;
                 return d;
             })
        .def("to_json", [](const CombinatorialMap& m_) { return json_str(to_json(m_)); })
        .def_static("from_json",
                    [](const std::string& s) { return map_from_json(Json::parse(s)); });

    m.def("forget_valence2", &forget_valence2);
    m.def("subdivide_edges", &subdivide_edges, py::arg("map"), py::arg("q"));
    m.def("map_isomorphic", [](const CombinatorialMap& a, const CombinatorialMap& b,
                               bool respect_labels) {
        return map_isomorphic(a, b, respect_labels).isomorphic;
    }, py::arg("a"), py::arg("b"), py::arg("respect_labels") = false);

    py::class_<QLabelling>(m, "QLabelling")
        .def(py::init([](int q, const std::vector<int>& assignment) {
                 return QLabelling{q, assignment};
             }),
             py::arg("q"), py::arg("assignment"))
        .def_readonly("q", &QLabelling::q)
        .def_readonly("assignment", &QLabelling::assignment)
        .def("to_json", [](const QLabelling& L) { return json_str(to_json(L)); });

    m.def("labels_of", &labels_of);
    m.def("check_consistent", [](const CombinatorialMap& m_, const QLabelling& L) {
        ConsistencyVerdict v = check_consistent(m_, L);
        return py::make_tuple(v.consistent, v.violations);
    });
    m.def("admissible_q_range", [](const CombinatorialMap& m_) {
        QRange r = admissible_q_range(m_);
        return py::make_tuple(r.lo, r.hi);
    });
    m.def("enumerate_labellings", &enumerate_labellings, py::arg("map"), py::arg("q"),
          py::arg("canonical") = true);
    m.def("count_labellings_mod_automorphism", &count_labellings_mod_automorphism);
    m.def("prune_fake_values", [](const CombinatorialMap& m_) {
        PruneResult pr = prune_fake_values(m_);
        return py::make_tuple(pr.map, pr.labelling, pr.removed_residues);
    });

    py::class_<Constellation>(m, "Constellation")
        .def(py::init([](int n, int q, const std::vector<Perm>& sigmas) {
                 return Constellation{n, q, sigmas};
             }),
             py::arg("n"), py::arg("q"), py::arg("sigmas"))
        .def_readonly("n", &Constellation::n)
        .def_readonly("q", &Constellation::q)
        .def_readonly("sigmas", &Constellation::sigmas)
        .def("cycle_types",
             [](const Constellation& c) {
                 std::vector<std::vector<int>> out;
                 for (const Perm& s : c.sigmas) out.push_back(cycle_type(s));
                 return out;
             })
        .def("to_json", [](const Constellation& c) { return json_str(to_json(c)); })
        .def_static("from_json",
                    [](const std::string& s) { return constellation_from_json(Json::parse(s)); });

    m.def("validate_constellation", [](const Constellation& c) {
        ConstellationVerdict v = validate_constellation(c);
        return py::make_tuple(v.valid, v.witness);
    });
    m.def("genus_from_constellation", &genus_from_constellation);
    m.def("constellation_from_rmap", &constellation_from_rmap);
    m.def("constellation_to_rmap", &constellation_to_rmap);
    m.def("conjugate_constellations", &conjugate_constellations);
    m.def("assemble_surface_json", [](const Constellation& c, const JordanPath& polygon) {
        return json_str(to_json(assemble_surface(c, polygon)));
    });

    py::class_<Realization>(m, "Realization")
        .def_readonly("rmap", &Realization::rmap)
        .def_readonly("constellation", &Realization::constellation)
        .def_readonly("genus", &Realization::genus)
        .def("surgery_json", [](const Realization& r) { return json_str(to_json(r.plan)); });

    m.def("realize", &realize, py::arg("tgraph"), py::arg("labelling"));

    py::class_<EmbeddedRMap>(m, "EmbeddedRMap")
        .def_readonly("map", &EmbeddedRMap::map)
        .def("coords",
             [](const EmbeddedRMap& em) {
                 std::vector<py::object> out;
                 for (const auto& p : em.coords) out.push_back(sphere_to_py(p));
                 return out;
             })
        .def("to_json", [](const EmbeddedRMap& em) { return json_str(to_json(em)); })
        .def_static("from_json",
                    [](const std::string& s) { return embedded_from_json(Json::parse(s)); });

    m.def("pullback_rmap",
          [](const RationalFunction& f, const JordanPath& g) { return pullback_rmap(f, g); },
          py::arg("f"), py::arg("gamma"));
    m.def("monodromy_by_continuation",
          [](const RationalFunction& f, const JordanPath& g, const py::object& basepoint) {
              const SpherePoint bp =
                  basepoint.is_none() ? default_basepoint(g) : sphere_from_py(basepoint);
              return monodromy_by_continuation(f, g, bp);
          },
          py::arg("f"), py::arg("gamma"), py::arg("basepoint") = py::none());

    m.def("render_svg", [](const EmbeddedRMap& em) { return render_svg(em); });
    m.def("render_dot", [](const CombinatorialMap& m_) { return render_dot(m_); });

    auto fx = m.def_submodule("fixtures", "built-in example maps and functions");
    fx.def("bigon_rmap", &fixtures::bigon_rmap);
    fx.def("chessboard_torus", &fixtures::chessboard_torus);
    fx.def("hyperelliptic_rmap", &fixtures::hyperelliptic_rmap);
    fx.def("l_chessboard", &fixtures::l_chessboard);
    fx.def("deg5_tgraph", &fixtures::deg5_tgraph);
    fx.def("deg5_function", &fixtures::deg5_function);
    fx.def("belyi_cubic_function", &fixtures::belyi_cubic_function);
    fx.def("belyi_cubic_constellation", &fixtures::belyi_cubic_constellation);
    fx.def("fake_value_rmap", &fixtures::fake_value_rmap);
    fx.def("empty_range_tgraph", &fixtures::empty_range_tgraph);
}
