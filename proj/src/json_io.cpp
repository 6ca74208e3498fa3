#include "rmap/json_io.hpp"

#include <fstream>

namespace rmap {

Json to_json(const SpherePoint& p) {
    if (p.infinite) return Json("inf");
    return Json::array({p.value.real(), p.value.imag()});
}

SpherePoint sphere_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return SpherePoint::infinity();
        throw IoError("unknown sphere point literal");
    }
    if (!j.is_array() || j.size() != 2) throw IoError("sphere point must be [re, im] or \"inf\"");
    return SpherePoint(Cx(j[0].get<double>(), j[1].get<double>()));
}

namespace {

Json coeffs_to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const Cx& c : p.coeffs()) a.push_back(Json::array({c.real(), c.imag()}));
    return a;
}

Polynomial coeffs_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw IoError("coefficient list must be a nonempty array");
    std::vector<Cx> c;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2) throw IoError("coefficient must be [re, im]");
        c.push_back(Cx(e[0].get<double>(), e[1].get<double>()));
    }
    return Polynomial(std::move(c));
}

} // namespace

Json to_json(const RationalFunction& f) {
    return Json{{"num", coeffs_to_json(f.num())}, {"den", coeffs_to_json(f.den())}};
}

RationalFunction rational_from_json(const Json& j) {
    if (!j.contains("num") || !j.contains("den"))
        throw IoError("rational function needs \"num\" and \"den\"");
    return RationalFunction(coeffs_from_json(j["num"]), coeffs_from_json(j["den"]));
}

Json to_json(const CriticalData& cd) {
    Json pts = Json::array();
    int rh = 0;
    for (const auto& cp : cd.critical_points) {
        rh += cp.ramification - 1;
        pts.push_back(Json{{"point", to_json(cp.point)},
                           {"mu", cp.ramification},
                           {"value_index", cp.value_index}});
    }
    Json vals = Json::array();
    for (const auto& w : cd.critical_values) vals.push_back(to_json(w));
    return Json{{"degree", cd.degree_n},
                {"genus", cd.genus_g},
                {"m", cd.m()},
                {"q", cd.q()},
                {"critical_points", pts},
                {"critical_values", vals},
                {"rh_sum", rh},
                {"rh_expected", 2 * cd.degree_n + 2 * cd.genus_g - 2},
                {"rh_ok", rh == 2 * cd.degree_n + 2 * cd.genus_g - 2}};
}

Json to_json(const JordanPath& g) {
    Json vs = Json::array();
    for (const auto& v : g.vertices) vs.push_back(to_json(v));
    Json segs = Json::array();
    for (const auto& s : g.segments)
        segs.push_back(Json{{"through_inf", s.through_inf},
                            {"dir_out", Json::array({s.dir_out.real(), s.dir_out.imag()})},
                            {"dir_in", Json::array({s.dir_in.real(), s.dir_in.imag()})}});
    return Json{{"vertices", vs},
                {"segments", segs},
                {"through_infinity_segment", g.through_infinity_segment()}};
}

JordanPath jordan_from_json(const Json& j) {
    if (!j.contains("vertices")) throw IoError("jordan path needs \"vertices\"");
    JordanPath g;
    for (const Json& v : j["vertices"]) g.vertices.push_back(sphere_from_json(v));
    const int q = g.q();
    if (q < 2) throw IoError("jordan path needs at least two vertices");
    for (int k = 0; k < q; ++k) {
        PathSegment s;
        s.a = g.vertices[k];
        s.b = g.vertices[(k + 1) % q];
        if (j.contains("segments")) {
            const Json& e = j["segments"].at(k);
            s.through_inf = e.value("through_inf", false);
            if (e.contains("dir_out"))
                s.dir_out = Cx(e["dir_out"][0].get<double>(), e["dir_out"][1].get<double>());
            if (e.contains("dir_in"))
                s.dir_in = Cx(e["dir_in"][0].get<double>(), e["dir_in"][1].get<double>());
        }
        g.segments.push_back(s);
    }
    return g;
}

Json to_json(const CombinatorialMap& m) {
    Json vs = Json::array();
    for (int v = 0; v < m.vertex_count(); ++v)
        vs.push_back(Json{{"id", v}, {"rot", m.rotations[v]}});
    Json hs = Json::array();
    for (int h = 0; h < m.half_edge_count(); ++h)
        hs.push_back(Json{{"id", h}, {"twin", m.twin(h)}, {"origin", m.origin(h)}});
    Json out{{"vertices", vs}, {"half_edges", hs}};
    if (m.has_labels()) {
        Json labels = Json::object();
        for (int v = 0; v < m.vertex_count(); ++v) labels[std::to_string(v)] = m.labels[v];
        out["labels"] = labels;
        out["labels_q"] = m.labels_q;
    }
    if (m.blue_seed >= 0) out["blue_face_halfedge"] = m.blue_seed;
    return out;
}

CombinatorialMap map_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("half_edges"))
        throw IoError("map needs \"vertices\" and \"half_edges\"");
    // Vertex and half-edge ids may be arbitrary; remap to dense indices in
    // order of appearance.
    std::map<long long, int> vid, hid;
    for (const Json& v : j["vertices"]) {
        const long long id = v.at("id").get<long long>();
        if (!vid.emplace(id, int(vid.size())).second) throw IoError("duplicate vertex id");
    }
    for (const Json& h : j["half_edges"]) {
        const long long id = h.at("id").get<long long>();
        if (!hid.emplace(id, int(hid.size())).second) throw IoError("duplicate half-edge id");
    }
    CombinatorialMap m;
    m.rotations.assign(vid.size(), {});
    m.half_edges.assign(hid.size(), {});
    for (const Json& h : j["half_edges"]) {
        const int id = hid.at(h.at("id").get<long long>());
        const auto twin_it = hid.find(h.at("twin").get<long long>());
        const auto org_it = vid.find(h.at("origin").get<long long>());
        if (twin_it == hid.end() || org_it == vid.end()) throw IoError("dangling half-edge ref");
        m.half_edges[id] = {twin_it->second, org_it->second};
    }
    for (const Json& v : j["vertices"]) {
        const int id = vid.at(v.at("id").get<long long>());
        for (const Json& h : v.at("rot")) {
            const auto it = hid.find(h.get<long long>());
            if (it == hid.end()) throw IoError("rotation references unknown half-edge");
            m.rotations[id].push_back(it->second);
        }
    }
    if (j.contains("labels")) {
        m.labels.assign(vid.size(), -1);
        for (const auto& [key, val] : j["labels"].items()) {
            const auto it = vid.find(std::stoll(key));
            if (it == vid.end()) throw IoError("label references unknown vertex");
            m.labels[it->second] = val.get<int>();
        }
        for (int l : m.labels)
            if (l < 0) throw IoError("labels must cover every vertex");
        int q = 0;
        for (int l : m.labels) q = std::max(q, l + 1);
        m.labels_q = j.value("labels_q", q < 2 ? 2 : q);
    }
    if (j.contains("blue_face_halfedge")) {
        const auto it = hid.find(j["blue_face_halfedge"].get<long long>());
        if (it == hid.end()) throw IoError("blue seed references unknown half-edge");
        m.blue_seed = it->second;
    }
    auto bad = validate_map(m);
    if (!bad.empty()) throw MalformedMap("map JSON invalid: " + bad.front());
    return m;
}

Json to_json(const QLabelling& L) {
    Json labels = Json::object();
    for (size_t v = 0; v < L.assignment.size(); ++v) labels[std::to_string(v)] = L.assignment[v];
    return Json{{"q", L.q}, {"labels", labels}};
}

QLabelling labelling_from_json(const Json& j) {
    QLabelling L;
    L.q = j.at("q").get<int>();
    std::map<long long, int> entries;
    for (const auto& [key, val] : j.at("labels").items())
        entries[std::stoll(key)] = val.get<int>();
    int next = 0;
    for (const auto& [id, lab] : entries) {
        if (id != next++) throw IoError("labelling vertex ids must be 0..V-1");
        L.assignment.push_back(lab);
    }
    return L;
}

Json to_json(const Constellation& c) {
    Json sigmas = Json::array();
    for (const Perm& s : c.sigmas) {
        Json cycles = Json::array();
        for (const auto& cyc : perm_cycles(s)) {
            Json one = Json::array();
            for (int x : cyc) one.push_back(x + 1); // 1-based sheets
            cycles.push_back(one);
        }
        sigmas.push_back(cycles);
    }
    return Json{{"n", c.n}, {"q", c.q}, {"sigmas", sigmas}};
}

Constellation constellation_from_json(const Json& j) {
    Constellation c;
    c.n = j.at("n").get<int>();
    c.q = j.at("q").get<int>();
    for (const Json& cycles : j.at("sigmas")) {
        Perm p = perm_identity(c.n);
        for (const Json& cyc : cycles) {
            const int k = int(cyc.size());
            for (int i = 0; i < k; ++i) {
                const int a = cyc[i].get<int>() - 1;
                const int b = cyc[(i + 1) % k].get<int>() - 1;
                if (a < 0 || a >= c.n || b < 0 || b >= c.n)
                    throw IoError("cycle entry out of range");
                p[a] = b;
            }
        }
        c.sigmas.push_back(std::move(p));
    }
    if (int(c.sigmas.size()) != c.q) throw IoError("sigma count differs from q");
    return c;
}

Json to_json(const SurgeryPlan& p) {
    Json polygon = Json::array();
    for (const auto& v : p.polygon) polygon.push_back(to_json(v));
    Json gluings = Json::array();
    for (int j = 0; j < p.q; ++j)
        for (int a = 0; a < p.n; ++a)
            gluings.push_back(Json{{"blue", a + 1}, {"edge", j}, {"gray", p.gray_of[j][a] + 1}});
    Json cones = Json::array();
    for (const auto& cp : p.cone_points) {
        Json tiles = Json::array();
        for (int t : cp.blue_tiles) tiles.push_back(t + 1);
        cones.push_back(Json{{"label", cp.label},
                             {"blue_tiles", tiles},
                             {"angle_multiple", cp.angle_multiple}});
    }
    return Json{{"n", p.n}, {"q", p.q}, {"polygon", polygon}, {"gluings", gluings},
                {"cone_points", cones}};
}

Json to_json(const EmbeddedRMap& em) {
    Json out = to_json(em.map);
    Json coords = Json::object();
    for (size_t v = 0; v < em.coords.size(); ++v)
        coords[std::to_string(v)] = to_json(em.coords[v]);
    Json arcs = Json::object();
    for (size_t e = 0; e < em.arcs.size(); ++e) {
        Json line = Json::array();
        for (const ArcSample& s : em.arcs[e]) {
            const Cx z = s.finite();
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
            if (std::abs(z) > 1e8) continue;
            line.push_back(Json::array({z.real(), z.imag()}));
        }
        arcs[std::to_string(2 * e)] = line; // keyed by the forward half-edge
    }
    out["coords"] = coords;
    out["arcs"] = arcs;
    return out;
}

EmbeddedRMap embedded_from_json(const Json& j) {
    EmbeddedRMap em;
    em.map = map_from_json(j);
    em.coords.assign(em.map.vertex_count(), SpherePoint());
    if (!j.contains("coords")) throw IoError("embedded map needs \"coords\"");
    for (const auto& [key, val] : j["coords"].items()) {
        const int v = int(std::stoll(key));
        if (v < 0 || v >= em.map.vertex_count()) throw IoError("coord for unknown vertex");
        em.coords[v] = sphere_from_json(val);
    }
    em.arcs.assign(em.map.edge_count(), {});
    if (j.contains("arcs")) {
        for (const auto& [key, val] : j["arcs"].items()) {
            const int h = int(std::stoll(key));
            if (h < 0 || h % 2 != 0 || h / 2 >= em.map.edge_count())
                throw IoError("arc key must be a forward half-edge id");
            for (const Json& pt : val)
                em.arcs[h / 2].push_back({Cx(pt[0].get<double>(), pt[1].get<double>()), false});
        }
    }
    return em;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << dump(j);
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

} // namespace rmap
