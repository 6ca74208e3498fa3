#include "rmap/constellation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace rmap {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

std::vector<std::vector<int>> perm_cycles(const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int x = static_cast<int>(i);
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = p[x];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    for (const auto& c : perm_cycles(p)) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Constellation constellation_from_rmap(const CombinatorialMap& m) {
    require_valid(m);
    if (!m.has_labels()) throw InconsistentMap("constellation requires a labelled map");
    const int q = m.labels_q;

    FaceStructure fs = face_structure(m);
    if (!fs.two_colorable) throw InconsistentMap("face adjacency not bipartite");

    // Blue tile numbering in first-visited order.
    std::vector<int> sheet_of_face(fs.face_count(), -1);
    int n = 0;
    for (int h = 0; h < m.half_edge_count(); ++h) {
        const int f = fs.face_of[h];
        if (fs.colors[f] == FaceColor::Blue && sheet_of_face[f] < 0) sheet_of_face[f] = n++;
    }
    if (2 * n != fs.face_count()) throw InconsistentMap("tile colors are unbalanced");

    Constellation c;
    c.n = n;
    c.q = q;
    c.sigmas.assign(q, perm_identity(n));
    std::vector<std::vector<char>> covered(q, std::vector<char>(n, 0));

    for (int v = 0; v < m.vertex_count(); ++v) {
        const int j = m.labels[v];
        // Counterclockwise blue tiles around v: the face on the left of each
        // outgoing half-edge, every other one of which is blue.
        std::vector<int> blues;
        for (int h : m.rotations[v]) {
            const int f = fs.face_of[h];
            if (fs.colors[f] == FaceColor::Blue) blues.push_back(sheet_of_face[f]);
        }
        if (2 * static_cast<int>(blues.size()) != m.valence(v))
            throw InconsistentMap("tiles around a vertex do not alternate in color");
        for (size_t i = 0; i < blues.size(); ++i) {
            const int from = blues[i];
            const int to = blues[(i + 1) % blues.size()];
            if (covered[j][from])
                throw InconsistentMap("blue tile met twice around residue " + std::to_string(j));
            covered[j][from] = 1;
            c.sigmas[j][from] = to;
        }
    }
    for (int j = 0; j < q; ++j)
        for (int s = 0; s < n; ++s)
            if (!covered[j][s])
                throw InconsistentMap("blue tile " + std::to_string(s) +
                                      " has no vertex labelled " + std::to_string(j));
    return c;
}

ConstellationVerdict validate_constellation(const Constellation& c) {
    ConstellationVerdict v;
    if (c.n < 1 || c.q < 2 || static_cast<int>(c.sigmas.size()) != c.q) {
        v.witness = "malformed constellation";
        return v;
    }
    for (const Perm& s : c.sigmas) {
        if (static_cast<int>(s.size()) != c.n) {
            v.witness = "permutation size mismatch";
            return v;
        }
        std::vector<char> seen(c.n, 0);
        for (int x : s) {
            if (x < 0 || x >= c.n || seen[x]) {
                v.witness = "not a permutation";
                return v;
            }
            seen[x] = 1;
        }
    }

    Perm prod = perm_identity(c.n);
    for (const Perm& s : c.sigmas) prod = perm_compose(prod, s);
    v.product_identity = perm_is_identity(prod);
    if (!v.product_identity) v.witness = "product of the sigmas is not the identity";

    // Transitivity of the generated group.
    std::vector<char> seen(c.n, 0);
    std::deque<int> todo{0};
    seen[0] = 1;
    int count = 1;
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        for (const Perm& s : c.sigmas) {
            for (int y : {s[x], perm_inverse(s)[x]}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    todo.push_back(y);
                }
            }
        }
    }
    v.transitive = (count == c.n);
    if (!v.transitive && v.witness.empty()) v.witness = "sheet action is not transitive";
    v.valid = v.product_identity && v.transitive;
    return v;
}

int genus_from_constellation(const Constellation& c) {
    int branching = 0;
    for (const Perm& s : c.sigmas)
        for (const auto& cyc : perm_cycles(s)) branching += static_cast<int>(cyc.size()) - 1;
    const int rhs = -2 * c.n + branching + 2; // = 2g
    if (rhs < 0 || rhs % 2 != 0)
        throw InconsistentRamification("cycle data gives negative or odd genus");
    return rhs / 2;
}

CombinatorialMap constellation_to_rmap(const Constellation& c) {
    const int n = c.n, q = c.q;
    // Vertices: one per cycle of each sigma[j].
    std::vector<std::vector<std::vector<int>>> cycles(q);
    std::vector<std::vector<int>> vertex_of(q, std::vector<int>(n, -1));
    int V = 0;
    for (int j = 0; j < q; ++j) {
        cycles[j] = perm_cycles(c.sigmas[j]);
        for (const auto& cyc : cycles[j]) {
            for (int s : cyc) vertex_of[j][s] = V;
            ++V;
        }
    }

    // Edge (j, alpha): blue tile alpha's side over polygon edge j -> j+1.
    // Forward half 2*(j*n+alpha) runs from the vertex over j to the vertex
    // over j+1 with the blue tile on its left.
    CombinatorialMap m;
    m.half_edges.assign(2 * n * q, {});
    m.rotations.assign(V, {});
    m.labels.assign(V, 0);
    m.labels_q = q;

    auto fwd = [&](int j, int s) { return 2 * (j * n + s); };
    auto bwd = [&](int j, int s) { return 2 * (j * n + s) + 1; };

    for (int j = 0; j < q; ++j) {
        for (int s = 0; s < n; ++s) {
            const int f = fwd(j, s), b = bwd(j, s);
            m.half_edges[f].twin = b;
            m.half_edges[b].twin = f;
            m.half_edges[f].origin = vertex_of[j][s];
            m.half_edges[b].origin = vertex_of[(j + 1) % q][s];
        }
    }

    // Rotation at the vertex of cycle (s0, s1, ...) over vertex j, counter-
    // clockwise: out along edge j for s0, back along edge j-1 for s0, then
    // the same for s1 = sigma_j(s0), and so on.
    int v = 0;
    for (int j = 0; j < q; ++j) {
        const int jm = (j + q - 1) % q;
        for (const auto& cyc : cycles[j]) {
            auto& rot = m.rotations[v];
            for (int s : cyc) {
                rot.push_back(fwd(j, s));
                rot.push_back(bwd(jm, s));
            }
            m.labels[v] = j;
            ++v;
        }
    }
    m.blue_seed = fwd(0, 0);
    require_valid(m);
    return m;
}

SurgeryPlan assemble_surface(const Constellation& c, const JordanPath& polygon) {
    ConstellationVerdict v = validate_constellation(c);
    if (!v.valid) throw InvalidConstellation(v.witness);
    if (polygon.q() != c.q) throw InvalidConstellation("polygon vertex count differs from q");

    SurgeryPlan plan;
    plan.n = c.n;
    plan.q = c.q;
    plan.polygon = polygon.vertices;

    // Gray tile beta is the tile glued to blue tile beta along polygon edge
    // 0; crossing the vertex over j links consecutive pairings through
    // sigma[j]^-1, so gray_of[j] = gray_of[j-1] of sigma[j]^-1.
    plan.gray_of.assign(c.q, perm_identity(c.n));
    for (int j = 1; j < c.q; ++j)
        plan.gray_of[j] = perm_compose(perm_inverse(c.sigmas[j]), plan.gray_of[j - 1]);

    for (int j = 0; j < c.q; ++j) {
        for (const auto& cyc : perm_cycles(c.sigmas[j])) {
            SurgeryPlan::ConePoint cp;
            cp.label = j;
            cp.blue_tiles = cyc;
            cp.angle_multiple = static_cast<int>(cyc.size());
            plan.cone_points.push_back(std::move(cp));
        }
    }
    return plan;
}

bool conjugate_constellations(const Constellation& a, const Constellation& b) {
    if (a.n != b.n || a.q != b.q) return false;
    ConstellationVerdict va = validate_constellation(a);
    ConstellationVerdict vb = validate_constellation(b);
    if (!va.transitive || !vb.transitive) {
        // Fall back to exhaustive search only for tiny n.
        if (a.n > 8) return false;
    }

    // rho with rho(a_j(x)) = b_j(rho(x)) is determined by rho(0) under a
    // transitive action; try all images and propagate.
    for (int r0 = 0; r0 < a.n; ++r0) {
        std::vector<int> rho(a.n, -1);
        rho[0] = r0;
        std::deque<int> todo{0};
        bool ok = true;
        std::vector<char> used(a.n, 0);
        used[r0] = 1;
        while (!todo.empty() && ok) {
            int x = todo.front();
            todo.pop_front();
            for (int j = 0; j < a.q && ok; ++j) {
                const int y = a.sigmas[j][x];
                const int want = b.sigmas[j][rho[x]];
                if (rho[y] == -1) {
                    if (used[want]) {
                        ok = false;
                        break;
                    }
                    rho[y] = want;
                    used[want] = 1;
                    todo.push_back(y);
                } else if (rho[y] != want) {
                    ok = false;
                }
            }
        }
        if (!ok) continue;
        if (std::any_of(rho.begin(), rho.end(), [](int x) { return x < 0; })) continue;
        bool all = true;
        for (int j = 0; j < a.q && all; ++j)
            for (int x = 0; x < a.n && all; ++x)
                if (rho[a.sigmas[j][x]] != b.sigmas[j][rho[x]]) all = false;
        if (all) return true;
    }
    return false;
}

Realization realize(const CombinatorialMap& tgraph, const QLabelling& L) {
    CombinatorialMap labelled = with_labels(tgraph, L);
    ConsistencyVerdict cv = check_consistent(labelled, L, false);
    if (!cv.consistent)
        throw InconsistentLabelling("labelling is not consistent: " + cv.violations.front());

    Realization out;
    out.rmap = subdivide_edges(labelled, L.q);
    out.constellation = constellation_from_rmap(out.rmap);
    ConstellationVerdict v = validate_constellation(out.constellation);
    if (!v.valid) throw InvalidConstellation(v.witness);
    out.genus = genus_from_constellation(out.constellation);
    const int eg = euler_genus(tgraph);
    if (out.genus != eg)
        throw InconsistentRamification("constellation genus differs from the Euler genus");

    // Default polygon: critical values 1, ..., q-1 on the real line plus
    // infinity, labelled in that order.
    std::vector<SpherePoint> values;
    for (int j = 1; j < L.q; ++j) values.push_back(SpherePoint(Cx(double(j), 0.0)));
    values.push_back(SpherePoint::infinity());
    JordanPath polygon;
    polygon.vertices = values;
    for (int j = 0; j < L.q; ++j) {
        PathSegment s;
        s.a = values[j];
        s.b = values[(j + 1) % L.q];
        if (j == L.q - 2) s.dir_out = Cx(1.0, 0.0);
        if (j == L.q - 1) s.dir_in = Cx(-1.0, 0.0);
        polygon.segments.push_back(s);
    }
    out.plan = assemble_surface(out.constellation, polygon);
    return out;
}

} // namespace rmap
