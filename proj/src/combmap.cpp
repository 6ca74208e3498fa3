#include "rmap/combmap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace rmap {

int CombinatorialMap::rot_next(int h) const {
    const auto& rot = rotations[origin(h)];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == h) return rot[(i + 1) % rot.size()];
    throw MalformedMap("half-edge missing from its origin's rotation");
}

int CombinatorialMap::rot_prev(int h) const {
    const auto& rot = rotations[origin(h)];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == h) return rot[(i + rot.size() - 1) % rot.size()];
    throw MalformedMap("half-edge missing from its origin's rotation");
}

std::vector<std::string> validate_map(const CombinatorialMap& m) {
    std::vector<std::string> bad;
    const int H = m.half_edge_count();
    if (H == 0) bad.push_back("map has no half-edges");
    if (H % 2 != 0) bad.push_back("odd number of half-edges");

    for (int h = 0; h < H; ++h) {
        const int t = m.half_edges[h].twin;
        if (t < 0 || t >= H) {
            bad.push_back("twin out of range at half-edge " + std::to_string(h));
            continue;
        }
        if (t == h) bad.push_back("twin fixes half-edge " + std::to_string(h));
        if (m.half_edges[t].twin != h)
            bad.push_back("twin not an involution at half-edge " + std::to_string(h));
        const int v = m.half_edges[h].origin;
        if (v < 0 || v >= m.vertex_count())
            bad.push_back("origin out of range at half-edge " + std::to_string(h));
    }

    std::vector<int> seen(H, 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (m.rotations[v].empty()) bad.push_back("isolated vertex " + std::to_string(v));
        for (int h : m.rotations[v]) {
            if (h < 0 || h >= H) {
                bad.push_back("rotation entry out of range at vertex " + std::to_string(v));
                continue;
            }
            if (seen[h]++) bad.push_back("half-edge repeated in rotations: " + std::to_string(h));
            if (m.half_edges[h].origin != v)
                bad.push_back("rotation/origin mismatch at vertex " + std::to_string(v));
        }
    }
    for (int h = 0; h < H; ++h)
        if (!seen[h]) bad.push_back("half-edge absent from rotations: " + std::to_string(h));

    if (m.has_labels()) {
        if (static_cast<int>(m.labels.size()) != m.vertex_count())
            bad.push_back("label array size differs from vertex count");
        if (m.labels_q < 2) bad.push_back("labelled map without a valid modulus");
        for (int l : m.labels)
            if (l < 0 || l >= m.labels_q) bad.push_back("label out of range");
    }
    return bad;
}

void require_valid(const CombinatorialMap& m) {
    auto bad = validate_map(m);
    if (!bad.empty()) throw MalformedMap("invalid map: " + bad.front());
}

bool is_connected(const CombinatorialMap& m) {
    const int V = m.vertex_count();
    if (V == 0) return false;
    std::vector<char> seen(V, 0);
    std::deque<int> todo{0};
    seen[0] = 1;
    int count = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop_front();
        for (int h : m.rotations[v]) {
            int u = m.head(h);
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                todo.push_back(u);
            }
        }
    }
    return count == V;
}

std::vector<std::vector<int>> faces(const CombinatorialMap& m) {
    require_valid(m);
    const int H = m.half_edge_count();
    std::vector<int> face_of(H, -1);
    std::vector<std::vector<int>> cycles;
    for (int h0 = 0; h0 < H; ++h0) {
        if (face_of[h0] >= 0) continue;
        std::vector<int> cyc;
        int h = h0;
        do {
            if (face_of[h] >= 0) throw MalformedMap("face traversal revisited a half-edge");
            face_of[h] = static_cast<int>(cycles.size());
            cyc.push_back(h);
            h = m.face_next(h);
        } while (h != h0);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

int FaceStructure::blue_count() const {
    int b = 0;
    for (FaceColor c : colors)
        if (c == FaceColor::Blue) ++b;
    return b;
}

std::vector<int> FaceStructure::face_sizes() const {
    std::vector<int> s;
    s.reserve(cycles.size());
    for (const auto& c : cycles) s.push_back(static_cast<int>(c.size()));
    return s;
}

FaceStructure face_structure(const CombinatorialMap& m) {
    FaceStructure fs;
    fs.cycles = faces(m);
    fs.face_of.assign(m.half_edge_count(), -1);
    for (int f = 0; f < fs.face_count(); ++f)
        for (int h : fs.cycles[f]) fs.face_of[h] = f;

    // Two-color the face adjacency (faces across a twin pair differ).
    const int F = fs.face_count();
    std::vector<int> color(F, -1);
    const int seed_half = (m.blue_seed >= 0) ? m.blue_seed : 0;
    std::deque<int> todo;
    color[fs.face_of[seed_half]] = 0;
    todo.push_back(fs.face_of[seed_half]);
    while (!todo.empty()) {
        int f = todo.front();
        todo.pop_front();
        for (int h : fs.cycles[f]) {
            int g = fs.face_of[m.twin(h)];
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                todo.push_back(g);
            } else if (color[g] == color[f]) {
                fs.two_colorable = false;
            }
        }
    }
    for (int f = 0; f < F; ++f)
        if (color[f] < 0) color[f] = 0; // disconnected pieces: arbitrary

    fs.colors.resize(F);
    for (int f = 0; f < F; ++f)
        fs.colors[f] = (color[f] == 0) ? FaceColor::Blue : FaceColor::Gray;
    return fs;
}

int euler_genus(const CombinatorialMap& m) {
    require_valid(m);
    if (!is_connected(m)) throw MalformedMap("euler_genus of a disconnected map");
    const int V = m.vertex_count();
    const int E = m.edge_count();
    const int F = static_cast<int>(faces(m).size());
    const int chi = V - E + F;
    if ((2 - chi) % 2 != 0) throw MalformedMap("odd Euler characteristic");
    if (chi > 2) throw MalformedMap("Euler characteristic above 2");
    return (2 - chi) / 2;
}

Classification classify(const CombinatorialMap& m) {
    Classification out;
    auto bad = validate_map(m);
    if (!bad.empty()) {
        out.violations = std::move(bad);
        return out;
    }
    if (!is_connected(m)) {
        out.violations.push_back("map is disconnected");
        return out;
    }

    bool valences_even = true, valences_ge4 = true, some_ge4 = false;
    for (int v = 0; v < m.vertex_count(); ++v) {
        const int val = m.valence(v);
        if (val % 2 != 0) valences_even = false;
        if (val < 4) valences_ge4 = false;
        if (val >= 4) some_ge4 = true;
        if (val < 2) out.violations.push_back("vertex of valence < 2");
    }
    if (!valences_even) out.violations.push_back("odd-valence vertex present");

    FaceStructure fs = face_structure(m);
    if (!fs.two_colorable) out.violations.push_back("face adjacency not bipartite");
    const int F = fs.face_count();
    const int blue = fs.blue_count();
    if (2 * blue != F) out.violations.push_back("blue and gray tile counts differ");
    if (F < 4) out.violations.push_back("fewer than four tiles");

    auto sizes = fs.face_sizes();
    const bool homogeneous = std::all_of(sizes.begin(), sizes.end(),
                                         [&](int s) { return s == sizes[0]; });

    if (!out.violations.empty()) return out;

    out.degree = blue;
    if (valences_ge4) {
        out.kind = MapKind::TGraph;
        if (homogeneous) out.gonality = sizes[0];
        return out;
    }
    if (some_ge4 && homogeneous) {
        out.kind = MapKind::RMap;
        out.gonality = sizes[0];
        return out;
    }
    if (!some_ge4) out.violations.push_back("no vertex of valence >= 4");
    if (!homogeneous) out.violations.push_back("tiles are not all the same size");
    return out;
}

bool is_tgraph(const CombinatorialMap& m) {
    Classification c = classify(m);
    return c.kind == MapKind::TGraph;
}

bool is_rmap(const CombinatorialMap& m) {
    Classification c = classify(m);
    return c.kind == MapKind::RMap || (c.kind == MapKind::TGraph && c.gonality > 0);
}

CombinatorialMap forget_valence2(const CombinatorialMap& m) {
    require_valid(m);
    const int V = m.vertex_count();
    std::vector<int> new_id(V, -1);
    int big = 0;
    for (int v = 0; v < V; ++v)
        if (m.valence(v) != 2) new_id[v] = big++;
    if (big == 0) throw MalformedMap("cannot forget valence-2 vertices of a circle");

    // Walk from each half-edge leaving a kept vertex through valence-2
    // vertices to the next kept vertex; each such maximal chain becomes one
    // edge of the result.
    CombinatorialMap out;
    out.rotations.assign(big, {});
    if (m.has_labels()) {
        out.labels.assign(big, 0);
        out.labels_q = m.labels_q;
        for (int v = 0; v < V; ++v)
            if (new_id[v] >= 0) out.labels[new_id[v]] = m.labels[v];
    }

    std::vector<int> chain_end(m.half_edge_count(), -1); // start half -> final half
    std::vector<int> new_half(m.half_edge_count(), -1);
    for (int v = 0; v < V; ++v) {
        if (new_id[v] < 0) continue;
        for (int h : m.rotations[v]) {
            int cur = h;
            while (m.valence(m.head(cur)) == 2) {
                const auto& rot = m.rotations[m.head(cur)];
                cur = (rot[0] == m.twin(cur)) ? rot[1] : rot[0];
            }
            chain_end[h] = cur;
        }
    }

    int next_half = 0;
    for (int v = 0; v < V; ++v) {
        if (new_id[v] < 0) continue;
        for (int h : m.rotations[v]) {
            if (new_half[h] < 0) {
                // The chain starting at h ends at chain_end[h]; its reverse
                // starts at twin(chain_end[h]).
                const int back = m.twin(chain_end[h]);
                new_half[h] = next_half++;
                new_half[back] = next_half++;
            }
            out.rotations[new_id[v]].push_back(new_half[h]);
        }
    }

    out.half_edges.assign(next_half, {});
    for (int v = 0; v < V; ++v) {
        if (new_id[v] < 0) continue;
        for (int h : m.rotations[v]) {
            const int nh = new_half[h];
            const int back = m.twin(chain_end[h]);
            out.half_edges[nh].origin = new_id[v];
            out.half_edges[nh].twin = new_half[back];
        }
    }

    // Blue is decided by half-edge 0 when unset; remap whichever half-edge
    // pins it, walking back to the start of its chain.
    int h = (m.blue_seed >= 0) ? m.blue_seed : 0;
    for (int guard = 0; new_half[h] < 0 && guard < m.half_edge_count(); ++guard) {
        const auto& rot = m.rotations[m.origin(h)];
        const int other = (rot[0] == h) ? rot[1] : rot[0];
        h = m.twin(other);
    }
    if (new_half[h] < 0) throw MalformedMap("valence-2 circle component");
    out.blue_seed = new_half[h];
    require_valid(out);
    return out;
}

CombinatorialMap subdivide_edges(const CombinatorialMap& m, int q) {
    require_valid(m);
    if (!m.has_labels() || m.labels_q != q)
        throw InconsistentLabelling("subdivision requires labels modulo q");
    FaceStructure fs = face_structure(m);
    if (!fs.two_colorable) throw MalformedMap("subdivision requires two-colorable faces");

    // Around every blue tile the labels must be distinct and wind exactly
    // once through Z_q, otherwise the inserted chains cannot close up into
    // q-gons.
    for (int f = 0; f < fs.face_count(); ++f) {
        if (fs.colors[f] != FaceColor::Blue) continue;
        const auto& cyc = fs.cycles[f];
        std::set<int> seen;
        int winding = 0;
        for (size_t i = 0; i < cyc.size(); ++i) {
            const int a = m.labels[m.origin(cyc[i])];
            const int b = m.labels[m.origin(cyc[(i + 1) % cyc.size()])];
            if (!seen.insert(a).second)
                throw InconsistentLabelling("blue tile repeats a label");
            winding += ((b - a) % q + q) % q;
        }
        if (winding != q)
            throw InconsistentLabelling("blue tile labels do not wind once through Z_q");
    }

    const int H = m.half_edge_count();
    CombinatorialMap out;
    out.labels_q = q;
    out.labels = m.labels;
    out.rotations.assign(m.vertex_count(), {});

    // For each edge pick the blue-side half-edge; labels step from its tail.
    std::vector<int> first_half(H, -1); // old half -> replacement first half
    int next_half = 0;
    int next_vertex = m.vertex_count();

    struct PendingChain {
        int hb;      // blue-side old half
        int nu;      // inserted vertex count
        int first_v; // first new vertex id
    };
    std::vector<PendingChain> chains;

    for (int h = 0; h < H; ++h) {
        if (first_half[h] >= 0 || first_half[m.twin(h)] >= 0) continue;
        const int hb = (fs.colors[fs.face_of[h]] == FaceColor::Blue) ? h : m.twin(h);
        const int a = m.labels[m.origin(hb)];
        const int b = m.labels[m.head(hb)];
        if (a == b)
            throw InconsistentLabelling("edge with equal endpoint labels cannot be subdivided");
        const int nu = (b - a - 1 + 2 * q) % q;
        // nu+1 sub-edges: 2(nu+1) new half-edges, nu new vertices.
        first_half[hb] = next_half;
        first_half[m.twin(hb)] = next_half + 2 * nu + 1;
        chains.push_back({hb, nu, next_vertex});
        next_half += 2 * (nu + 1);
        next_vertex += nu;
    }

    out.half_edges.assign(next_half, {});
    out.labels.resize(next_vertex);
    out.rotations.resize(next_vertex);

    for (const auto& ch : chains) {
        const int tail = m.origin(ch.hb);
        const int head = m.head(ch.hb);
        const int base = first_half[ch.hb];
        const int a = m.labels[tail];
        // Sub-edge i runs between chain vertices i-1 and i (with -1 = tail,
        // nu = head); forward half 2i+base, backward 2i+1+base.
        for (int i = 0; i <= ch.nu; ++i) {
            const int fwd = base + 2 * i;
            const int bwd = base + 2 * i + 1;
            out.half_edges[fwd].twin = bwd;
            out.half_edges[bwd].twin = fwd;
            out.half_edges[fwd].origin = (i == 0) ? tail : ch.first_v + i - 1;
            out.half_edges[bwd].origin = (i == ch.nu) ? head : ch.first_v + i;
        }
        for (int i = 0; i < ch.nu; ++i) {
            const int v = ch.first_v + i;
            out.labels[v] = (a + i + 1) % q;
            out.rotations[v] = {base + 2 * (i + 1), base + 2 * i + 1};
        }
    }

    // Old vertices keep their rotation order; each old half-edge becomes the
    // first sub-half leaving that vertex.
    for (int v = 0; v < m.vertex_count(); ++v)
        for (int h : m.rotations[v]) out.rotations[v].push_back(first_half[h]);

    if (m.blue_seed >= 0)
        out.blue_seed = first_half[m.blue_seed];
    else
        out.blue_seed = first_half[(fs.colors[fs.face_of[0]] == FaceColor::Blue) ? 0 : m.twin(0)];

    require_valid(out);
    return out;
}

namespace {

// Deterministic propagation of a flag correspondence a:h0 -> b:g0.
std::optional<std::vector<int>> try_extend(const CombinatorialMap& a, const CombinatorialMap& b,
                                           int h0, int g0) {
    const int H = a.half_edge_count();
    std::vector<int> phi(H, -1);
    std::deque<int> todo;
    phi[h0] = g0;
    todo.push_back(h0);
    std::vector<char> used(H, 0);
    used[g0] = 1;
    while (!todo.empty()) {
        int h = todo.front();
        todo.pop_front();
        const int pairs[2][2] = {{a.twin(h), b.twin(phi[h])},
                                 {a.rot_next(h), b.rot_next(phi[h])}};
        for (auto& pr : pairs) {
            int x = pr[0], y = pr[1];
            if (phi[x] == -1) {
                if (used[y]) return std::nullopt;
                phi[x] = y;
                used[y] = 1;
                todo.push_back(x);
            } else if (phi[x] != y) {
                return std::nullopt;
            }
        }
    }
    for (int h = 0; h < H; ++h)
        if (phi[h] < 0) return std::nullopt; // disconnected map
    return phi;
}

bool check_vertex_consistency(const CombinatorialMap& a, const CombinatorialMap& b,
                              const std::vector<int>& phi, std::vector<int>& vmap) {
    vmap.assign(a.vertex_count(), -1);
    for (int h = 0; h < a.half_edge_count(); ++h) {
        const int va = a.origin(h), vb = b.origin(phi[h]);
        if (vmap[va] == -1)
            vmap[va] = vb;
        else if (vmap[va] != vb)
            return false;
    }
    // Injectivity.
    std::vector<char> used(b.vertex_count(), 0);
    for (int v : vmap) {
        if (v < 0 || used[v]) return false;
        used[v] = 1;
    }
    return true;
}

bool colors_match(const CombinatorialMap& a, const FaceStructure& fa, const FaceStructure& fb,
                  const std::vector<int>& phi) {
    for (int h = 0; h < a.half_edge_count(); ++h)
        if (fa.colors[fa.face_of[h]] != fb.colors[fb.face_of[phi[h]]]) return false;
    return true;
}

} // namespace

IsoWitness map_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b,
                          bool respect_labels) {
    IsoWitness w;
    require_valid(a);
    require_valid(b);
    if (a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count())
        return w;
    if (respect_labels && (!a.has_labels() || !b.has_labels() || a.labels_q != b.labels_q))
        return w;

    FaceStructure fa = face_structure(a);
    FaceStructure fb = face_structure(b);

    const int h0 = 0;
    for (int g0 = 0; g0 < b.half_edge_count(); ++g0) {
        auto phi = try_extend(a, b, h0, g0);
        if (!phi) continue;
        std::vector<int> vmap;
        if (!check_vertex_consistency(a, b, *phi, vmap)) continue;
        if (!colors_match(a, fa, fb, *phi)) continue;
        if (respect_labels) {
            const int q = a.labels_q;
            int shift = ((b.labels[vmap[0]] - a.labels[0]) % q + q) % q;
            bool ok = true;
            for (int v = 0; v < a.vertex_count() && ok; ++v)
                if ((a.labels[v] + shift) % q != b.labels[vmap[v]]) ok = false;
            if (!ok) continue;
            w.label_shift = shift;
        }
        w.isomorphic = true;
        w.half_edge_map = *phi;
        return w;
    }
    return w;
}

std::vector<std::vector<int>> automorphism_vertex_maps(const CombinatorialMap& m) {
    require_valid(m);
    FaceStructure fs = face_structure(m);
    std::vector<std::vector<int>> out;
    for (int g0 = 0; g0 < m.half_edge_count(); ++g0) {
        auto phi = try_extend(m, m, 0, g0);
        if (!phi) continue;
        std::vector<int> vmap;
        if (!check_vertex_consistency(m, m, *phi, vmap)) continue;
        if (!colors_match(m, fs, fs, *phi)) continue;
        out.push_back(std::move(vmap));
    }
    return out;
}

} // namespace rmap
