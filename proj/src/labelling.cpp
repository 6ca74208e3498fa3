#include "rmap/labelling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace rmap {

namespace {

std::vector<std::vector<int>> blue_boundary_vertices(const CombinatorialMap& m,
                                                     const FaceStructure& fs) {
    std::vector<std::vector<int>> out;
    for (int f = 0; f < fs.face_count(); ++f) {
        if (fs.colors[f] != FaceColor::Blue) continue;
        std::vector<int> vs;
        for (int h : fs.cycles[f]) vs.push_back(m.origin(h));
        out.push_back(std::move(vs));
    }
    return out;
}

} // namespace

CombinatorialMap with_labels(const CombinatorialMap& m, const QLabelling& L) {
    CombinatorialMap out = m;
    out.labels = L.assignment;
    out.labels_q = L.q;
    require_valid(out);
    return out;
}

QLabelling labels_of(const CombinatorialMap& m) {
    if (!m.has_labels()) throw InconsistentLabelling("map carries no labels");
    return QLabelling{m.labels_q, m.labels};
}

ConsistencyVerdict check_consistent(const CombinatorialMap& m, const QLabelling& L,
                                    bool rmap_mode) {
    ConsistencyVerdict v;
    const int q = L.q;
    if (q < 2) {
        v.violations.push_back("q must be at least 2");
        return v;
    }
    if (static_cast<int>(L.assignment.size()) != m.vertex_count()) {
        v.violations.push_back("labelling size differs from vertex count");
        return v;
    }
    for (int l : L.assignment)
        if (l < 0 || l >= q) {
            v.violations.push_back("label out of range");
            return v;
        }

    FaceStructure fs = face_structure(m);
    if (!fs.two_colorable) {
        v.violations.push_back("face adjacency not bipartite");
        return v;
    }

    int tile = -1;
    for (const auto& boundary : blue_boundary_vertices(m, fs)) {
        ++tile;
        const int k = static_cast<int>(boundary.size());
        std::set<int> seen;
        bool dup = false;
        for (int vert : boundary)
            if (!seen.insert(L.assignment[vert]).second) dup = true;
        if (dup) {
            v.violations.push_back("blue tile " + std::to_string(tile) +
                                   " repeats a label");
            continue;
        }
        int winding = 0;
        for (int i = 0; i < k; ++i) {
            const int a = L.assignment[boundary[i]];
            const int b = L.assignment[boundary[(i + 1) % k]];
            winding += ((b - a) % q + q) % q;
        }
        if (winding != q)
            v.violations.push_back("blue tile " + std::to_string(tile) +
                                   " labels do not wind once through Z_q");
        if (rmap_mode && k != q)
            v.violations.push_back("blue tile " + std::to_string(tile) +
                                   " does not carry all q labels");
    }

    std::vector<char> attained(q, 0);
    for (int vert = 0; vert < m.vertex_count(); ++vert)
        if (m.valence(vert) >= 4) attained[L.assignment[vert]] = 1;
    for (int j = 0; j < q; ++j)
        if (!attained[j])
            v.violations.push_back("residue " + std::to_string(j) +
                                   " attained only at valence-2 vertices");

    v.consistent = v.violations.empty();
    return v;
}

ConsistencyVerdict check_consistent(const CombinatorialMap& m, const QLabelling& L) {
    Classification c = classify(m);
    const bool rmap_mode = (c.kind == MapKind::RMap) ||
                           (c.kind == MapKind::TGraph && c.gonality == L.q);
    return check_consistent(m, L, rmap_mode);
}

QRange admissible_q_range(const CombinatorialMap& m) {
    Classification c = classify(m);
    if (c.kind != MapKind::TGraph)
        throw MalformedMap("admissible q-range requires a t-graph");
    const int g = euler_genus(m);
    FaceStructure fs = face_structure(m);
    int rho = 0;
    for (int s : fs.face_sizes()) rho = std::max(rho, s);
    const int n = c.degree;
    int big = 0;
    for (int vert = 0; vert < m.vertex_count(); ++vert)
        if (m.valence(vert) >= 4) ++big;
    QRange r;
    r.lo = std::max(2 + 2 * g, rho);
    r.hi = std::min(2 * n + 2 * g - 2, big);
    return r;
}

std::vector<QLabelling> enumerate_labellings(const CombinatorialMap& m, int q, bool canonical) {
    require_valid(m);
    FaceStructure fs = face_structure(m);
    auto tiles = blue_boundary_vertices(m, fs);
    const int V = m.vertex_count();

    // Order tiles breadth-first by shared vertices so constraints bind early.
    std::vector<std::vector<int>> tiles_of_vertex(V);
    for (size_t t = 0; t < tiles.size(); ++t)
        for (int vert : tiles[t]) tiles_of_vertex[vert].push_back(static_cast<int>(t));
    std::vector<int> tile_order;
    std::vector<char> tile_seen(tiles.size(), 0);
    std::vector<int> queue{0};
    tile_seen[0] = 1;
    while (!queue.empty()) {
        int t = queue.front();
        queue.erase(queue.begin());
        tile_order.push_back(t);
        for (int vert : tiles[t])
            for (int t2 : tiles_of_vertex[vert])
                if (!tile_seen[t2]) {
                    tile_seen[t2] = 1;
                    queue.push_back(t2);
                }
    }
    for (size_t t = 0; t < tiles.size(); ++t)
        if (!tile_seen[t]) tile_order.push_back(static_cast<int>(t));

    // Vertex assignment order: as vertices first appear along tile_order.
    std::vector<int> vert_order;
    std::vector<char> vseen(V, 0);
    for (int t : tile_order)
        for (int vert : tiles[t])
            if (!vseen[vert]) {
                vseen[vert] = 1;
                vert_order.push_back(vert);
            }
    for (int vert = 0; vert < V; ++vert)
        if (!vseen[vert]) vert_order.push_back(vert);

    std::vector<int> assign(V, -1);

    // A tile is feasible iff assigned labels are distinct and, cyclically,
    // every maximal run between assigned labels fits: gap >= #unassigned
    // slots + 1, with total winding exactly q once >= 2 labels are known.
    auto tile_feasible = [&](const std::vector<int>& tile) {
        const int k = static_cast<int>(tile.size());
        if (k == 1) return false; // a 1-gon cannot wind once through Z_q
        std::vector<int> idx;
        std::set<int> seen;
        for (int i = 0; i < k; ++i) {
            const int lab = assign[tile[i]];
            if (lab < 0) continue;
            if (!seen.insert(lab).second) return false;
            idx.push_back(i);
        }
        if (idx.size() < 2) return true;
        int winding = 0;
        for (size_t s = 0; s < idx.size(); ++s) {
            const int i = idx[s];
            const int j = idx[(s + 1) % idx.size()];
            const int a = assign[tile[i]];
            const int b = assign[tile[j]];
            const int gap = ((b - a) % q + q) % q;
            const int between = (j - i - 1 + k) % k;
            if (gap < between + 1) return false;
            winding += gap;
        }
        return winding == q;
    };

    auto feasible_around = [&](int vert) {
        for (int t : tiles_of_vertex[vert])
            if (!tile_feasible(tiles[t])) return false;
        return true;
    };

    std::vector<QLabelling> found;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == vert_order.size()) {
            // Condition (ii).
            std::vector<char> attained(q, 0);
            for (int vert = 0; vert < V; ++vert)
                if (m.valence(vert) >= 4) attained[assign[vert]] = 1;
            for (int j = 0; j < q; ++j)
                if (!attained[j]) return;
            found.push_back(QLabelling{q, assign});
            return;
        }
        const int vert = vert_order[pos];
        const int from = (canonical && vert == 0) ? 0 : 0;
        const int to = (canonical && vert == 0) ? 1 : q;
        for (int lab = from; lab < to; ++lab) {
            assign[vert] = lab;
            if (feasible_around(vert)) rec(pos + 1);
            assign[vert] = -1;
        }
    };
    rec(0);

    std::sort(found.begin(), found.end(),
              [](const QLabelling& a, const QLabelling& b) { return a.assignment < b.assignment; });
    return found;
}

int count_labellings_mod_automorphism(const CombinatorialMap& m,
                                      const std::vector<QLabelling>& canonical) {
    if (canonical.empty()) return 0;
    const int q = canonical.front().q;
    auto autos = automorphism_vertex_maps(m);

    auto canonicalize = [&](std::vector<int> a) {
        // Shift so vertex 0 carries label 0.
        const int s = a[0];
        for (int& x : a) x = ((x - s) % q + q) % q;
        return a;
    };

    std::set<std::vector<int>> remaining;
    for (const auto& L : canonical) remaining.insert(canonicalize(L.assignment));

    int orbits = 0;
    while (!remaining.empty()) {
        ++orbits;
        std::vector<std::vector<int>> orbit{*remaining.begin()};
        std::set<std::vector<int>> seen{*remaining.begin()};
        for (size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& vmap : autos) {
                // New labelling: vertex v gets the label of its preimage.
                std::vector<int> img(orbit[i].size());
                for (size_t v = 0; v < vmap.size(); ++v) img[vmap[v]] = orbit[i][v];
                img = canonicalize(img);
                if (seen.insert(img).second) orbit.push_back(img);
            }
        }
        for (const auto& a : orbit) remaining.erase(a);
    }
    return orbits;
}

PruneResult prune_fake_values(const CombinatorialMap& m) {
    require_valid(m);
    if (!m.has_labels()) throw InconsistentLabelling("pruning requires a labelled map");
    const int q = m.labels_q;

    std::vector<char> has_big(q, 0), present(q, 0);
    for (int v = 0; v < m.vertex_count(); ++v) {
        present[m.labels[v]] = 1;
        if (m.valence(v) >= 4) has_big[m.labels[v]] = 1;
    }
    std::vector<int> fake;
    for (int j = 0; j < q; ++j)
        if (present[j] && !has_big[j]) fake.push_back(j);

    PruneResult out;
    out.removed_residues = fake;
    if (fake.empty()) {
        out.map = m;
        out.labelling = labels_of(m);
        return out;
    }

    // Forget exactly the vertices carrying fake residues (all valence 2):
    // temporarily mark them by clearing everything else from a working copy.
    std::vector<char> is_fake_label(q, 0);
    for (int j : fake) is_fake_label[j] = 1;

    // Renumbering of surviving residues, order preserving.
    std::vector<int> renum(q, -1);
    int next = 0;
    for (int j = 0; j < q; ++j)
        if (!is_fake_label[j]) renum[j] = next++;
    const int q2 = next;

    // Reuse the valence-2 merging walk, but only across fake vertices.
    const int V = m.vertex_count();
    std::vector<int> new_id(V, -1);
    int kept = 0;
    for (int v = 0; v < V; ++v) {
        const bool drop = (m.valence(v) == 2) && is_fake_label[m.labels[v]];
        if (!drop) new_id[v] = kept++;
    }

    CombinatorialMap res;
    res.rotations.assign(kept, {});
    res.labels.assign(kept, 0);
    res.labels_q = q2;
    for (int v = 0; v < V; ++v)
        if (new_id[v] >= 0) res.labels[new_id[v]] = renum[m.labels[v]];

    std::vector<int> chain_end(m.half_edge_count(), -1);
    std::vector<int> new_half(m.half_edge_count(), -1);
    auto dropped = [&](int v) { return new_id[v] < 0; };
    for (int v = 0; v < V; ++v) {
        if (dropped(v)) continue;
        for (int h : m.rotations[v]) {
            int cur = h;
            while (dropped(m.head(cur))) {
                const auto& rot = m.rotations[m.head(cur)];
                cur = (rot[0] == m.twin(cur)) ? rot[1] : rot[0];
            }
            chain_end[h] = cur;
        }
    }
    int next_half = 0;
    for (int v = 0; v < V; ++v) {
        if (dropped(v)) continue;
        for (int h : m.rotations[v]) {
            if (new_half[h] < 0) {
                const int back = m.twin(chain_end[h]);
                new_half[h] = next_half++;
                new_half[back] = next_half++;
            }
            res.rotations[new_id[v]].push_back(new_half[h]);
        }
    }
    res.half_edges.assign(next_half, {});
    for (int v = 0; v < V; ++v) {
        if (dropped(v)) continue;
        for (int h : m.rotations[v]) {
            const int nh = new_half[h];
            const int back = m.twin(chain_end[h]);
            res.half_edges[nh].origin = new_id[v];
            res.half_edges[nh].twin = new_half[back];
        }
    }
    int seed = (m.blue_seed >= 0) ? m.blue_seed : 0;
    for (int guard = 0; new_half[seed] < 0 && guard < m.half_edge_count(); ++guard) {
        const auto& rot = m.rotations[m.origin(seed)];
        const int other = (rot[0] == seed) ? rot[1] : rot[0];
        seed = m.twin(other);
    }
    res.blue_seed = new_half[seed];
    require_valid(res);

    out.map = res;
    out.labelling = labels_of(res);
    return out;
}

} // namespace rmap
