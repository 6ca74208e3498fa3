#include "rmap/fixtures.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "rmap/labelling.hpp"

namespace rmap {
namespace fixtures {

CombinatorialMap from_face_gluing(const std::vector<int>& face_sizes,
                                  const std::vector<int>& twin) {
    const int F = static_cast<int>(face_sizes.size());
    std::vector<int> offset(F + 1, 0);
    for (int f = 0; f < F; ++f) offset[f + 1] = offset[f] + face_sizes[f];
    const int H = offset[F];
    if (static_cast<int>(twin.size()) != H) throw MalformedMap("twin table size mismatch");

    // Face permutation: next side counterclockwise within the same face.
    std::vector<int> fnext(H), face_of(H);
    for (int f = 0; f < F; ++f)
        for (int k = 0; k < face_sizes[f]; ++k) {
            fnext[offset[f] + k] = offset[f] + (k + 1) % face_sizes[f];
            face_of[offset[f] + k] = f;
        }
    std::vector<int> fprev(H);
    for (int h = 0; h < H; ++h) fprev[fnext[h]] = h;

    // Vertices are orbits of h -> twin(fprev(h)); that orbit reads the
    // counterclockwise rotation at the common origin.
    CombinatorialMap m;
    m.half_edges.assign(H, {});
    for (int h = 0; h < H; ++h) {
        m.half_edges[h].twin = twin[h];
        if (twin[twin[h]] != h || twin[h] == h) throw MalformedMap("twin is not a free involution");
    }
    std::vector<int> vertex_of(H, -1);
    for (int h0 = 0; h0 < H; ++h0) {
        if (vertex_of[h0] >= 0) continue;
        std::vector<int> rot;
        int h = h0;
        do {
            vertex_of[h] = m.vertex_count();
            rot.push_back(h);
            h = twin[fprev[h]];
        } while (h != h0);
        m.rotations.push_back(std::move(rot));
    }
    for (int h = 0; h < H; ++h) m.half_edges[h].origin = vertex_of[h];
    m.blue_seed = 0;
    require_valid(m);
    return m;
}

CombinatorialMap bigon_rmap(int n) {
    Constellation c;
    c.n = n;
    c.q = 2;
    Perm fwd(n), bwd(n);
    for (int i = 0; i < n; ++i) {
        fwd[i] = (i + 1) % n;
        bwd[(i + 1) % n] = i;
    }
    c.sigmas = {fwd, bwd};
    return constellation_to_rmap(c);
}

CombinatorialMap theta_map() {
    CombinatorialMap m;
    m.half_edges.assign(6, {});
    // Edges a=0/1, b=2/3, c=4/5 from u to v.
    for (int e = 0; e < 3; ++e) {
        m.half_edges[2 * e].twin = 2 * e + 1;
        m.half_edges[2 * e + 1].twin = 2 * e;
        m.half_edges[2 * e].origin = 0;
        m.half_edges[2 * e + 1].origin = 1;
    }
    m.rotations = {{0, 2, 4}, {5, 3, 1}};
    require_valid(m);
    return m;
}

namespace {

// Parity 4-labelling of chessboard corners: (x,y) mod 2 -> Z_4.
int parity_label(int x, int y) {
    const int px = ((x % 2) + 2) % 2, py = ((y % 2) + 2) % 2;
    if (px == 0 && py == 0) return 0;
    if (px == 1 && py == 0) return 1;
    if (px == 1 && py == 1) return 2;
    return 3;
}

// Chessboard builder over an arbitrary cell set with a neighbor rule.
// Sides per cell, counterclockwise: 0=S, 1=E, 2=N, 3=W.
struct GridSpec {
    std::vector<std::pair<int, int>> cells;
    // neighbor(cell index, side) -> cell index sharing that geometric edge
    std::function<int(int, int)> neighbor;
};

CombinatorialMap build_grid(const GridSpec& spec) {
    const int F = static_cast<int>(spec.cells.size());
    std::vector<int> sizes(F, 4);
    std::vector<int> twin(4 * F, -1);
    const int opposite[4] = {2, 3, 0, 1};
    for (int f = 0; f < F; ++f)
        for (int k = 0; k < 4; ++k) {
            const int g = spec.neighbor(f, k);
            twin[4 * f + k] = 4 * g + opposite[k];
        }
    CombinatorialMap m = from_face_gluing(sizes, twin);

    // Labels: the origin corner of side k of cell (x,y):
    //   S -> (x, y), E -> (x+1, y), N -> (x+1, y+1), W -> (x, y+1).
    m.labels.assign(m.vertex_count(), -1);
    m.labels_q = 4;
    for (int f = 0; f < F; ++f) {
        const auto [x, y] = spec.cells[f];
        const int corner[4][2] = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
        for (int k = 0; k < 4; ++k) {
            const int v = m.origin(4 * f + k);
            const int lab = parity_label(corner[k][0], corner[k][1]);
            if (m.labels[v] >= 0 && m.labels[v] != lab)
                throw MalformedMap("grid identification breaks the parity labelling");
            m.labels[v] = lab;
        }
    }
    // Blue tiles have even x+y; pin the seed on such a cell.
    for (int f = 0; f < F; ++f) {
        const auto [x, y] = spec.cells[f];
        if ((x + y) % 2 == 0) {
            m.blue_seed = 4 * f;
            break;
        }
    }
    require_valid(m);
    return m;
}

} // namespace

CombinatorialMap chessboard_torus(int cols, int rows) {
    if (cols < 2 || rows < 2 || cols % 2 || rows % 2)
        throw MalformedMap("chessboard needs even cols, rows >= 2");
    GridSpec spec;
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < cols; ++x) spec.cells.push_back({x, y});
    auto id = [cols](int x, int y) { return y * cols + x; };
    spec.neighbor = [=](int f, int side) {
        const int x = f % cols, y = f / cols;
        switch (side) {
            case 0: return id(x, (y + rows - 1) % rows); // S
            case 1: return id((x + 1) % cols, y);        // E
            case 2: return id(x, (y + 1) % rows);        // N
            default: return id((x + cols - 1) % cols, y); // W
        }
    };
    return build_grid(spec);
}

CombinatorialMap l_chessboard() {
    // Cells of ([0,4]x[0,2]) u ([0,2]x[2,4]); boundary identified by
    // translations: bottom <-> top over x in [0,2], bottom <-> inner top
    // over x in [2,4], left <-> right over y in [0,2], left <-> inner right
    // over y in [2,4].
    GridSpec spec;
    std::map<std::pair<int, int>, int> idx;
    for (int y = 0; y < 4; ++y)
        for (int x = 0; x < 4; ++x) {
            if (y >= 2 && x >= 2) continue;
            idx[{x, y}] = static_cast<int>(spec.cells.size());
            spec.cells.push_back({x, y});
        }
    auto cells = spec.cells;
    spec.neighbor = [idx, cells](int f, int side) {
        auto [x, y] = cells[f];
        int nx = x, ny = y;
        switch (side) {
            case 0: ny = y - 1; break;
            case 1: nx = x + 1; break;
            case 2: ny = y + 1; break;
            default: nx = x - 1; break;
        }
        auto valid = [](int a, int b) {
            return b >= 0 && b <= 3 && a >= 0 && ((b <= 1) ? a <= 3 : a <= 1);
        };
        if (!valid(nx, ny)) {
            switch (side) {
                case 0: nx = x; ny = (x <= 1) ? 3 : 1; break; // off the bottom
                case 2: nx = x; ny = 0; break;                // off the top (outer or inner)
                case 1: nx = 0; ny = y; break;                // off the right (outer or inner)
                default: nx = (y <= 1) ? 3 : 1; ny = y; break; // off the left
            }
        }
        return idx.at({nx, ny});
    };
    return build_grid(spec);
}

CombinatorialMap hyperelliptic_rmap(int genus) {
    if (genus < 1) throw MalformedMap("hyperelliptic fixture needs genus >= 1");
    const int q = 2 * genus + 2;
    Constellation c;
    c.n = 2;
    c.q = q;
    c.sigmas.assign(q, Perm{1, 0});
    return constellation_to_rmap(c);
}

CombinatorialMap fake_value_base() {
    // Degree-4, 5 critical values; the last sigma closes the product.
    Constellation c;
    c.n = 4;
    c.q = 5;
    c.sigmas = {
        {1, 0, 2, 3}, // (0 1)
        {0, 2, 1, 3}, // (1 2)
        {0, 1, 3, 2}, // (2 3)
        {0, 1, 3, 2}, // (2 3)
        {1, 2, 0, 3}, // closes sigma4..sigma0 = id
    };
    ConstellationVerdict v = validate_constellation(c);
    if (!v.valid) throw InvalidConstellation("fixture constellation invalid: " + v.witness);
    return constellation_to_rmap(c);
}

CombinatorialMap fake_value_rmap() {
    CombinatorialMap base = fake_value_base();
    // Reinterpret the 5-labelling inside Z_6; formerly adjacent labels 4 -> 0
    // now differ by 2, so subdivision inserts one vertex labelled 5 on each
    // such edge and nowhere else.
    base.labels_q = 6;
    return subdivide_edges(base, 6);
}

Constellation belyi_cubic_constellation() {
    Constellation c;
    c.n = 3;
    c.q = 3;
    c.sigmas = {
        {1, 0, 2}, // (0 1)
        {0, 2, 1}, // (1 2)
        {1, 2, 0}, // (0 1 2)
    };
    return c;
}

CombinatorialMap empty_range_tgraph() {
    // Two vertices of valence 6 joined by six parallel edges on the torus,
    // with tiles of sizes (2, 4, 2, 4): the 4-gon tiles force q >= 4 while
    // only two vertices are available, so no q is admissible.  The rotation
    // at the second vertex is found by a deterministic search.
    std::vector<int> order{3, 5, 7, 9, 11};
    std::sort(order.begin(), order.end());
    do {
        CombinatorialMap m;
        m.half_edges.assign(12, {});
        for (int e = 0; e < 6; ++e) {
            m.half_edges[2 * e].twin = 2 * e + 1;
            m.half_edges[2 * e + 1].twin = 2 * e;
            m.half_edges[2 * e].origin = 0;
            m.half_edges[2 * e + 1].origin = 1;
        }
        m.rotations = {{0, 2, 4, 6, 8, 10}, {1}};
        for (int h : order) m.rotations[1].push_back(h);
        Classification c = classify(m);
        if (c.kind != MapKind::TGraph) continue;
        FaceStructure fs = face_structure(m);
        auto sizes = fs.face_sizes();
        std::sort(sizes.begin(), sizes.end());
        if (sizes == std::vector<int>{2, 2, 4, 4}) return m;
    } while (std::next_permutation(order.begin(), order.end()));
    throw MalformedMap("no empty-range fixture found");
}

RationalFunction deg5_function() {
    // z(z^2-1)(z^2-4) / (z-3)
    Polynomial num = Polynomial::from_real({0, 4, 0, -5, 0, 1});
    Polynomial den = Polynomial::from_real({-3, 1});
    return RationalFunction(num, den);
}

RationalFunction belyi_cubic_function() {
    // 3z^2 - 2z^3
    Polynomial num = Polynomial::from_real({0, 0, 3, -2});
    Polynomial den = Polynomial::from_real({1});
    return RationalFunction(num, den);
}

CombinatorialMap deg5_tgraph() {
    // Frozen from forget_valence2 of the traced pullback of deg5_function()
    // under the real line.  Vertices 0..4 are the finite critical points in
    // increasing order of their critical value, vertex 5 is infinity; the
    // labels are the pulled-back real-line labelling.  Tiles have sizes
    // 2,3,4; the admissible gonality range is [4, 6].
    CombinatorialMap m;
    m.rotations = {{0, 2, 4, 6},
                   {8, 10, 12, 14},
                   {3, 16, 15, 18},
                   {11, 20, 22, 24},
                   {21, 26, 25, 23},
                   {7, 5, 19, 13, 27, 9, 17, 1}};
    const int data[28][2] = {{1, 0},  {0, 5},  {3, 0},  {2, 2},  {5, 0},  {4, 5},  {7, 0},
                             {6, 5},  {9, 1},  {8, 5},  {11, 1}, {10, 3}, {13, 1}, {12, 5},
                             {15, 1}, {14, 2}, {17, 2}, {16, 5}, {19, 2}, {18, 5}, {21, 3},
                             {20, 4}, {23, 3}, {22, 4}, {25, 3}, {24, 4}, {27, 4}, {26, 5}};
    m.half_edges.assign(28, {});
    for (int h = 0; h < 28; ++h) m.half_edges[h] = {data[h][0], data[h][1]};
    m.labels = {0, 1, 2, 3, 4, 5};
    m.labels_q = 6;
    m.blue_seed = 6;
    require_valid(m);
    return m;
}

} // namespace fixtures
} // namespace rmap
