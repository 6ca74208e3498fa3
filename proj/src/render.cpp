#include "rmap/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rmap {

namespace {

struct Box {
    double x0, y0, x1, y1;
    double w() const { return x1 - x0; }
    double h() const { return y1 - y0; }
};

Cx clamp_into(Cx z, const Box& b) {
    return Cx(std::clamp(z.real(), b.x0, b.x1), std::clamp(z.imag(), b.y0, b.y1));
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

std::string render_svg(const EmbeddedRMap& em, const RenderStyle& style) {
    if (em.coords.empty() || em.arcs.empty())
        throw MissingCoords("embedded map carries no coordinates");
    if ((style.width != 0.0 || style.height != 0.0) &&
        (style.width <= 0.0 || style.height <= 0.0))
        throw MissingCoords("viewport has nonpositive area");

    Box box{};
    if (style.width > 0.0) {
        box = {style.min_x, style.min_y, style.min_x + style.width, style.min_y + style.height};
    } else {
        double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
        double vertex_scale = 0.0;
        for (const SpherePoint& p : em.coords)
            if (!p.infinite) vertex_scale = std::max(vertex_scale, std::abs(p.value));
        auto grow = [&](Cx z) {
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        };
        for (const SpherePoint& p : em.coords)
            if (!p.infinite) grow(p.value);
        // Frame moderate arc samples too, so rays leaving the vertex hull
        // stay visible.
        const double cap = 1.6 * (1.0 + vertex_scale);
        for (const auto& arc : em.arcs)
            for (const ArcSample& s : arc) {
                const Cx z = s.finite();
                if (std::isfinite(z.real()) && std::abs(z) <= cap) grow(z);
            }
        if (x0 > x1) throw MissingCoords("no finite vertex to frame");
        const double pad = 0.12 * std::max({x1 - x0, y1 - y0, 1.0});
        box = {x0 - pad, y0 - pad, x1 + pad, y1 + pad};
    }

    const double scale = style.pixel_size / std::max(box.w(), box.h());
    auto px = [&](Cx z) {
        return Cx((z.real() - box.x0) * scale, (box.y1 - z.imag()) * scale);
    };

    FaceStructure fs = face_structure(em.map);

    // Background tile: the one whose boundary reaches farthest out.
    int background = 0;
    double best = -1.0;
    for (int f = 0; f < fs.face_count(); ++f) {
        double far = 0.0;
        for (int h : fs.cycles[f])
            for (const ArcSample& s : em.arcs[h / 2]) far = std::max(far, std::abs(s.finite()));
        if (far > best) {
            best = far;
            background = f;
        }
    }

    std::ostringstream svg;
    const double W = box.w() * scale, H = box.h() * scale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
        << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
    const bool bg_blue = fs.colors[background] == FaceColor::Blue;
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H)
        << "\" fill=\"" << (bg_blue ? style.blue_fill : style.gray_fill) << "\"/>\n";

    for (int f = 0; f < fs.face_count(); ++f) {
        if (f == background) continue;
        std::ostringstream d;
        bool first = true;
        for (int h : fs.cycles[f]) {
            std::vector<Cx> pts;
            const auto& arc = em.arcs[h / 2];
            const size_t stride =
                std::max<size_t>(1, arc.size() / std::max(style.samples_per_arc, 2));
            for (size_t k = 0; k < arc.size(); k += stride) {
                const size_t idx = (h % 2 == 0) ? k : arc.size() - 1 - k;
                pts.push_back(arc[idx].finite());
            }
            if (!arc.empty())
                pts.push_back(((h % 2 == 0) ? arc.back() : arc.front()).finite());
            for (Cx z : pts) {
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
                const Cx p = px(clamp_into(z, box));
                d << (first ? "M " : "L ") << fmt(p.real()) << " " << fmt(p.imag()) << " ";
                first = false;
            }
        }
        d << "Z";
        const bool blue = fs.colors[f] == FaceColor::Blue;
        svg << "  <path d=\"" << d.str() << "\" fill=\""
            << (blue ? style.blue_fill : style.gray_fill)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }

    for (int v = 0; v < em.map.vertex_count(); ++v) {
        const SpherePoint& p = em.coords[v];
        if (p.infinite) continue;
        if (p.value.real() < box.x0 || p.value.real() > box.x1 || p.value.imag() < box.y0 ||
            p.value.imag() > box.y1)
            continue;
        const Cx c = px(p.value);
        const bool critical = em.map.valence(v) >= 4;
        svg << "  <circle cx=\"" << fmt(c.real()) << "\" cy=\"" << fmt(c.imag())
            << "\" r=\"4\" fill=\""
            << (critical ? style.critical_color : style.cocritical_color) << "\"/>\n";
        if (em.map.has_labels())
            svg << "  <text x=\"" << fmt(c.real() + 6) << "\" y=\"" << fmt(c.imag() - 6)
                << "\" font-size=\"" << fmt(style.label_size) << "\">" << em.map.labels[v]
                << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_dot(const CombinatorialMap& m) {
    std::ostringstream dot;
    dot << "graph {\n  node [shape=circle];\n";
    for (int v = 0; v < m.vertex_count(); ++v) {
        dot << "  v" << v << " [label=\"" << v;
        if (m.has_labels()) dot << ":" << m.labels[v];
        dot << "\"];\n";
    }
    for (int h = 0; h < m.half_edge_count(); ++h) {
        if (h < m.twin(h)) dot << "  v" << m.origin(h) << " -- v" << m.origin(m.twin(h)) << ";\n";
    }
    dot << "}\n";
    return dot.str();
}

} // namespace rmap
