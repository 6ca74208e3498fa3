#ifndef RMAP_RENDER_HPP
#define RMAP_RENDER_HPP

#include <string>

#include "rmap/trace.hpp"

namespace rmap {

struct RenderStyle {
    std::string blue_fill = "#a8c6e8";
    std::string gray_fill = "#d9d9d9";
    std::string critical_color = "#d62728";  // valence >= 4
    std::string cocritical_color = "#2ca02c"; // valence 2
    double label_size = 12.0;
    int samples_per_arc = 64; // polylines are thinned to this many points
    // Viewport in the affine chart; zero width/height means auto-fit.
    double min_x = 0.0, min_y = 0.0, width = 0.0, height = 0.0;
    int pixel_size = 640;
};

// Affine view of an embedded map: one filled path per finite tile, the tile
// reaching farthest toward infinity as the background, arcs clipped at the
// viewport, vertices as colored dots with labels.
// Throws MissingCoords when the map carries no coordinates or the viewport
// degenerates.
std::string render_svg(const EmbeddedRMap& em, const RenderStyle& style = {});

// Graphviz text of the underlying graph, one edge per twin pair; vertex
// captions are "id" or "id:label".
std::string render_dot(const CombinatorialMap& m);

} // namespace rmap

#endif
