#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tifs/geometry.hpp"
#include "tifs/tiling.hpp"

namespace tifs {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

/// Axis-aligned viewport; y is ignored for one-dimensional systems.
struct Viewport {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
};

struct RenderSpec {
    Viewport viewport;
    int width = 800;
    int height = 600;
    int depth = 6;               // realization depth for 2D tiles
    std::vector<Rgb> palette;    // one entry per prototile class; empty = generated
};

/// Deterministic palette: golden-angle hue walk.
std::vector<Rgb> default_palette(std::size_t count);

/// Position of a prototile class in prototile_set order.
int prototile_class_index(const System& system, const Prototile& prototile);

/// Viewport enclosing a tiling's support with a small margin.
Viewport fit_viewport(const System& system, const Tiling& tiling, double margin = 0.05);
Viewport fit_viewport(const PointCloud& cloud, double margin = 0.05);

/// Vector rendering: 1D tiles as rectangles of fixed height, 2D tiles as
/// sub-pixel dots of their realization clouds, colored by prototile class,
/// elements in display order.
std::string render_svg(const System& system, const Tiling& tiling, const RenderSpec& spec);

/// Binary P6 raster of a point cloud: one dot per point, nearest-pixel
/// rounding with halves rounding up on both axes, white background, colors
/// keyed by component vertex.
std::string render_ppm(const PointCloud& cloud, const RenderSpec& spec);

} // namespace tifs
