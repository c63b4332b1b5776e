#include "tifs/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tifs {

namespace {

Rgb hue_to_rgb(double hue) {
    double h = std::fmod(hue, 1.0) * 6.0;
    int sector = static_cast<int>(h) % 6;
    double f = h - std::floor(h);
    double v = 0.86, p = 0.25, q = v - (v - p) * f, t = p + (v - p) * f;
    double r = 0, g = 0, b = 0;
    switch (sector) {
    case 0: r = v; g = t; b = p; break;
    case 1: r = q; g = v; b = p; break;
    case 2: r = p; g = v; b = t; break;
    case 3: r = p; g = q; b = v; break;
    case 4: r = t; g = p; b = v; break;
    default: r = v; g = p; b = q; break;
    }
    auto byte = [](double x) { return static_cast<std::uint8_t>(std::lround(x * 255.0)); };
    return {byte(r), byte(g), byte(b)};
}

std::string hex_color(const Rgb& color) {
    char buffer[8];
    std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x", color.r, color.g, color.b);
    return buffer;
}

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

} // namespace

std::vector<Rgb> default_palette(std::size_t count) {
    std::vector<Rgb> palette;
    palette.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        palette.push_back(hue_to_rgb(0.13 + 0.61803398874989485 * static_cast<double>(i)));
    return palette;
}

int prototile_class_index(const System& system, const Prototile& prototile) {
    std::vector<Prototile> classes = prototile_set(system);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == prototile) return static_cast<int>(i);
    throw Error(ErrorKind::ConfigError, "prototile class outside the system");
}

Viewport fit_viewport(const System& system, const Tiling& tiling, double margin) {
    Viewport view;
    if (system.dimension() == 1) {
        Interval support = tiling.tiles.empty() ? Interval{0.0, 1.0} : support_interval(system, tiling);
        double pad = (support.hi - support.lo) * margin + 1e-9;
        view = {support.lo - pad, support.hi + pad, 0.0, 1.0};
        return view;
    }
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const Tile& tile : tiling.tiles) {
        const System::Box& box = system.component_box(tile.prototile.vertex);
        // Corners of the component box through the tile map bound its support.
        for (int corner = 0; corner < 4; ++corner) {
            Vector x(2);
            x << (corner & 1 ? box.hi(0) : box.lo(0)), (corner & 2 ? box.hi(1) : box.lo(1));
            Vector y = tile.map(x);
            if (first) {
                x0 = x1 = y(0);
                y0 = y1 = y(1);
                first = false;
            }
            x0 = std::min(x0, y(0));
            x1 = std::max(x1, y(0));
            y0 = std::min(y0, y(1));
            y1 = std::max(y1, y(1));
        }
    }
    double pad_x = (x1 - x0) * margin + 1e-9;
    double pad_y = (y1 - y0) * margin + 1e-9;
    return {x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y};
}

Viewport fit_viewport(const PointCloud& cloud, double margin) {
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const auto& part : cloud.parts) {
        for (std::size_t i = 0; i < part.coords.size(); i += static_cast<std::size_t>(cloud.dimension)) {
            double x = part.coords[i];
            double y = cloud.dimension > 1 ? part.coords[i + 1] : 0.0;
            if (first) {
                x0 = x1 = x;
                y0 = y1 = y;
                first = false;
            }
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    double pad_x = (x1 - x0) * margin + 1e-9;
    double pad_y = (y1 - y0) * margin + 1e-9;
    return {x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y};
}

std::string render_svg(const System& system, const Tiling& tiling, const RenderSpec& spec) {
    if (system.dimension() > 2)
        throw Error(ErrorKind::UnsupportedDimension, "vector rendering supports M <= 2");
    if (spec.width <= 0 || spec.height <= 0)
        throw Error(ErrorKind::ConfigError, "pixel sizes must be positive");
    if (!(spec.viewport.x1 > spec.viewport.x0))
        throw Error(ErrorKind::ConfigError, "viewport is empty");

    std::size_t class_count = prototile_set(system).size();
    std::vector<Rgb> palette = spec.palette.empty() ? default_palette(class_count) : spec.palette;
    if (palette.size() < class_count)
        throw Error(ErrorKind::ConfigError, "palette does not cover all prototile classes");

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\">\n";

    double sx = spec.width / (spec.viewport.x1 - spec.viewport.x0);
    auto to_px_x = [&](double x) { return (x - spec.viewport.x0) * sx; };

    if (system.dimension() == 1) {
        // Fixed tile height of 10% of the drawing width, centered.
        double band = 0.10 * spec.width;
        double y = 0.5 * (spec.height - band);
        for (std::size_t index : display_order(system, tiling)) {
            const Tile& tile = tiling.tiles[index];
            Interval support = support_interval(system, tile);
            const Rgb& color = palette[static_cast<std::size_t>(prototile_class_index(system, tile.prototile))];
            out += "<rect x=\"" + fmt(to_px_x(support.lo)) + "\" y=\"" + fmt(y) + "\" width=\"" +
                   fmt((support.hi - support.lo) * sx) + "\" height=\"" + fmt(band) +
                   "\" fill=\"" + hex_color(color) + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        }
    } else {
        if (!(spec.viewport.y1 > spec.viewport.y0))
            throw Error(ErrorKind::ConfigError, "viewport is empty");
        double sy = spec.height / (spec.viewport.y1 - spec.viewport.y0);
        auto to_px_y = [&](double y) { return (spec.viewport.y1 - y) * sy; };
        PointCloud components = attractor_deterministic(system, spec.depth);
        for (std::size_t index : display_order(system, tiling)) {
            const Tile& tile = tiling.tiles[index];
            const Rgb& color = palette[static_cast<std::size_t>(prototile_class_index(system, tile.prototile))];
            PointCloud cloud = realize_tile(system, components, tile);
            out += "<g fill=\"" + hex_color(color) + "\">\n";
            const auto& coords = cloud.parts.front().coords;
            for (std::size_t i = 0; i < coords.size(); i += 2)
                out += "<circle cx=\"" + fmt(to_px_x(coords[i])) + "\" cy=\"" + fmt(to_px_y(coords[i + 1])) +
                       "\" r=\"0.4\"/>\n";
            out += "</g>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_ppm(const PointCloud& cloud, const RenderSpec& spec) {
    if (cloud.dimension != 2)
        throw Error(ErrorKind::UnsupportedDimension, "raster rendering needs M = 2");
    if (spec.width <= 0 || spec.height <= 0)
        throw Error(ErrorKind::ConfigError, "pixel sizes must be positive");
    if (!(spec.viewport.x1 > spec.viewport.x0) || !(spec.viewport.y1 > spec.viewport.y0))
        throw Error(ErrorKind::ConfigError, "viewport is empty");

    std::vector<Rgb> palette = spec.palette.empty() ? default_palette(cloud.parts.size()) : spec.palette;
    if (palette.size() < cloud.parts.size())
        throw Error(ErrorKind::ConfigError, "palette does not cover all components");

    std::string pixels(static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height) * 3,
                       static_cast<char>(0xff));

    for (std::size_t part_index = 0; part_index < cloud.parts.size(); ++part_index) {
        const Rgb& color = palette[part_index];
        const auto& coords = cloud.parts[part_index].coords;
        for (std::size_t i = 0; i < coords.size(); i += 2) {
            double u = (coords[i] - spec.viewport.x0) / (spec.viewport.x1 - spec.viewport.x0) *
                       (spec.width - 1);
            double v = (spec.viewport.y1 - coords[i + 1]) / (spec.viewport.y1 - spec.viewport.y0) *
                       (spec.height - 1);
            long px = static_cast<long>(std::floor(u + 0.5)); // round half up
            long py = static_cast<long>(std::floor(v + 0.5));
            if (px < 0 || px >= spec.width || py < 0 || py >= spec.height) continue;
            std::size_t offset =
                (static_cast<std::size_t>(py) * static_cast<std::size_t>(spec.width) +
                 static_cast<std::size_t>(px)) * 3;
            pixels[offset] = static_cast<char>(color.r);
            pixels[offset + 1] = static_cast<char>(color.g);
            pixels[offset + 2] = static_cast<char>(color.b);
        }
    }

    std::string out = "P6\n" + std::to_string(spec.width) + " " + std::to_string(spec.height) + "\n255\n";
    out += pixels;
    return out;
}

} // namespace tifs
