#include "tifs/tiling.hpp"

#include <algorithm>
#include <cmath>

namespace tifs {

Tiling canonical_tiling(const System& system, int level, std::optional<int> root) {
    Tiling tiling;
    tiling.level = level;
    tiling.root = root;
    AffineMap blowup = AffineMap::scaling(system.dimension(), system.ratio(), -level);
    for (Word& word : omega(system, level, root).words) {
        Tile tile;
        tile.map = blowup * compose(system, word, MapSign::Forward);
        tile.map.set_provenance(Word(Orientation::Reversed), word);
        tile.prototile = {*system.end_vertex(word), system.xi(word) - level};
        tile.body = std::move(word);
        tiling.tiles.push_back(std::move(tile));
    }
    return tiling;
}

Tiling tiling_of(const System& system, const Word& theta, std::optional<int> empty_root) {
    if (theta.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "tiling contexts are reversed words");
    system.require_admissible(theta);

    std::optional<int> root;
    if (theta.empty()) {
        root = empty_root;
        if (!root && system.vertex_count() == 1) root = system.vertices().front();
    } else {
        root = system.end_vertex(theta);
    }

    int level = system.xi(theta);
    AffineMap outer = compose(system, theta, MapSign::Inverse);

    Tiling tiling;
    tiling.level = level;
    tiling.context_word = theta;
    tiling.root = root;
    for (Word& word : omega(system, level, root).words) {
        Tile tile;
        tile.context = theta;
        tile.map = outer * compose(system, word, MapSign::Forward);
        tile.map.set_provenance(theta, word);
        tile.prototile = {*system.end_vertex(word), system.xi(word) - level};
        tile.body = std::move(word);
        tiling.tiles.push_back(std::move(tile));
    }
    return tiling;
}

std::vector<Prototile> prototile_set(const System& system) {
    std::vector<Prototile> classes;
    for (int vertex : system.vertices())
        for (int exponent = 1; exponent <= system.a_max(); ++exponent)
            classes.push_back({vertex, exponent});
    return classes;
}

PointCloud realize_prototile(const System& system, const Prototile& prototile, int depth) {
    PointCloud components = attractor_deterministic(system, depth);
    const VertexCloud* source = components.part(prototile.vertex);
    double scale = system.pow_ratio(prototile.scale_exponent);

    PointCloud cloud;
    cloud.dimension = components.dimension;
    cloud.depth = depth;
    cloud.error_bound = components.error_bound * scale;
    VertexCloud part;
    part.vertex = prototile.vertex;
    part.coords.reserve(source->coords.size());
    for (double c : source->coords) part.coords.push_back(scale * c);
    cloud.parts.push_back(std::move(part));
    return cloud;
}

CanonicalForm canonical_form(const System& system, const Word& theta) {
    if (theta.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "tiling contexts are reversed words");
    system.require_admissible(theta);

    CanonicalForm form;
    form.level = system.xi(theta);
    form.vertex = system.end_vertex(theta);
    form.isometry = compose(system, theta, MapSign::Inverse) *
                    AffineMap::scaling(system.dimension(), system.ratio(), form.level);
    return form;
}

std::vector<CanonicalBlock> decompose_canonical(const System& system, int k, int l,
                                                std::optional<int> root) {
    if (k < system.a_max() + l)
        throw Error(ErrorKind::LevelTooSmall, "need level >= a_max + l = " +
                                                  std::to_string(system.a_max() + l) + ", got " +
                                                  std::to_string(k));
    std::vector<CanonicalBlock> blocks;
    for (const Word& prefix : omega(system, l, root).words) {
        CanonicalBlock block;
        block.prefix = prefix;
        block.level = k - system.xi(prefix);
        block.vertex = *system.end_vertex(prefix);
        block.isometry = AffineMap::scaling(system.dimension(), system.ratio(), -k) *
                         compose(system, prefix, MapSign::Forward) *
                         AffineMap::scaling(system.dimension(), system.ratio(), k - system.xi(prefix));
        blocks.push_back(std::move(block));
    }
    return blocks;
}

bool tile_equivalent(const Tile& a, const Tile& b, double tolerance) {
    return a.prototile == b.prototile && a.map.approx_equal(b.map, tolerance);
}

TileMatcher::TileMatcher(const Tiling& tiling, double tolerance) : tiling_(tiling), tolerance_(tolerance) {
    order_.resize(tiling.tiles.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::sort(order_.begin(), order_.end(), [&](std::size_t lhs, std::size_t rhs) {
        const Tile& a = tiling.tiles[lhs];
        const Tile& b = tiling.tiles[rhs];
        if (!(a.prototile == b.prototile)) return a.prototile < b.prototile;
        return a.map.shift()(0) < b.map.shift()(0);
    });
}

const Tile* TileMatcher::find(const Tile& tile) const {
    // Locate the window of candidates whose first shift coordinate is near.
    auto lower = std::partition_point(order_.begin(), order_.end(), [&](std::size_t index) {
        const Tile& candidate = tiling_.tiles[index];
        if (!(candidate.prototile == tile.prototile)) return candidate.prototile < tile.prototile;
        return candidate.map.shift()(0) < tile.map.shift()(0) - tolerance_;
    });
    for (auto it = lower; it != order_.end(); ++it) {
        const Tile& candidate = tiling_.tiles[*it];
        if (!(candidate.prototile == tile.prototile)) break;
        if (candidate.map.shift()(0) > tile.map.shift()(0) + tolerance_) break;
        if (tile_equivalent(candidate, tile, tolerance_)) return &candidate;
    }
    return nullptr;
}

bool tiling_subset(const Tiling& inner, const Tiling& outer, double tolerance) {
    TileMatcher matcher(outer, tolerance);
    for (const Tile& tile : inner.tiles)
        if (!matcher.contains(tile)) return false;
    return true;
}

bool tiling_equal(const Tiling& a, const Tiling& b, double tolerance) {
    return a.tiles.size() == b.tiles.size() && tiling_subset(a, b, tolerance) &&
           tiling_subset(b, a, tolerance);
}

Tiling apply_isometry(const IsometryRecord& isometry, const Tiling& tiling) {
    Tiling result;
    result.level = tiling.level;
    result.root = tiling.root;
    result.tiles.reserve(tiling.tiles.size());
    for (const Tile& tile : tiling.tiles) {
        Tile moved = tile;
        moved.map = isometry * tile.map;
        result.tiles.push_back(std::move(moved));
    }
    return result;
}

PointCloud realize_tile(const System& system, const PointCloud& components, const Tile& tile) {
    (void)system;
    const VertexCloud* source = components.part(tile.prototile.vertex);

    PointCloud cloud;
    cloud.dimension = components.dimension;
    cloud.depth = components.depth;
    cloud.error_bound = components.error_bound * std::abs(tile.map.scale_factor());
    VertexCloud part;
    part.vertex = tile.prototile.vertex;
    const std::size_t n = source->coords.size() / static_cast<std::size_t>(components.dimension);
    Eigen::Map<const Eigen::MatrixXd> in(source->coords.data(), components.dimension,
                                         static_cast<Eigen::Index>(n));
    Eigen::MatrixXd out = (tile.map.scale_factor() * (tile.map.rotation() * in)).colwise() + tile.map.shift();
    part.coords.assign(out.data(), out.data() + out.size());
    cloud.parts.push_back(std::move(part));
    return cloud;
}

Interval support_interval(const System& system, const Tile& tile) {
    if (system.dimension() != 1)
        throw Error(ErrorKind::UnsupportedDimension, "support intervals are one-dimensional");
    const System::Box& box = system.component_box(tile.prototile.vertex);
    double a = tile.map(box.lo)(0);
    double b = tile.map(box.hi)(0);
    return {std::min(a, b), std::max(a, b)};
}

Interval support_interval(const System& system, const Tiling& tiling) {
    Interval support{0.0, 0.0};
    bool first = true;
    for (const Tile& tile : tiling.tiles) {
        Interval t = support_interval(system, tile);
        if (first) {
            support = t;
            first = false;
        } else {
            support.lo = std::min(support.lo, t.lo);
            support.hi = std::max(support.hi, t.hi);
        }
    }
    return support;
}

bool interiors_disjoint_1d(const System& system, const Tiling& tiling, double tolerance) {
    std::vector<Interval> intervals;
    intervals.reserve(tiling.tiles.size());
    for (const Tile& tile : tiling.tiles) intervals.push_back(support_interval(system, tile));
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i)
        if (intervals[i].hi > intervals[i + 1].lo + tolerance) return false;
    return true;
}

double tiling_overlap_fraction(const System& system, const Tiling& tiling, int depth) {
    if (tiling.tiles.empty()) return 0.0;
    PointCloud components = attractor_deterministic(system, depth);

    double cell = 0.0;
    for (const Tile& tile : tiling.tiles)
        cell = std::max(cell, 2.0 * components.error_bound * std::abs(tile.map.scale_factor()));
    cell = std::max(cell, 1e-12);

    // Cell -> (first claiming tile, seen a second claimant).
    std::unordered_map<std::uint64_t, std::pair<std::size_t, bool>> cells;
    const int m = system.dimension();
    for (std::size_t index = 0; index < tiling.tiles.size(); ++index) {
        PointCloud cloud = realize_tile(system, components, tiling.tiles[index]);
        const auto& coords = cloud.parts.front().coords;
        for (std::size_t i = 0; i < coords.size(); i += static_cast<std::size_t>(m)) {
            std::uint64_t key = 1469598103934665603ull;
            for (int d = 0; d < m; ++d) {
                auto q = static_cast<std::int64_t>(std::floor(coords[i + static_cast<std::size_t>(d)] / cell));
                key ^= static_cast<std::uint64_t>(q) + 0x9E3779B97F4A7C15ull;
                key *= 1099511628211ull;
            }
            auto [it, inserted] = cells.try_emplace(key, index, false);
            if (!inserted && it->second.first != index) it->second.second = true;
        }
    }

    std::size_t shared = 0;
    for (const auto& [key, claim] : cells)
        if (claim.second) ++shared;
    return static_cast<double>(shared) / static_cast<double>(cells.size());
}

char letter_for_exponent(int exponent) {
    if (exponent == 1) return 'l';
    if (exponent == 2) return 's';
    return static_cast<char>('0' + exponent);
}

std::string letters(const System& system, const Tiling& tiling) {
    std::string out;
    for (std::size_t index : display_order(system, tiling))
        out += letter_for_exponent(tiling.tiles[index].prototile.scale_exponent);
    return out;
}

std::vector<std::size_t> display_order(const System& system, const Tiling& tiling) {
    std::vector<std::size_t> order(tiling.tiles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (system.dimension() == 1) {
        std::vector<double> position(tiling.tiles.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            position[i] = support_interval(system, tiling.tiles[i]).lo;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (position[a] != position[b]) return position[a] < position[b];
            return tiling.tiles[a].body < tiling.tiles[b].body;
        });
    } else {
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return tiling.tiles[a].body < tiling.tiles[b].body;
        });
    }
    return order;
}

} // namespace tifs
