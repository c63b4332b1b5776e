#include "tifs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tifs {

std::size_t PointCloud::total_points() const {
    std::size_t n = 0;
    for (const auto& part : parts) n += part.coords.size() / static_cast<std::size_t>(dimension);
    return n;
}

const VertexCloud* PointCloud::part(int vertex) const {
    for (const auto& p : parts)
        if (p.vertex == vertex) return &p;
    return nullptr;
}

std::uint64_t cloud_size_at_depth(const System& system, int depth) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(system.vertex_count()), 1);
    for (int d = 0; d < depth; ++d) {
        std::vector<std::uint64_t> next(counts.size(), 0);
        for (std::size_t vi = 0; vi < counts.size(); ++vi) {
            for (int e : system.edges_from(system.vertices()[vi])) {
                std::size_t hi = 0;
                while (system.vertices()[hi] != system.head(e)) ++hi;
                next[vi] = std::min(cap, next[vi] + counts[hi]);
            }
        }
        counts.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) total = std::min(cap, total + c);
    return total;
}

namespace {

double seed_error_bound(const System& system, const std::vector<Vector>& seeds) {
    // Distance from each seed to the farthest corner of its component box.
    double bound = 0.0;
    for (int vi = 0; vi < system.vertex_count(); ++vi) {
        const System::Box& box = system.component_box(system.vertices()[static_cast<std::size_t>(vi)]);
        const Vector& seed = seeds[static_cast<std::size_t>(vi)];
        double d2 = 0.0;
        for (int i = 0; i < system.dimension(); ++i) {
            double far = std::max(std::abs(seed(i) - box.lo(i)), std::abs(seed(i) - box.hi(i)));
            d2 += far * far;
        }
        bound = std::max(bound, std::sqrt(d2));
    }
    return bound;
}

std::vector<Vector> normalize_seeds(const System& system, const std::vector<Vector>& seeds) {
    if (seeds.empty())
        return std::vector<Vector>(static_cast<std::size_t>(system.vertex_count()),
                                   Vector::Zero(system.dimension()));
    if (static_cast<int>(seeds.size()) != system.vertex_count())
        throw Error(ErrorKind::ConfigError, "expected one seed point per vertex");
    return seeds;
}

} // namespace

PointCloud attractor_deterministic(const System& system, int depth, const std::vector<Vector>& seeds,
                                   std::uint64_t cap) {
    if (depth < 0) throw Error(ErrorKind::ConfigError, "depth must be >= 0");
    if (cloud_size_at_depth(system, depth) > cap)
        throw Error(ErrorKind::DepthTooLarge, "depth " + std::to_string(depth) + " exceeds the point cap " +
                                                  std::to_string(cap));

    std::vector<Vector> seed_points = normalize_seeds(system, seeds);
    const int m = system.dimension();
    const std::size_t nv = static_cast<std::size_t>(system.vertex_count());

    std::vector<std::vector<double>> parts(nv);
    for (std::size_t vi = 0; vi < nv; ++vi)
        parts[vi].assign(seed_points[vi].data(), seed_points[vi].data() + m);

    auto position_of = [&](int vertex) {
        std::size_t vi = 0;
        while (system.vertices()[vi] != vertex) ++vi;
        return vi;
    };

    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<double>> next(nv);
        for (std::size_t vi = 0; vi < nv; ++vi) {
            for (int e : system.edges_from(system.vertices()[vi])) {
                const SimilitudeSpec& spec = system.similitude(e);
                const std::vector<double>& source = parts[position_of(system.head(e))];
                const std::size_t n = source.size() / static_cast<std::size_t>(m);
                Eigen::Map<const Eigen::MatrixXd> in(source.data(), m, static_cast<Eigen::Index>(n));
                Eigen::MatrixXd out =
                    (system.pow_ratio(spec.a) * (spec.rotation * in)).colwise() + spec.translation;
                std::vector<double>& dest = next[vi];
                dest.insert(dest.end(), out.data(), out.data() + out.size());
            }
        }
        parts.swap(next);
    }

    PointCloud cloud;
    cloud.dimension = m;
    cloud.depth = depth;
    cloud.error_bound = seed_error_bound(system, seed_points) * std::pow(system.contraction(), depth);
    cloud.parts.resize(nv);
    for (std::size_t vi = 0; vi < nv; ++vi) {
        cloud.parts[vi].vertex = system.vertices()[vi];
        cloud.parts[vi].coords = std::move(parts[vi]);
    }
    return cloud;
}

PointCloud chaos_game(const System& system, std::size_t n_points, double seed_value, std::uint64_t rng_seed,
                      std::size_t burn_in) {
    if (n_points < 1) throw Error(ErrorKind::ConfigError, "n_points must be >= 1");
    const int m = system.dimension();

    std::vector<AffineMap> maps;
    maps.reserve(static_cast<std::size_t>(system.map_count()));
    for (int e = 1; e <= system.map_count(); ++e) maps.push_back(system.map_of(e));

    PointCloud cloud;
    cloud.dimension = m;
    cloud.depth = static_cast<int>(burn_in);
    cloud.parts.resize(static_cast<std::size_t>(system.vertex_count()));
    for (std::size_t vi = 0; vi < cloud.parts.size(); ++vi)
        cloud.parts[vi].vertex = system.vertices()[vi];

    auto part_of = [&](int vertex) -> VertexCloud& {
        std::size_t vi = 0;
        while (system.vertices()[vi] != vertex) ++vi;
        return cloud.parts[vi];
    };

    SplitMix64 rng(rng_seed);
    int current = system.vertices().front();
    Vector x = Vector::Constant(m, seed_value);

    cloud.error_bound = seed_error_bound(system, std::vector<Vector>(cloud.parts.size(), x)) *
                        std::pow(system.contraction(), static_cast<double>(burn_in));

    const std::size_t total = burn_in + n_points;
    for (std::size_t i = 0; i < total; ++i) {
        const std::vector<int>& choices = system.edges_into(current);
        int e = choices[static_cast<std::size_t>(rng.below(choices.size()))];
        x = maps[static_cast<std::size_t>(e - 1)](x);
        current = system.tail(e);
        if (i >= burn_in) {
            VertexCloud& part = part_of(current);
            part.coords.insert(part.coords.end(), x.data(), x.data() + m);
        }
    }
    return cloud;
}

PointCloud pi_realize(const System& system, const Word& sigma, int depth, std::uint64_t cap) {
    if (sigma.orientation() != Orientation::Forward)
        throw Error(ErrorKind::InadmissibleWord, "pi takes forward words");
    system.require_admissible(sigma);

    PointCloud base = attractor_deterministic(system, depth, {}, cap);
    if (sigma.empty()) return base;

    AffineMap f = compose(system, sigma, MapSign::Forward);
    const VertexCloud* source = base.part(*system.end_vertex(sigma));

    PointCloud cloud;
    cloud.dimension = base.dimension;
    cloud.depth = depth;
    cloud.error_bound = base.error_bound * system.pow_ratio(system.xi(sigma));
    VertexCloud part;
    part.vertex = *system.start_vertex(sigma);
    const std::size_t n = source->coords.size() / static_cast<std::size_t>(base.dimension);
    Eigen::Map<const Eigen::MatrixXd> in(source->coords.data(), base.dimension, static_cast<Eigen::Index>(n));
    Eigen::MatrixXd out = (f.scale_factor() * (f.rotation() * in)).colwise() + f.shift();
    part.coords.assign(out.data(), out.data() + out.size());
    cloud.parts.push_back(std::move(part));
    return cloud;
}

PointGrid::PointGrid(int dimension, double cell) : dimension_(dimension), cell_(cell) {}

std::uint64_t PointGrid::key_of(const double* point) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < dimension_; ++i) {
        auto q = static_cast<std::int64_t>(std::floor(point[i] / cell_));
        h ^= static_cast<std::uint64_t>(q) + 0x9E3779B97F4A7C15ull;
        h *= 1099511628211ull;
    }
    return h;
}

void PointGrid::insert(const double* point) {
    std::size_t index = points_.size();
    points_.insert(points_.end(), point, point + dimension_);
    cells_[key_of(point)].push_back(index);
}

void PointGrid::insert(const VertexCloud& part) {
    for (std::size_t i = 0; i < part.coords.size(); i += static_cast<std::size_t>(dimension_))
        insert(part.coords.data() + i);
}

void PointGrid::insert(const PointCloud& cloud) {
    for (const auto& part : cloud.parts) insert(part);
}

double PointGrid::nearest_within(const double* point, double radius) const {
    const int range = static_cast<int>(std::ceil(radius / cell_));
    double best = std::numeric_limits<double>::infinity();

    std::vector<double> probe(static_cast<std::size_t>(dimension_));
    std::vector<int> offset(static_cast<std::size_t>(dimension_), -range);
    while (true) {
        for (int i = 0; i < dimension_; ++i)
            probe[static_cast<std::size_t>(i)] = point[i] + offset[static_cast<std::size_t>(i)] * cell_;
        auto it = cells_.find(key_of(probe.data()));
        if (it != cells_.end()) {
            for (std::size_t index : it->second) {
                double d2 = 0.0;
                for (int i = 0; i < dimension_; ++i) {
                    double d = points_[index + static_cast<std::size_t>(i)] - point[i];
                    d2 += d * d;
                }
                best = std::min(best, d2);
            }
        }
        int i = 0;
        while (i < dimension_ && ++offset[static_cast<std::size_t>(i)] > range) {
            offset[static_cast<std::size_t>(i)] = -range;
            ++i;
        }
        if (i == dimension_) break;
    }
    double dist = std::sqrt(best);
    return dist <= radius ? dist : std::numeric_limits<double>::infinity();
}

bool PointGrid::any_within(const double* point, double radius) const {
    return nearest_within(point, radius) < std::numeric_limits<double>::infinity();
}

bool cloud_one_sided_within(const PointCloud& query, const PointCloud& ref, double r) {
    PointGrid grid(ref.dimension, r);
    grid.insert(ref);
    for (const auto& part : query.parts)
        for (std::size_t i = 0; i < part.coords.size(); i += static_cast<std::size_t>(query.dimension))
            if (!grid.any_within(part.coords.data() + i, r)) return false;
    return true;
}

double min_component_separation(const PointCloud& cloud, double cutoff) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cloud.parts.size(); ++i) {
        PointGrid grid(cloud.dimension, cutoff);
        grid.insert(cloud.parts[i]);
        for (std::size_t j = i + 1; j < cloud.parts.size(); ++j) {
            const auto& other = cloud.parts[j];
            for (std::size_t k = 0; k < other.coords.size(); k += static_cast<std::size_t>(cloud.dimension))
                best = std::min(best, grid.nearest_within(other.coords.data() + k, cutoff));
        }
    }
    return best;
}

std::string format_cloud(const PointCloud& cloud) {
    std::string out;
    char buffer[64];
    for (const auto& part : cloud.parts) {
        for (std::size_t i = 0; i < part.coords.size(); i += static_cast<std::size_t>(cloud.dimension)) {
            out += std::to_string(part.vertex);
            for (int d = 0; d < cloud.dimension; ++d) {
                std::snprintf(buffer, sizeof(buffer), " %.17g", part.coords[i + static_cast<std::size_t>(d)]);
                out += buffer;
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace tifs
