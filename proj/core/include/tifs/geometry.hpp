#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tifs/system.hpp"

namespace tifs {

/// Points of one attractor component, stored flat (dimension doubles per
/// point, point-major).
struct VertexCloud {
    int vertex = 0;
    std::vector<double> coords;
};

/// Controlled approximation of the attractor components. Every stored point
/// lies within error_bound of the true component, and refining by one level
/// shrinks the bound by the contraction factor.
struct PointCloud {
    int dimension = 0;
    int depth = 0;
    double error_bound = 0.0;
    std::vector<VertexCloud> parts;

    std::size_t total_points() const;
    const VertexCloud* part(int vertex) const;
};

/// Number of points a depth-d deterministic cloud would hold (saturating).
std::uint64_t cloud_size_at_depth(const System& system, int depth);

constexpr std::uint64_t kDefaultCloudCap = std::uint64_t(1) << 22;

/// Depth-d refinement of per-vertex seed points: component v collects
/// f_sigma(seed) over the admissible words of length d rooted at v, computed
/// as d sweeps of the Hutchinson operator. Seeds are given per vertex in
/// vertex-list order; empty means all origins.
PointCloud attractor_deterministic(const System& system, int depth, const std::vector<Vector>& seeds = {},
                                   std::uint64_t cap = kDefaultCloudCap);

/// splitmix64; the documented generator used everywhere randomness is
/// needed, so fixed seeds reproduce bit-identical output on any platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform index in [0, n) via modulo (bias is irrelevant at our n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

/// Random orbit x_n = f_{e_n}(x_{n-1}) along a reversed-admissible edge
/// sequence, uniform over the edges entering the current vertex. The first
/// burn_in points are discarded; each emitted point is tagged with the
/// vertex of the component it has landed in.
PointCloud chaos_game(const System& system, std::size_t n_points, double seed_value, std::uint64_t rng_seed,
                      std::size_t burn_in = 64);

/// Cloud of f_sigma applied to the component of the word's end vertex; the
/// empty word yields the whole attractor.
PointCloud pi_realize(const System& system, const Word& sigma, int depth,
                      std::uint64_t cap = kDefaultCloudCap);

/// Hash grid over points for one-sided distance queries with radius <= cell.
class PointGrid {
public:
    PointGrid(int dimension, double cell);

    void insert(const double* point);
    void insert(const VertexCloud& part);
    void insert(const PointCloud& cloud);

    bool any_within(const double* point, double radius) const;
    /// Squared distance to the nearest stored point within radius, or +inf.
    double nearest_within(const double* point, double radius) const;

private:
    std::uint64_t key_of(const double* point) const;
    int dimension_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
    std::vector<double> points_;
};

/// True when every point of `query` lies within r of some point of `ref`.
bool cloud_one_sided_within(const PointCloud& query, const PointCloud& ref, double r);

/// Smallest distance found between points of distinct components, probing
/// only up to `cutoff`; +inf when all components are farther apart.
double min_component_separation(const PointCloud& cloud, double cutoff);

/// One point per line: vertex tag then coordinates, 17 significant digits.
std::string format_cloud(const PointCloud& cloud);

} // namespace tifs
