#include "tifs/fixtures.hpp"

namespace tifs {
namespace fixtures {

namespace {

SimilitudeSpec map_1d(int a, double q, int tail, int head) {
    SimilitudeSpec spec;
    spec.a = a;
    spec.rotation = Matrix::Identity(1, 1);
    spec.translation = Vector::Constant(1, q);
    spec.tail = tail;
    spec.head = head;
    return spec;
}

SimilitudeSpec map_2d(int a, double qx, double qy, int tail, int head) {
    SimilitudeSpec spec;
    spec.a = a;
    spec.rotation = Matrix::Identity(2, 2);
    spec.translation = Vector(2);
    spec.translation << qx, qy;
    spec.tail = tail;
    spec.head = head;
    return spec;
}

constexpr const char* kGoldenRatio = "0.61803398874989484820458683436563811772";

} // namespace

SystemConfig bin_config() {
    SystemConfig config;
    config.dimension = 1;
    config.base_ratio = "0.5";
    config.vertices = {1};
    config.maps = {map_1d(1, 0.0, 1, 1), map_1d(1, 0.5, 1, 1)};
    return config;
}

SystemConfig fib_config() {
    SystemConfig config;
    config.dimension = 1;
    config.base_ratio = kGoldenRatio;
    config.vertices = {1};
    double a = std::stod(kGoldenRatio);
    // f_1 = a x, f_2 = a^2 x + 1 - a^2 with 1 - a^2 = a.
    config.maps = {map_1d(1, 0.0, 1, 1), map_1d(2, a, 1, 1)};
    return config;
}

SystemConfig sier_config() {
    SystemConfig config;
    config.dimension = 2;
    config.base_ratio = "0.5";
    config.vertices = {1};
    config.maps = {map_2d(1, 0.0, 0.0, 1, 1), map_2d(1, 0.5, 0.0, 1, 1), map_2d(1, 0.0, 0.5, 1, 1)};
    return config;
}

SystemConfig gd2_config() {
    SystemConfig config;
    config.dimension = 1;
    config.base_ratio = "0.5";
    config.vertices = {1, 2};
    // Translations keep the two components strongly separated:
    // A^1 in [0, 4/7] and A^2 = A^1/4 + 2.
    config.maps = {map_1d(1, 0.0, 1, 1), map_1d(1, -0.5, 1, 2), map_1d(2, 2.0, 2, 1)};
    return config;
}

const System& bin() {
    static System system = make_system(bin_config());
    return system;
}

const System& fib() {
    static System system = make_system(fib_config());
    return system;
}

const System& sier() {
    static System system = make_system(sier_config());
    return system;
}

const System& gd2() {
    static System system = make_system(gd2_config());
    return system;
}

} // namespace fixtures
} // namespace tifs
