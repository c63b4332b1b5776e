#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"

using namespace tifs;
using namespace tifs::testing;

namespace {

std::vector<double> sorted_1d(const PointCloud& cloud) {
    std::vector<double> values;
    for (const auto& part : cloud.parts) values.insert(values.end(), part.coords.begin(), part.coords.end());
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace

TEST_CASE("deterministic attractor clouds") {
    SUBCASE("BIN depth 3 from seed 0 is the dyadic grid") {
        PointCloud cloud = attractor_deterministic(fixtures::bin(), 3);
        std::vector<double> values = sorted_1d(cloud);
        REQUIRE(values.size() == 8);
        for (int i = 0; i < 8; ++i) CHECK(values[static_cast<std::size_t>(i)] == doctest::Approx(i / 8.0));
    }

    SUBCASE("depth 0 returns the seeds") {
        std::vector<Vector> seeds{Vector::Constant(1, 0.25)};
        PointCloud cloud = attractor_deterministic(fixtures::fib(), 0, seeds);
        REQUIRE(cloud.total_points() == 1);
        CHECK(cloud.parts.front().coords.front() == 0.25);
    }

    SUBCASE("SIER depth 8 sits close to the depth 12 cloud") {
        PointCloud coarse = attractor_deterministic(fixtures::sier(), 8);
        PointCloud fine = attractor_deterministic(fixtures::sier(), 12);
        CHECK(coarse.total_points() == 6561); // 3^8
        double diameter = std::sqrt(2.0);
        CHECK(cloud_one_sided_within(coarse, fine, diameter * std::pow(0.5, 8)));
    }

    SUBCASE("one Hutchinson sweep equals the word-built cloud") {
        for (const System* system : all_fixtures()) {
            const int depth = 4;
            PointCloud swept = attractor_deterministic(*system, depth);
            // Independent construction straight from the definition.
            std::vector<std::vector<double>> expected(static_cast<std::size_t>(system->vertex_count()));
            Vector seed = Vector::Zero(system->dimension());
            for (const Word& word : enumerate_words(*system, depth, Orientation::Forward)) {
                Vector point = compose(*system, word)(seed);
                std::size_t vi = 0;
                while (system->vertices()[vi] != *system->start_vertex(word)) ++vi;
                expected[vi].insert(expected[vi].end(), point.data(), point.data() + point.size());
            }
            for (std::size_t vi = 0; vi < expected.size(); ++vi) {
                std::vector<double> got = swept.parts[vi].coords;
                std::vector<double> want = expected[vi];
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < got.size(); ++i)
                    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
            }
        }
    }

    SUBCASE("error bound shrinks geometrically") {
        const System& fib = fixtures::fib();
        PointCloud d3 = attractor_deterministic(fib, 3);
        PointCloud d4 = attractor_deterministic(fib, 4);
        CHECK(d4.error_bound == doctest::Approx(d3.error_bound * fib.contraction()));
    }

    SUBCASE("BIN deep cloud fills the unit interval") {
        const int depth = 12;
        PointCloud cloud = attractor_deterministic(fixtures::bin(), depth);
        std::vector<double> values = sorted_1d(cloud);
        CHECK(values.front() >= -1e-12);
        CHECK(values.back() <= 1.0 + 1e-12);
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            CHECK(values[i + 1] - values[i] <= std::pow(0.5, depth) + 1e-12);
    }

    SUBCASE("the point cap is enforced") {
        CHECK_THROWS_AS((void)attractor_deterministic(fixtures::sier(), 20), Error);
        CHECK_THROWS_AS((void)attractor_deterministic(fixtures::bin(), 8, {}, 100), Error);
    }
}

TEST_CASE("chaos game") {
    const System& bin = fixtures::bin();

    SUBCASE("fixed seeds reproduce bit-identical clouds") {
        PointCloud a = chaos_game(bin, 1000, 0.0, 7);
        PointCloud b = chaos_game(bin, 1000, 0.0, 7);
        CHECK(format_cloud(a) == format_cloud(b));
        PointCloud c = chaos_game(bin, 1000, 0.0, 8);
        CHECK(format_cloud(a) != format_cloud(c));
    }

    SUBCASE("a single emitted point lies in the attractor bounding box") {
        PointCloud cloud = chaos_game(bin, 1, 0.0, 3);
        REQUIRE(cloud.total_points() == 1);
        double x = cloud.parts.front().coords.front();
        CHECK(x >= -1e-9);
        CHECK(x <= 1.0 + 1e-9);
    }

    SUBCASE("orbit points approach the attractor") {
        PointCloud orbit = chaos_game(bin, 20000, 0.3, 11);
        PointCloud reference = attractor_deterministic(bin, 14);
        CHECK(cloud_one_sided_within(orbit, reference, 1e-3));
    }

    SUBCASE("orbit respects the graph on GD2") {
        const System& gd2 = fixtures::gd2();
        PointCloud orbit = chaos_game(gd2, 5000, 0.0, 5);
        // Every emitted point sits near the component it is tagged with.
        for (const auto& part : orbit.parts) {
            const System::Box& box = gd2.component_box(part.vertex);
            for (double x : part.coords) {
                CHECK(x >= box.lo(0) - 1e-6);
                CHECK(x <= box.hi(0) + 1e-6);
            }
        }
    }
}

TEST_CASE("pi realizations") {
    SUBCASE("BIN word 21 lands on [1/2, 3/4]") {
        PointCloud cloud = pi_realize(fixtures::bin(), fw({2, 1}), 10);
        std::vector<double> values = sorted_1d(cloud);
        CHECK(values.front() == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(values.back() == doctest::Approx(0.75).epsilon(1e-3));
    }

    SUBCASE("FIB word 2 lands on [a, 1]") {
        double a = fixtures::fib().ratio();
        PointCloud cloud = pi_realize(fixtures::fib(), fw({2}), 10);
        std::vector<double> values = sorted_1d(cloud);
        CHECK(values.front() == doctest::Approx(a).epsilon(1e-9));
        CHECK(values.back() == doctest::Approx(1.0).epsilon(1e-3));
    }

    SUBCASE("the empty word returns every component") {
        PointCloud cloud = pi_realize(fixtures::gd2(), Word(Orientation::Forward), 6);
        CHECK(cloud.parts.size() == 2);
    }

    SUBCASE("realizations nest along prefixes") {
        const System& fib = fixtures::fib();
        Word word = fw({1, 1, 2});
        PointCloud whole = pi_realize(fib, word, 10);
        for (int k = 0; k <= word.length(); ++k) {
            PointCloud prefix_cloud = pi_realize(fib, word.prefix(k), 10);
            CHECK(cloud_one_sided_within(whole, prefix_cloud, 2.0 * prefix_cloud.error_bound + 1e-12));
        }
    }
}

TEST_CASE("splitmix64 is the documented sequence") {
    SplitMix64 rng(0);
    // Reference values of the splitmix64 stream seeded with zero.
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);
}

