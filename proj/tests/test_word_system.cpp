#include <doctest.h>

#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "test_support.hpp"
#include "tifs/tiling.hpp"

using namespace tifs;
using namespace tifs::testing;

TEST_CASE("validator accepts the bundled systems") {
    for (auto make : {fixtures::bin_config, fixtures::fib_config, fixtures::sier_config, fixtures::gd2_config}) {
        ValidationResult result = validate_tifs(make());
        CHECK(result.ok());
        CHECK(result.warnings.empty());
        REQUIRE(result.system.has_value());
    }
    CHECK(fixtures::fib().a_max() == 2);
    CHECK(fixtures::gd2().a_max() == 2);
    CHECK(fixtures::bin().contraction() == doctest::Approx(0.5));
}

TEST_CASE("validator rejects broken systems") {
    SUBCASE("gcd of exponents") {
        SystemConfig config = fixtures::bin_config();
        config.maps[0].a = 2;
        config.maps[1].a = 2;
        ValidationResult result = validate_tifs(config);
        REQUIRE_FALSE(result.ok());
        CHECK(result.errors.front().kind == ErrorKind::GcdNotOne);
    }
    SUBCASE("non-orthogonal linear part") {
        SystemConfig config = fixtures::bin_config();
        config.maps[1].rotation(0, 0) = 1.5;
        ValidationResult result = validate_tifs(config);
        REQUIRE_FALSE(result.ok());
        CHECK(result.errors.front().kind == ErrorKind::NotOrthogonal);
    }
    SUBCASE("expanding base ratio") {
        SystemConfig config = fixtures::bin_config();
        config.base_ratio = "1.25";
        ValidationResult result = validate_tifs(config);
        REQUIRE_FALSE(result.ok());
        CHECK(result.errors.front().kind == ErrorKind::NotContractive);
    }
    SUBCASE("unparseable ratio") {
        SystemConfig config = fixtures::bin_config();
        config.base_ratio = "half";
        ValidationResult result = validate_tifs(config);
        REQUIRE_FALSE(result.ok());
        CHECK(result.errors.front().kind == ErrorKind::NotContractive);
    }
    SUBCASE("vertex without an incoming edge") {
        SystemConfig config = fixtures::gd2_config();
        config.maps[2].head = 2; // edge 3 now 2 -> 2; vertex 1 loses its return path
        ValidationResult result = validate_tifs(config);
        REQUIRE_FALSE(result.ok());
        CHECK(result.errors.front().kind == ErrorKind::NotStronglyConnected);
    }
    SUBCASE("overlapping components are a warning") {
        // Move the second component on top of the first.
        SystemConfig config = fixtures::gd2_config();
        config.maps[1].translation(0) = 1.0; // f_2 = x/2 + 1 pushes A^1 across A^2... keep valid graph
        config.maps[2].translation(0) = 0.0; // A^2 = A^1/4 overlaps A^1
        ValidationResult result = validate_tifs(config);
        CHECK(result.ok());
        REQUIRE_FALSE(result.warnings.empty());
        CHECK(result.warnings.front().kind == ErrorKind::ComponentsOverlap);
    }
}

TEST_CASE("word enumeration") {
    SUBCASE("BIN length 2 is the full product") {
        auto words = enumerate_words(fixtures::bin(), 2, Orientation::Forward);
        CHECK(word_strings(words) == std::vector<std::string>{"11", "12", "21", "22"});
    }
    SUBCASE("length 0 is the empty word") {
        auto words = enumerate_words(fixtures::fib(), 0, Orientation::Forward);
        REQUIRE(words.size() == 1);
        CHECK(words.front().empty());
    }
    SUBCASE("GD2 length 2 matches a brute-force adjacency check") {
        const System& system = fixtures::gd2();
        std::set<std::string> expected;
        for (int e1 = 1; e1 <= 3; ++e1)
            for (int e2 = 1; e2 <= 3; ++e2)
                if (system.head(e1) == system.tail(e2))
                    expected.insert(Word({e1, e2}, Orientation::Forward).str());
        auto words = word_strings(enumerate_words(system, 2, Orientation::Forward));
        std::set<std::string> got(words.begin(), words.end());
        CHECK(got == expected);
        CHECK(got == std::set<std::string>{"11", "12", "23", "31", "32"});
    }
    SUBCASE("rooted enumeration keeps only words starting at the root") {
        auto words = enumerate_words(fixtures::gd2(), 2, Orientation::Forward, 2);
        CHECK(word_strings(words) == std::vector<std::string>{"31", "32"});
    }
    SUBCASE("counts satisfy the adjacency-matrix recurrence") {
        for (const System* system : all_fixtures()) {
            // Independent count: powers of the edge adjacency matrix.
            int n = system->map_count();
            std::vector<std::vector<long long>> adjacency(n, std::vector<long long>(n, 0));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (system->head(i) == system->tail(j)) adjacency[i - 1][j - 1] = 1;
            std::vector<long long> row_counts(n, 1); // continuations of length 0 from each edge
            for (int k = 1; k <= 12; ++k) {
                long long expected = 0;
                if (k == 1) {
                    expected = n;
                } else {
                    std::vector<long long> next(n, 0);
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) next[i] += adjacency[i][j] * row_counts[j];
                    row_counts = next;
                    for (long long c : row_counts) expected += c;
                }
                CHECK(static_cast<long long>(enumerate_words(*system, k, Orientation::Forward).size()) ==
                      expected);
            }
        }
    }
}

TEST_CASE("shift") {
    CHECK(shift(fw({1, 2, 1}), 1) == fw({2, 1}));
    CHECK(shift(fw({1}), 1).empty());
    CHECK(shift(Word(Orientation::Forward), 1).empty());
    CHECK(shift(fw({1, 2, 1}), 5).empty());
}

TEST_CASE("xi bookkeeping") {
    const System& fib = fixtures::fib();
    CHECK(xi(fib, fw({1, 1, 2})) == 4);
    CHECK(xi(fib, Word(Orientation::Forward)) == 0);
    CHECK(xi_minus(fib, Word(Orientation::Forward)) == 0);
    CHECK(xi_minus(fib, fw({1, 1, 2})) == 2);

    const System& bin = fixtures::bin();
    for (const Word& word : enumerate_words(bin, 5, Orientation::Forward))
        CHECK(xi(bin, word) == word.length());

    SUBCASE("additive over admissible concatenations") {
        const System& gd2 = fixtures::gd2();
        for (const Word& a : enumerate_words(gd2, 3, Orientation::Forward))
            for (const Word& b : enumerate_words(gd2, 3, Orientation::Forward)) {
                Word joined = a.concatenated(b);
                if (!gd2.admissible(joined)) continue;
                CHECK(xi(gd2, joined) == xi(gd2, a) + xi(gd2, b));
            }
    }
}

TEST_CASE("compose") {
    const System& bin = fixtures::bin();

    SUBCASE("BIN forward 21 is x/4 + 1/2") {
        AffineMap map = compose(bin, fw({2, 1}));
        CHECK(map.exponent() == 2);
        CHECK(map.linear()(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(map.shift()(0) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("BIN inverse 21 is 4x - 1") {
        AffineMap map = compose(bin, fw({2, 1}), MapSign::Inverse);
        CHECK(map.exponent() == -2);
        CHECK(map.linear()(0, 0) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(map.shift()(0) == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("empty word composes to the identity") {
        AffineMap map = compose(bin, Word(Orientation::Forward));
        CHECK(map.exponent() == 0);
        CHECK(map.approx_equal(AffineMap::identity(1, bin.ratio()), 0.0));
    }
    SUBCASE("inadmissible words are rejected") {
        CHECK_THROWS_AS((void)compose(fixtures::gd2(), fw({1, 3})), Error);
    }

    SUBCASE("prefix composition property") {
        for (const System* system : all_fixtures()) {
            for (const Word& word : enumerate_words(*system, 5, Orientation::Forward)) {
                AffineMap whole = compose(*system, word);
                for (int k = 0; k <= word.length(); ++k) {
                    AffineMap split_map = compose(*system, word.prefix(k)) * compose(*system, shift(word, k));
                    CHECK(whole.approx_equal(split_map, 1e-12));
                }
            }
        }
    }

    SUBCASE("inverse of a word against its transpose") {
        for (const System* system : all_fixtures()) {
            for (const Word& word : enumerate_words(*system, 4, Orientation::Forward)) {
                AffineMap inverse_map = compose(*system, word, MapSign::Inverse);
                Word transposed = word.transposed();
                REQUIRE(system->admissible(transposed));
                AffineMap product = inverse_map * compose(*system, transposed);
                CHECK(inverse_map.exponent() + xi(*system, word) == 0);
                CHECK(product.approx_equal(AffineMap::identity(system->dimension(), system->ratio()), 1e-12));
            }
        }
    }
}

TEST_CASE("hausdorff dimension via the spectral radius") {
    CHECK(hausdorff_dimension_osc(fixtures::bin()) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hausdorff_dimension_osc(fixtures::fib()) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(hausdorff_dimension_osc(fixtures::sier()) ==
          doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-6));

    SUBCASE("GD2 root checked against the scalar characteristic equation") {
        // The Perron condition reduces to u^3 + u - 1 = 0 with u = (1/2)^D.
        double u = 0.5;
        for (int i = 0; i < 200; ++i) u = u - (u * u * u + u - 1.0) / (3.0 * u * u + 1.0);
        double expected = std::log(u) / std::log(0.5);
        CHECK(hausdorff_dimension_osc(fixtures::gd2()) == doctest::Approx(expected).epsilon(1e-9));
    }

    SUBCASE("dimension beyond the ambient space is an error") {
        // Four halving maps need dimension 2 > M = 1.
        SystemConfig config = fixtures::bin_config();
        config.maps.push_back(config.maps[0]);
        config.maps.push_back(config.maps[1]);
        config.maps[2].translation(0) = 2.0;
        config.maps[3].translation(0) = 3.0;
        CHECK_THROWS_AS((void)hausdorff_dimension_osc(make_system(config)), Error);
    }
}

TEST_CASE("operations are safe to run concurrently over one system") {
    const System& fib = fixtures::fib();
    const System& gd2 = fixtures::gd2();
    SymbolicTiling expected_omega = omega(fib, 10);
    Tiling expected_tiling = canonical_tiling(gd2, 6);

    std::vector<std::thread> workers;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (int round = 0; round < 5; ++round) {
                if (!(omega(fib, 10) == expected_omega)) ++mismatches;
                if (!tiling_equal(canonical_tiling(gd2, 6), expected_tiling, 0.0)) ++mismatches;
                if (std::abs(hausdorff_dimension_osc(fib) - 1.0) > 1e-6) ++mismatches;
                PointCloud cloud = chaos_game(fib, 500, 0.0, static_cast<std::uint64_t>(t));
                if (cloud.total_points() != 500) ++mismatches;
            }
        });
    }
    for (std::thread& worker : workers) worker.join();
    CHECK(mismatches == 0);
}

TEST_CASE("word metric") {
    CHECK(word_distance(fw({1, 2}), fw({1, 2})) == 0.0);
    CHECK(word_distance(fw({1, 2}), fw({1, 1})) == doctest::Approx(0.5));
    CHECK(word_distance(fw({1, 2}), fw({2, 2})) == doctest::Approx(1.0));
    CHECK(word_distance(fw({1, 2}), fw({1, 2, 1})) == doctest::Approx(0.25));
    CHECK(word_distance(Word(Orientation::Forward), fw({1})) == doctest::Approx(1.0));
}

TEST_CASE("word parsing and printing") {
    CHECK(Word::parse("112", Orientation::Forward) == fw({1, 1, 2}));
    CHECK(Word::parse("", Orientation::Reversed).empty());
    CHECK(Word::parse("10,2", Orientation::Forward).symbols() == std::vector<int>{10, 2});
    CHECK(fw({1, 2}).str() == "12");
    CHECK(Word(Orientation::Forward).str() == "∅");
    CHECK_THROWS_AS((void)Word::parse("1a", Orientation::Forward), std::invalid_argument);
}
