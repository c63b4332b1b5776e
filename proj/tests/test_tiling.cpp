#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"
#include "tifs/tiling.hpp"

using namespace tifs;
using namespace tifs::testing;

TEST_CASE("canonical tilings") {
    const System& fib = fixtures::fib();
    double a = fib.ratio();

    SUBCASE("FIB letter strings from the worked example") {
        CHECK(letters(fib, canonical_tiling(fib, 0)) == "ls");
        CHECK(letters(fib, canonical_tiling(fib, 1)) == "lsl");
        CHECK(letters(fib, canonical_tiling(fib, 2)) == "lslls");
        CHECK(letters(fib, canonical_tiling(fib, 3)) == "lsllslsl");
        CHECK(letters(fib, canonical_tiling(fib, 4)) == "lsllslsllslls");
    }

    SUBCASE("FIB level 1 support") {
        Tiling tiling = canonical_tiling(fib, 1);
        CHECK(tiling.size() == 3);
        Interval support = support_interval(fib, tiling);
        CHECK(support.lo == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(support.hi == doctest::Approx(1.0 / a).epsilon(1e-9));
    }

    SUBCASE("BIN level 2 is eight half intervals on [0, 4]") {
        const System& bin = fixtures::bin();
        Tiling tiling = canonical_tiling(bin, 2);
        REQUIRE(tiling.size() == 8);
        Interval support = support_interval(bin, tiling);
        CHECK(support.lo == doctest::Approx(0.0));
        CHECK(support.hi == doctest::Approx(4.0));
        for (const Tile& tile : tiling.tiles) {
            Interval t = support_interval(bin, tile);
            CHECK(t.hi - t.lo == doctest::Approx(0.5));
        }
        CHECK(interiors_disjoint_1d(bin, tiling, 1e-12));
    }

    SUBCASE("tile exponents match the level bookkeeping") {
        for (const System* system : all_fixtures()) {
            for (int k = 0; k <= 4; ++k) {
                Tiling tiling = canonical_tiling(*system, k);
                CHECK(tiling.size() == omega(*system, k).size());
                for (const Tile& tile : tiling.tiles) {
                    CHECK(tile.map.exponent() == system->xi(tile.body) - k);
                    CHECK(tile.prototile.scale_exponent >= 1);
                    CHECK(tile.prototile.scale_exponent <= system->a_max());
                }
            }
        }
    }

    SUBCASE("1D canonical tilings have disjoint interiors and interval support") {
        for (const System* system : {&fixtures::bin(), &fixtures::fib()}) {
            for (int k = 0; k <= 8; ++k) {
                Tiling tiling = canonical_tiling(*system, k);
                CHECK(interiors_disjoint_1d(*system, tiling, 1e-9));
                Interval support = support_interval(*system, tiling);
                CHECK(support.lo == doctest::Approx(0.0).epsilon(1e-9));
                CHECK(support.hi ==
                      doctest::Approx(std::pow(system->ratio(), -k)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("2D tilings only touch along boundaries") {
    const System& sier = fixtures::sier();
    // Gasket tiles meet at corner points only, so almost no grid cell is
    // claimed twice; stacking a duplicate tile is caught immediately.
    CHECK(tiling_overlap_fraction(sier, canonical_tiling(sier, 1), 8) < 0.05);
    CHECK(tiling_overlap_fraction(sier, canonical_tiling(sier, 2), 8) < 0.05);
    // One duplicated tile among the nine claims its ninth of the cells.
    Tiling doubled = canonical_tiling(sier, 1);
    doubled.tiles.push_back(doubled.tiles.front());
    CHECK(tiling_overlap_fraction(sier, doubled, 8) > 0.08);
}

TEST_CASE("blow-up tilings") {
    const System& bin = fixtures::bin();
    const System& fib = fixtures::fib();

    SUBCASE("BIN context 1 gives four half intervals on [0, 2]") {
        Tiling tiling = tiling_of(bin, rw({1}));
        REQUIRE(tiling.size() == 4);
        auto order = display_order(bin, tiling);
        double expected_lo[] = {0.0, 0.5, 1.0, 1.5};
        for (int i = 0; i < 4; ++i) {
            Interval t = support_interval(bin, tiling.tiles[order[static_cast<std::size_t>(i)]]);
            CHECK(t.lo == doctest::Approx(expected_lo[i]).epsilon(1e-9));
            CHECK(t.hi == doctest::Approx(expected_lo[i] + 0.5).epsilon(1e-9));
        }
    }

    SUBCASE("FIB context 1 is exactly the level-1 canonical tiling") {
        CHECK(tiling_equal(tiling_of(fib, rw({1})), canonical_tiling(fib, 1), 1e-9));
    }

    SUBCASE("the empty context is the level-0 tiling") {
        Tiling tiling = tiling_of(fib, Word(Orientation::Reversed));
        CHECK(letters(fib, tiling) == "ls");
        CHECK(tiling_equal(tiling, canonical_tiling(fib, 0), 1e-12));
    }

    SUBCASE("BIN context 2 spans [-1, 1]") {
        Tiling tiling = tiling_of(bin, rw({2}));
        Interval support = support_interval(bin, tiling);
        CHECK(support.lo == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(support.hi == doctest::Approx(1.0).epsilon(1e-9));
    }

    SUBCASE("inadmissible contexts are rejected") {
        CHECK_THROWS_AS((void)tiling_of(fixtures::gd2(), rw({1, 2})), Error);
        CHECK_THROWS_AS((void)tiling_of(bin, fw({1})), Error);
    }

    SUBCASE("nesting along prefixes") {
        SplitMix64 rng(2024);
        for (const System* system : all_fixtures()) {
            for (int trial = 0; trial < 5; ++trial) {
                Word theta = random_reversed_word(*system, 5, rng);
                std::optional<int> empty_root = system->head(theta.front());
                Tiling previous = tiling_of(*system, theta.prefix(0), empty_root);
                for (int k = 1; k <= theta.length(); ++k) {
                    Tiling current = tiling_of(*system, theta.prefix(k), empty_root);
                    CHECK(tiling_subset(previous, current, 1e-9));
                    previous = std::move(current);
                }
            }
        }
    }
}

TEST_CASE("prototile classes") {
    CHECK(prototile_set(fixtures::fib()).size() == 2);
    CHECK(prototile_set(fixtures::bin()).size() == 1);
    CHECK(prototile_set(fixtures::sier()).size() == 1);
    CHECK(prototile_set(fixtures::gd2()).size() == 4);

    SUBCASE("FIB classes are the two interval lengths") {
        const System& fib = fixtures::fib();
        PointCloud large = realize_prototile(fib, {1, 1}, 8);
        PointCloud small = realize_prototile(fib, {1, 2}, 8);
        auto span = [&](const PointCloud& cloud) {
            double lo = cloud.parts.front().coords.front(), hi = lo;
            for (double x : cloud.parts.front().coords) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            return hi - lo;
        };
        CHECK(span(large) == doctest::Approx(fib.ratio()).epsilon(1e-3));
        CHECK(span(small) == doctest::Approx(fib.ratio() * fib.ratio()).epsilon(1e-3));
    }

    SUBCASE("every constructed tile lands in a class") {
        for (const System* system : all_fixtures()) {
            std::vector<Prototile> classes = prototile_set(*system);
            Tiling tiling = canonical_tiling(*system, 3);
            for (const Tile& tile : tiling.tiles)
                CHECK(std::count(classes.begin(), classes.end(), tile.prototile) == 1);
        }
    }
}

TEST_CASE("canonical form of a blow-up") {
    const System& fib = fixtures::fib();
    const System& bin = fixtures::bin();

    SUBCASE("FIB context 1 has the identity isometry") {
        CanonicalForm form = canonical_form(fib, rw({1}));
        CHECK(form.level == 1);
        CHECK(form.isometry.exponent() == 0);
        CHECK(form.isometry.approx_equal(AffineMap::identity(1, fib.ratio()), 1e-12));
    }

    SUBCASE("BIN context 2 shifts by -1") {
        CanonicalForm form = canonical_form(bin, rw({2}));
        CHECK(form.level == 1);
        CHECK(form.isometry.exponent() == 0);
        CHECK(form.isometry.rotation()(0, 0) == doctest::Approx(1.0));
        CHECK(form.isometry.shift()(0) == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("the empty context is the identity at level 0") {
        CanonicalForm form = canonical_form(bin, Word(Orientation::Reversed));
        CHECK(form.level == 0);
        CHECK(form.isometry.approx_equal(AffineMap::identity(1, bin.ratio()), 0.0));
    }

    SUBCASE("applying the isometry to the canonical tiling reproduces the blow-up") {
        for (const System* system : all_fixtures()) {
            for (int length = 0; length <= 3; ++length) {
                for (const Word& theta : enumerate_words(*system, length, Orientation::Reversed)) {
                    CanonicalForm form = canonical_form(*system, theta);
                    std::optional<int> root =
                        theta.empty() ? std::optional<int>(system->vertices().front()) : form.vertex;
                    Tiling canonical = canonical_tiling(*system, form.level, root);
                    Tiling expected = tiling_of(*system, theta, root);
                    CHECK(tiling_equal(apply_isometry(form.isometry, canonical), expected, 1e-9));
                }
            }
        }
    }
}

TEST_CASE("canonical decomposition into copies") {
    const System& fib = fixtures::fib();

    SUBCASE("every block isometry has exponent zero") {
        for (const CanonicalBlock& block : decompose_canonical(fib, 3, 1))
            CHECK(block.isometry.exponent() == 0);
    }

    SUBCASE("FIB level 3 over level 1 covers the tiling") {
        Tiling reference = canonical_tiling(fib, 3);
        std::size_t total = 0;
        Tiling combined;
        combined.level = 3;
        for (const CanonicalBlock& block : decompose_canonical(fib, 3, 1)) {
            Tiling copy = apply_isometry(block.isometry, canonical_tiling(fib, block.level, block.vertex));
            total += copy.size();
            for (Tile& tile : copy.tiles) combined.tiles.push_back(std::move(tile));
        }
        CHECK(total == reference.size());
        CHECK(tiling_equal(combined, reference, 1e-9));
    }

    SUBCASE("BIN level 2 over level 0 is two copies of level 1") {
        const System& bin = fixtures::bin();
        auto blocks = decompose_canonical(bin, 2, 0);
        REQUIRE(blocks.size() == 2);
        Tiling reference = canonical_tiling(bin, 2);
        Tiling combined;
        combined.level = 2;
        for (const CanonicalBlock& block : blocks) {
            CHECK(block.level == 1);
            Tiling copy = apply_isometry(block.isometry, canonical_tiling(bin, block.level, block.vertex));
            for (Tile& tile : copy.tiles) combined.tiles.push_back(std::move(tile));
        }
        CHECK(tiling_equal(combined, reference, 1e-9));
    }

    SUBCASE("reassembly works across fixtures and levels") {
        for (const System* system : all_fixtures()) {
            for (int l = 0; l <= 1; ++l) {
                int k = system->a_max() + l + 1;
                Tiling reference = canonical_tiling(*system, k);
                Tiling combined;
                combined.level = k;
                for (const CanonicalBlock& block : decompose_canonical(*system, k, l)) {
                    Tiling copy =
                        apply_isometry(block.isometry, canonical_tiling(*system, block.level, block.vertex));
                    for (Tile& tile : copy.tiles) combined.tiles.push_back(std::move(tile));
                }
                CHECK(tiling_equal(combined, reference, 1e-9));
            }
        }
    }

    SUBCASE("levels below a_max + l are rejected") {
        CHECK_THROWS_AS((void)decompose_canonical(fib, 2, 1), Error);
    }
}
