#include "tifs/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tifs {

namespace {

bool has_full_provenance(const Tiling& tiling) {
    for (const Tile& tile : tiling.tiles)
        if (tile.body.empty()) return false;
    return true;
}

Tiling deflate_by_words(const System& system, const Tiling& tiling) {
    const int level = tiling.level;
    AffineMap shrink = AffineMap::scaling(system.dimension(), system.ratio(), 1);

    Tiling result;
    result.level = level - 1;
    result.root = tiling.root;

    struct Group {
        std::vector<const Tile*> members;
    };
    std::map<Word, Group> groups;

    for (const Tile& tile : tiling.tiles) {
        if (system.xi_minus(tile.body) == level) {
            groups[tile.body.prefix(tile.body.length() - 1)].members.push_back(&tile);
        } else {
            Tile kept = tile;
            kept.map = shrink * tile.map;
            kept.prototile.scale_exponent += 1;
            result.tiles.push_back(std::move(kept));
        }
    }

    for (auto& [prefix, group] : groups) {
        int vertex = *system.end_vertex(prefix);
        const std::vector<int>& expected = system.edges_from(vertex);
        if (group.members.size() != expected.size())
            throw Error(ErrorKind::NotDeflatable,
                        "incomplete partner set at prefix " + prefix.str());

        std::optional<AffineMap> parent;
        std::set<int> seen;
        for (const Tile* member : group.members) {
            int last = member->body.back();
            if (!seen.insert(last).second || std::find(expected.begin(), expected.end(), last) == expected.end())
                throw Error(ErrorKind::NotDeflatable, "inconsistent partner set at prefix " + prefix.str());
            AffineMap candidate = member->map * system.map_of(last).inverse();
            if (!parent)
                parent = candidate;
            else if (!parent->approx_equal(candidate, 1e-9))
                throw Error(ErrorKind::NotDeflatable, "partners at prefix " + prefix.str() + " disagree");
        }

        Tile amalgamated;
        amalgamated.context = group.members.front()->context;
        amalgamated.body = prefix;
        amalgamated.map = shrink * *parent;
        amalgamated.prototile = {vertex, 1};
        result.tiles.push_back(std::move(amalgamated));
    }

    std::sort(result.tiles.begin(), result.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.body < b.body; });
    return result;
}

Tiling deflate_by_geometry(const System& system, const Tiling& tiling) {
    AffineMap shrink = AffineMap::scaling(system.dimension(), system.ratio(), 1);
    TileMatcher matcher(tiling, 1e-9);

    auto index_of = [&](const Tile* tile) {
        return static_cast<std::size_t>(tile - tiling.tiles.data());
    };

    // Every complete isometric copy of a level-0 tiling found in the tiling.
    struct Family {
        std::vector<std::size_t> members;
        AffineMap copy_map; // E with family = E T_0^{vertex}
        int vertex = 0;
    };
    std::vector<Family> families;

    for (const Tile& tile : tiling.tiles) {
        for (int e = 1; e <= system.map_count(); ++e) {
            if (system.head(e) != tile.prototile.vertex || system.exponent_of(e) != tile.prototile.scale_exponent)
                continue;
            AffineMap copy_map = tile.map * system.map_of(e).inverse();
            int vertex = system.tail(e);
            Family family;
            family.copy_map = copy_map;
            family.vertex = vertex;
            bool complete = true;
            for (int sibling : system.edges_from(vertex)) {
                Tile probe;
                probe.map = copy_map * system.map_of(sibling);
                probe.prototile = {system.head(sibling), system.exponent_of(sibling)};
                const Tile* found = matcher.find(probe);
                if (!found) {
                    complete = false;
                    break;
                }
                family.members.push_back(index_of(found));
            }
            if (!complete) continue;
            std::sort(family.members.begin(), family.members.end());
            bool duplicate = false;
            for (const Family& other : families)
                if (other.members == family.members) duplicate = true;
            if (!duplicate) families.push_back(std::move(family));
        }
    }

    std::vector<int> family_of(tiling.tiles.size(), -1);
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::size_t member : families[f].members) {
            if (family_of[member] != -1)
                throw Error(ErrorKind::NotDeflatable,
                            "partner decomposition is ambiguous without word provenance");
            family_of[member] = static_cast<int>(f);
        }
    }

    Tiling result;
    result.level = tiling.level - 1;
    result.root = tiling.root;
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
        if (family_of[i] != -1) continue;
        Tile kept = tiling.tiles[i];
        kept.map = shrink * kept.map;
        kept.prototile.scale_exponent += 1;
        result.tiles.push_back(std::move(kept));
    }
    for (const Family& family : families) {
        Tile amalgamated;
        amalgamated.map = shrink * family.copy_map;
        amalgamated.prototile = {family.vertex, 1};
        result.tiles.push_back(std::move(amalgamated));
    }
    return result;
}

} // namespace

Tiling deflate(const System& system, const Tiling& tiling) {
    if (tiling.level < 1)
        throw Error(ErrorKind::NotDeflatable, "level-0 tilings are outside the deflation domain");
    if (has_full_provenance(tiling)) return deflate_by_words(system, tiling);
    return deflate_by_geometry(system, tiling);
}

Tiling inflate(const System& system, const Tiling& tiling) {
    AffineMap expand = AffineMap::scaling(system.dimension(), system.ratio(), -1);

    Tiling result;
    result.level = tiling.level + 1;
    result.root = tiling.root;
    for (const Tile& tile : tiling.tiles) {
        if (tile.prototile.scale_exponent > 1) {
            Tile kept = tile;
            kept.map = expand * tile.map;
            kept.prototile.scale_exponent -= 1;
            result.tiles.push_back(std::move(kept));
            continue;
        }
        // Congruent to s A^v after expansion: split into the children.
        for (int e : system.edges_from(tile.prototile.vertex)) {
            Tile child;
            child.context = tile.context;
            if (!tile.body.empty()) child.body = tile.body.appended(e);
            child.map = expand * (tile.map * system.map_of(e));
            child.prototile = {system.head(e), system.exponent_of(e)};
            result.tiles.push_back(std::move(child));
        }
    }
    std::sort(result.tiles.begin(), result.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.body < b.body; });
    return result;
}

std::optional<EquivalenceWitness> check_equivalence(const System& system, const Word& theta,
                                                    const Word& psi, int bound) {
    if (theta.orientation() != Orientation::Reversed || psi.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "equivalence takes reversed words");
    system.require_admissible(theta);
    system.require_admissible(psi);

    auto level_isometry = [&](const Word& word, int cut) {
        Word prefix = word.prefix(cut);
        return compose(system, prefix, MapSign::Inverse) *
               AffineMap::scaling(system.dimension(), system.ratio(), system.xi(prefix));
    };

    int p_max = std::min(bound, theta.length());
    int q_max = std::min(bound, psi.length());
    for (int total = 0; total <= p_max + q_max; ++total) {
        for (int p = std::max(0, total - q_max); p <= std::min(p_max, total); ++p) {
            int q = total - p;
            if (system.xi(theta.prefix(p)) != system.xi(psi.prefix(q))) continue;
            Word tail_theta = theta.dropped(p);
            Word tail_psi = psi.dropped(q);
            if (!(tail_theta == tail_psi)) continue;
            if (tail_theta.empty() && !theta.empty() && !psi.empty()) {
                // Both prefixes consumed whole words; the shared unspecified
                // tail must attach at the same vertex.
                if (*system.end_vertex(theta) != *system.end_vertex(psi)) continue;
            }
            EquivalenceWitness witness;
            witness.p = p;
            witness.q = q;
            witness.isometry = level_isometry(theta, p) * level_isometry(psi, q).inverse();
            return witness;
        }
    }
    return std::nullopt;
}

namespace {

// Lexicographically smallest reversed-admissible word with the exact xi,
// ending at the junction vertex when one is required.
std::optional<Word> find_padding(const System& system, int target, std::optional<int> junction) {
    if (target == 0) return Word(Orientation::Reversed);

    std::vector<int> all_edges;
    for (int e = 1; e <= system.map_count(); ++e) all_edges.push_back(e);

    Word current(Orientation::Reversed);
    std::optional<Word> found;
    // Depth-first in ascending symbol order; the first hit is lex-smallest.
    auto search = [&](auto&& self, int xi_so_far) -> bool {
        const std::vector<int>& continuations =
            current.empty() ? all_edges : system.edges_into(system.tail(current.back()));
        for (int e : continuations) {
            int xi_next = xi_so_far + system.exponent_of(e);
            if (xi_next > target) continue;
            current.push_back(e);
            if (xi_next == target) {
                if (!junction || system.tail(e) == *junction) {
                    found = current;
                    return true;
                }
            } else if (self(self, xi_next)) {
                return true;
            }
            current = current.prefix(current.length() - 1);
        }
        return false;
    };
    search(search, 0);
    return found;
}

} // namespace

ClassRep shift_class(const System& system, const ClassRep& rep, ShiftDirection direction) {
    const Word& prefix = rep.prefix;
    if (prefix.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "class representatives are reversed words");
    system.require_admissible(prefix);
    if (prefix.empty())
        throw Error(ErrorKind::PrefixTooShort, "class representative exposes no symbols");

    for (int j = 1; j <= prefix.length(); ++j) {
        int target = system.xi(prefix.prefix(j)) + (direction == ShiftDirection::Forward ? -1 : 1);
        if (target < 0) continue;
        std::optional<int> junction;
        if (j < prefix.length())
            junction = system.head(prefix.symbol(j));
        else
            junction = system.end_vertex(prefix);
        std::optional<Word> padding = find_padding(system, target, junction);
        if (!padding) continue;
        return ClassRep{padding->concatenated(prefix.dropped(j))};
    }
    throw Error(ErrorKind::PrefixTooShort, "no admissible padding fits the stored prefix");
}

AffineMap self_similarity(const System& system, const Word& alpha, const Word& beta) {
    if (alpha.orientation() != Orientation::Reversed || beta.orientation() != Orientation::Reversed)
        throw Error(ErrorKind::InadmissibleWord, "self-similarity takes reversed words");
    if (beta.empty()) throw Error(ErrorKind::EmptyPeriod, "period word is empty");
    system.require_admissible(alpha);
    system.require_admissible(beta);
    // alpha beta beta ... must be one admissible reversed path.
    if (!system.admissible(beta.concatenated(beta)))
        throw Error(ErrorKind::InadmissibleWord, "period does not chain with itself");
    if (!alpha.empty() && !system.admissible(alpha.concatenated(beta)))
        throw Error(ErrorKind::InadmissibleWord, "period does not chain after the preperiod");

    AffineMap outer = compose(system, alpha, MapSign::Inverse);
    return outer * compose(system, beta, MapSign::Inverse) * outer.inverse();
}

std::vector<IsometryRecord> find_patch_occurrences(const System& system, const Tiling& tiling,
                                                   const std::vector<Tile>& patch, double radius,
                                                   double tolerance) {
    (void)system;
    std::vector<IsometryRecord> occurrences;
    if (patch.empty()) return occurrences;

    const Tile& anchor = patch.front();
    AffineMap anchor_inverse = anchor.map.inverse();
    TileMatcher matcher(tiling, tolerance);

    for (const Tile& candidate : tiling.tiles) {
        if (!(candidate.prototile == anchor.prototile)) continue;
        AffineMap isometry = candidate.map * anchor_inverse;
        if (radius > 0.0) {
            Vector anchor_position = anchor.map.shift();
            if ((isometry(anchor_position) - anchor_position).norm() > radius) continue;
        }
        bool all_present = true;
        for (const Tile& member : patch) {
            Tile probe;
            probe.map = isometry * member.map;
            probe.prototile = member.prototile;
            if (!matcher.contains(probe)) {
                all_present = false;
                break;
            }
        }
        if (!all_present) continue;
        bool duplicate = false;
        for (const IsometryRecord& seen : occurrences)
            if (seen.approx_equal(isometry, tolerance)) duplicate = true;
        if (!duplicate) occurrences.push_back(std::move(isometry));
    }

    std::sort(occurrences.begin(), occurrences.end(), [](const IsometryRecord& a, const IsometryRecord& b) {
        for (int i = 0; i < a.shift().size(); ++i)
            if (a.shift()(i) != b.shift()(i)) return a.shift()(i) < b.shift()(i);
        for (int i = 0; i < a.rotation().size(); ++i)
            if (a.rotation().data()[i] != b.rotation().data()[i])
                return a.rotation().data()[i] < b.rotation().data()[i];
        return false;
    });
    return occurrences;
}

std::vector<Word> words_with_xi(const System& system, int k, Orientation orientation,
                                std::optional<int> root) {
    std::vector<Word> out;
    if (k == 0) {
        out.emplace_back(orientation);
        return out;
    }

    Word current(orientation);
    auto extend = [&](auto&& self, int vertex, int xi_so_far) -> void {
        const std::vector<int>& continuations =
            orientation == Orientation::Forward ? system.edges_from(vertex) : system.edges_into(vertex);
        for (int e : continuations) {
            int xi_next = xi_so_far + system.exponent_of(e);
            if (xi_next > k) continue;
            current.push_back(e);
            if (xi_next == k)
                out.push_back(current);
            else
                self(self, orientation == Orientation::Forward ? system.head(e) : system.tail(e), xi_next);
            current = current.prefix(current.length() - 1);
        }
    };

    if (root) {
        extend(extend, *root, 0);
    } else {
        for (int e = 1; e <= system.map_count(); ++e) {
            int xi_first = system.exponent_of(e);
            if (xi_first > k) continue;
            current.push_back(e);
            if (xi_first == k)
                out.push_back(current);
            else
                extend(extend, orientation == Orientation::Forward ? system.head(e) : system.tail(e), xi_first);
            current = current.prefix(0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

RigidityReport neighbor_map_check(const System& system, int depth, double tolerance, int word_bound) {
    if (word_bound <= 0) word_bound = system.a_max() + 1;

    RigidityReport report;
    report.depth = depth;
    report.tolerance = tolerance;
    report.word_bound = word_bound;

    PointCloud components = attractor_deterministic(system, depth);
    double granularity = std::max(tolerance, 3.0 * components.error_bound);

    struct Candidate {
        AffineMap isometry;
        int codomain_vertex; // v with E T_0^w compared against T_0^v
        int domain_vertex;   // w
    };
    std::vector<Candidate> candidates;
    auto add_candidate = [&](AffineMap isometry, int v, int w) {
        if (v == w && isometry.approx_equal(AffineMap::identity(system.dimension(), system.ratio()), 1e-9))
            return;
        for (const Candidate& seen : candidates)
            if (seen.codomain_vertex == v && seen.domain_vertex == w &&
                seen.isometry.approx_equal(isometry, 1e-9))
                return;
        candidates.push_back({std::move(isometry), v, w});
    };

    for (int m = 1; m <= word_bound; ++m) {
        std::vector<Word> forward = words_with_xi(system, m, Orientation::Forward);
        std::vector<Word> reversed = words_with_xi(system, m, Orientation::Reversed);
        for (const Word& sigma : forward) {
            AffineMap f_sigma = compose(system, sigma, MapSign::Forward);
            for (const Word& theta : reversed) {
                AffineMap f_inv = compose(system, theta, MapSign::Inverse);
                if (system.head(sigma.back()) == system.head(theta.front()))
                    add_candidate(f_sigma * f_inv, system.tail(sigma.front()), system.tail(theta.back()));
                if (system.tail(sigma.front()) == system.tail(theta.back()))
                    add_candidate(f_inv * f_sigma, system.head(theta.front()), system.head(sigma.back()));
            }
        }
    }

    if (candidates.empty()) {
        report.outcome = RigidityReport::Outcome::Inconclusive;
        return report;
    }

    std::map<int, Tiling> base_tilings;
    for (int v : system.vertices()) base_tilings.emplace(v, canonical_tiling(system, 0, v));

    for (const Candidate& candidate : candidates) {
        const Tiling& t0v = base_tilings.at(candidate.codomain_vertex);
        Tiling moved = apply_isometry(candidate.isometry, base_tilings.at(candidate.domain_vertex));

        std::vector<const Tile*> common;
        TileMatcher matcher(moved, 1e-9);
        for (const Tile& tile : t0v.tiles)
            if (matcher.contains(tile)) common.push_back(&tile);
        if (common.empty()) continue;

        // Does the common tile set cover A^v intersected with E A^w?
        PointGrid moved_component(system.dimension(), granularity);
        {
            const VertexCloud* source = components.part(candidate.domain_vertex);
            const std::size_t dim = static_cast<std::size_t>(system.dimension());
            for (std::size_t i = 0; i < source->coords.size(); i += dim) {
                Eigen::Map<const Vector> x(source->coords.data() + i, system.dimension());
                Vector y = candidate.isometry(x);
                moved_component.insert(y.data());
            }
        }
        PointGrid common_cloud(system.dimension(), granularity);
        for (const Tile* tile : common) {
            PointCloud cloud = realize_tile(system, components, *tile);
            common_cloud.insert(cloud);
        }

        const VertexCloud* home = components.part(candidate.codomain_vertex);
        const std::size_t dim = static_cast<std::size_t>(system.dimension());
        bool covered = true;
        for (std::size_t i = 0; i < home->coords.size() && covered; i += dim) {
            const double* x = home->coords.data() + i;
            if (!moved_component.any_within(x, granularity)) continue; // outside the overlap
            if (!common_cloud.any_within(x, granularity)) covered = false;
        }
        if (covered) report.witnesses.push_back(candidate.isometry);
    }

    report.outcome =
        report.witnesses.empty() ? RigidityReport::Outcome::Passes : RigidityReport::Outcome::Fails;
    return report;
}

} // namespace tifs
