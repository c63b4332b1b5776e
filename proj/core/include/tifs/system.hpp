#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tifs/affine.hpp"
#include "tifs/error.hpp"
#include "tifs/word.hpp"

namespace tifs {

/// One similitude f(x) = s^a O x + q attached to a graph edge. The edge is
/// directed tail -> head and f maps the attractor component of the head
/// vertex into the component of the tail vertex.
struct SimilitudeSpec {
    int a = 1;          // scale exponent, ratio s^a
    Matrix rotation;    // orthogonal part O
    Vector translation; // q
    int tail = 0;
    int head = 0;
};

/// Unvalidated system description as read from configuration input.
struct SystemConfig {
    int dimension = 0;
    std::string base_ratio; // decimal string, parsed once
    std::vector<int> vertices;
    std::vector<SimilitudeSpec> maps;
};

struct ValidationIssue {
    ErrorKind kind;
    std::string detail;
};

struct ValidationResult;

/// A validated tiling IFS: contractive similitudes indexed by the edges of a
/// strongly connected directed graph, scaling ratios s^{a_n} with
/// gcd{a_n} = 1.
class System {
public:
    friend ValidationResult validate_tifs(const SystemConfig& config);

    int dimension() const { return config_.dimension; }
    double ratio() const { return ratio_; }
    const std::string& ratio_string() const { return config_.base_ratio; }
    double pow_ratio(long exponent) const;

    int map_count() const { return static_cast<int>(config_.maps.size()); }
    const SimilitudeSpec& similitude(int symbol) const { return config_.maps[static_cast<std::size_t>(symbol - 1)]; }
    int exponent_of(int symbol) const { return similitude(symbol).a; }
    int tail(int symbol) const { return similitude(symbol).tail; }
    int head(int symbol) const { return similitude(symbol).head; }
    int a_max() const { return a_max_; }
    double contraction() const; // lambda = s^{min a_n}

    const std::vector<int>& vertices() const { return config_.vertices; }
    int vertex_count() const { return static_cast<int>(config_.vertices.size()); }
    /// Edges e with tail(e) = v, ascending; the continuations of a forward
    /// word ending at v.
    const std::vector<int>& edges_from(int vertex) const;
    /// Edges e with head(e) = v, ascending; the continuations of a reversed
    /// word ending at v.
    const std::vector<int>& edges_into(int vertex) const;

    const SystemConfig& config() const { return config_; }

    AffineMap map_of(int symbol) const;

    bool admissible(const Word& word) const;
    void require_admissible(const Word& word) const;

    /// xi = sum of the scale exponents along the word; xi(empty) = 0.
    int xi(const Word& word) const;
    /// xi of the word with its last symbol removed.
    int xi_minus(const Word& word) const;

    /// Start vertex of the path: tail of the first edge for forward words,
    /// head of the first edge for reversed words.
    std::optional<int> start_vertex(const Word& word) const;
    /// End vertex of the path: head of the last edge for forward words,
    /// tail of the last edge for reversed words.
    std::optional<int> end_vertex(const Word& word) const;

    /// Axis-aligned bounding box enclosing each attractor component,
    /// computed by iterating the Hutchinson operator on boxes. In one
    /// dimension this converges to the exact hull of the component.
    struct Box {
        Vector lo;
        Vector hi;
    };
    const std::vector<Box>& component_boxes() const;
    const Box& component_box(int vertex) const;
    double diameter_bound() const;

private:
    System() = default;
    void build_index();

    SystemConfig config_;
    double ratio_ = 0.0;
    int a_max_ = 0;
    std::vector<std::vector<int>> edges_from_;
    std::vector<std::vector<int>> edges_into_;
    std::vector<int> vertex_index_; // dense lookup id -> position
    int vertex_position(int vertex) const;
    mutable std::vector<Box> boxes_;
};

struct ValidationResult {
    std::optional<System> system;
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings; // ComponentsOverlap diagnosis lands here
    bool ok() const { return errors.empty(); }
};

/// Checks gcd, connectivity, orthogonality and contractivity; diagnoses
/// component overlap approximately from attractor point clouds (warning
/// level). On success the returned result carries the validated system.
ValidationResult validate_tifs(const SystemConfig& config);

/// Throwing convenience wrapper around validate_tifs.
System make_system(const SystemConfig& config);

/// All admissible words of the given length, lexicographically sorted. The
/// root filter keeps forward words starting at the root vertex (reversed
/// words analogously).
std::vector<Word> enumerate_words(const System& system, int length, Orientation orientation,
                                  std::optional<int> root = std::nullopt);

int xi(const System& system, const Word& word);
int xi_minus(const System& system, const Word& word);

enum class MapSign { Forward, Inverse };

/// Forward yields f_w = f_{w_1} o ... o f_{w_k} with exponent xi(w);
/// inverse yields f_{-w} = f_{w_1}^{-1} o ... o f_{w_k}^{-1} with exponent
/// -xi(w). The empty word gives the identity.
AffineMap compose(const System& system, const Word& word, MapSign sign = MapSign::Forward);

/// The unique D in (0, M] at which the spectral radius of the edge matrix
/// V_{i,j} s^{D a_j} equals one, found by bisection. Caller asserts the open
/// set condition.
double hausdorff_dimension_osc(const System& system);

} // namespace tifs
