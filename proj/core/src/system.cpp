#include "tifs/system.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tifs/geometry.hpp"

namespace tifs {

double System::pow_ratio(long exponent) const {
    return std::pow(ratio_, static_cast<double>(exponent));
}

double System::contraction() const {
    int a_min = config_.maps.front().a;
    for (const auto& m : config_.maps) a_min = std::min(a_min, m.a);
    return std::pow(ratio_, a_min);
}

int System::vertex_position(int vertex) const {
    if (vertex >= 0 && vertex < static_cast<int>(vertex_index_.size())) {
        int pos = vertex_index_[static_cast<std::size_t>(vertex)];
        if (pos >= 0) return pos;
    }
    throw Error(ErrorKind::ConfigError, "unknown vertex id " + std::to_string(vertex));
}

const std::vector<int>& System::edges_from(int vertex) const {
    return edges_from_[static_cast<std::size_t>(vertex_position(vertex))];
}

const std::vector<int>& System::edges_into(int vertex) const {
    return edges_into_[static_cast<std::size_t>(vertex_position(vertex))];
}

void System::build_index() {
    int max_id = 0;
    for (int v : config_.vertices) max_id = std::max(max_id, v);
    vertex_index_.assign(static_cast<std::size_t>(max_id) + 1, -1);
    for (std::size_t i = 0; i < config_.vertices.size(); ++i)
        vertex_index_[static_cast<std::size_t>(config_.vertices[i])] = static_cast<int>(i);

    edges_from_.assign(config_.vertices.size(), {});
    edges_into_.assign(config_.vertices.size(), {});
    for (int e = 1; e <= map_count(); ++e) {
        edges_from_[static_cast<std::size_t>(vertex_position(tail(e)))].push_back(e);
        edges_into_[static_cast<std::size_t>(vertex_position(head(e)))].push_back(e);
    }

    a_max_ = 0;
    for (const auto& m : config_.maps) a_max_ = std::max(a_max_, m.a);
}

AffineMap System::map_of(int symbol) const {
    const SimilitudeSpec& spec = similitude(symbol);
    return AffineMap(ratio_, spec.a, spec.rotation, spec.translation);
}

bool System::admissible(const Word& word) const {
    for (int i = 0; i < word.length(); ++i) {
        int s = word.symbol(i);
        if (s < 1 || s > map_count()) return false;
    }
    for (int i = 0; i + 1 < word.length(); ++i) {
        if (word.orientation() == Orientation::Forward) {
            if (head(word.symbol(i)) != tail(word.symbol(i + 1))) return false;
        } else {
            if (tail(word.symbol(i)) != head(word.symbol(i + 1))) return false;
        }
    }
    return true;
}

void System::require_admissible(const Word& word) const {
    if (!admissible(word))
        throw Error(ErrorKind::InadmissibleWord, "word " + word.str() + " is not an edge path");
}

int System::xi(const Word& word) const {
    int sum = 0;
    for (int i = 0; i < word.length(); ++i) sum += exponent_of(word.symbol(i));
    return sum;
}

int System::xi_minus(const Word& word) const {
    if (word.empty()) return 0;
    return xi(word) - exponent_of(word.back());
}

std::optional<int> System::start_vertex(const Word& word) const {
    if (word.empty()) return std::nullopt;
    return word.orientation() == Orientation::Forward ? tail(word.front()) : head(word.front());
}

std::optional<int> System::end_vertex(const Word& word) const {
    if (word.empty()) return std::nullopt;
    return word.orientation() == Orientation::Forward ? head(word.back()) : tail(word.back());
}

const std::vector<System::Box>& System::component_boxes() const {
    if (!boxes_.empty()) return boxes_;

    const int m = dimension();
    double max_q = 0.0;
    for (const auto& spec : config_.maps) max_q = std::max(max_q, spec.translation.cwiseAbs().maxCoeff());
    double radius = max_q / (1.0 - contraction()) + 1.0;

    std::vector<Box> boxes(config_.vertices.size());
    for (auto& box : boxes) {
        box.lo = Vector::Constant(m, -radius);
        box.hi = Vector::Constant(m, radius);
    }

    // Interval arithmetic image of a box under one similitude.
    auto image = [&](int e, const Box& b) {
        const SimilitudeSpec& spec = similitude(e);
        double scale = pow_ratio(spec.a);
        Box out;
        out.lo = spec.translation;
        out.hi = spec.translation;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                double c = scale * spec.rotation(i, j);
                double a = c * b.lo(j);
                double bb = c * b.hi(j);
                out.lo(i) += std::min(a, bb);
                out.hi(i) += std::max(a, bb);
            }
        }
        return out;
    };

    for (int iter = 0; iter < 400; ++iter) {
        std::vector<Box> next(boxes.size());
        for (std::size_t vi = 0; vi < config_.vertices.size(); ++vi) {
            bool first = true;
            for (int e : edges_from_[vi]) {
                Box im = image(e, boxes[static_cast<std::size_t>(vertex_position(head(e)))]);
                if (first) {
                    next[vi] = im;
                    first = false;
                } else {
                    next[vi].lo = next[vi].lo.cwiseMin(im.lo);
                    next[vi].hi = next[vi].hi.cwiseMax(im.hi);
                }
            }
        }
        boxes.swap(next);
    }
    boxes_ = std::move(boxes);
    return boxes_;
}

const System::Box& System::component_box(int vertex) const {
    return component_boxes()[static_cast<std::size_t>(vertex_position(vertex))];
}

double System::diameter_bound() const {
    const auto& boxes = component_boxes();
    Vector lo = boxes.front().lo;
    Vector hi = boxes.front().hi;
    for (const auto& b : boxes) {
        lo = lo.cwiseMin(b.lo);
        hi = hi.cwiseMax(b.hi);
    }
    return (hi - lo).norm();
}

namespace {

void check_config_shape(const SystemConfig& config) {
    if (config.dimension < 1)
        throw Error(ErrorKind::ConfigError, "dimension must be >= 1");
    if (config.maps.size() < 2)
        throw Error(ErrorKind::ConfigError, "maps: need at least 2 similitudes");
    if (config.vertices.empty())
        throw Error(ErrorKind::ConfigError, "vertices: must be nonempty");
    for (int v : config.vertices)
        if (v < 0 || v > 1000000)
            throw Error(ErrorKind::ConfigError, "vertices: ids must lie in [0, 1e6]");
    for (std::size_t i = 0; i < config.maps.size(); ++i) {
        const auto& spec = config.maps[i];
        std::string where = "maps[" + std::to_string(i) + "]";
        if (spec.a < 1)
            throw Error(ErrorKind::ConfigError, where + ".a: scale exponent must be >= 1");
        if (spec.rotation.rows() != config.dimension || spec.rotation.cols() != config.dimension)
            throw Error(ErrorKind::ConfigError, where + ".O: expected " + std::to_string(config.dimension) + "x" +
                                                    std::to_string(config.dimension) + " matrix");
        if (spec.translation.size() != config.dimension)
            throw Error(ErrorKind::ConfigError,
                        where + ".q: expected vector of length " + std::to_string(config.dimension));
        auto known = [&](int v) {
            return std::find(config.vertices.begin(), config.vertices.end(), v) != config.vertices.end();
        };
        if (!known(spec.tail))
            throw Error(ErrorKind::ConfigError, where + ".tail: unknown vertex " + std::to_string(spec.tail));
        if (!known(spec.head))
            throw Error(ErrorKind::ConfigError, where + ".head: unknown vertex " + std::to_string(spec.head));
    }
}

bool strongly_connected(const SystemConfig& config) {
    auto position = [&](int v) {
        return static_cast<std::size_t>(
            std::distance(config.vertices.begin(), std::find(config.vertices.begin(), config.vertices.end(), v)));
    };
    std::size_t n = config.vertices.size();
    auto reachable = [&](bool reverse_edges) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (const auto& spec : config.maps) {
                std::size_t from = position(reverse_edges ? spec.head : spec.tail);
                std::size_t to = position(reverse_edges ? spec.tail : spec.head);
                if (from == v && !seen[to]) {
                    seen[to] = true;
                    stack.push_back(to);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reachable(false) && reachable(true);
}

} // namespace

ValidationResult validate_tifs(const SystemConfig& config) {
    check_config_shape(config);

    ValidationResult result;

    double ratio = 0.0;
    try {
        std::size_t used = 0;
        ratio = std::stod(config.base_ratio, &used);
        if (used != config.base_ratio.size()) ratio = -1.0;
    } catch (const std::exception&) {
        ratio = -1.0;
    }
    if (!(ratio > 0.0)) {
        result.errors.push_back({ErrorKind::NotContractive,
                                 "base_ratio: cannot parse '" + config.base_ratio + "' as a positive number"});
        return result;
    }
    if (ratio >= 1.0)
        result.errors.push_back({ErrorKind::NotContractive, "base ratio s = " + config.base_ratio +
                                                                " gives contraction factor s^min(a) >= 1"});

    int g = 0;
    for (const auto& spec : config.maps) g = std::gcd(g, spec.a);
    if (g != 1)
        result.errors.push_back({ErrorKind::GcdNotOne,
                                 "gcd of scale exponents is " + std::to_string(g) + ", must be 1"});

    for (std::size_t i = 0; i < config.maps.size(); ++i) {
        const Matrix& o = config.maps[i].rotation;
        double defect = (o.transpose() * o - Matrix::Identity(o.rows(), o.cols())).cwiseAbs().maxCoeff();
        if (defect > 1e-9)
            result.errors.push_back({ErrorKind::NotOrthogonal, "maps[" + std::to_string(i) +
                                                                   "].O: ||O^T O - I||_max = " + std::to_string(defect)});
    }

    bool every_vertex_used = true;
    for (int v : config.vertices) {
        bool is_tail = false, is_head = false;
        for (const auto& spec : config.maps) {
            is_tail |= spec.tail == v;
            is_head |= spec.head == v;
        }
        if (!is_tail || !is_head) {
            every_vertex_used = false;
            result.errors.push_back({ErrorKind::NotStronglyConnected,
                                     "vertex " + std::to_string(v) + " is missing " +
                                         (is_tail ? "an incoming" : "an outgoing") + " edge"});
        }
    }
    if (every_vertex_used && !strongly_connected(config))
        result.errors.push_back({ErrorKind::NotStronglyConnected, "the edge graph is not strongly connected"});

    if (!result.errors.empty()) return result;

    System system;
    system.config_ = config;
    system.ratio_ = ratio;
    system.build_index();
    system.component_boxes(); // cached eagerly; the value is immutable afterwards

    // Approximate disjointness check of the attractor components.
    if (system.vertex_count() > 1) {
        int depth = 1;
        while (depth < 24 && cloud_size_at_depth(system, depth + 1) <= 100000) ++depth;
        PointCloud cloud = attractor_deterministic(system, depth);
        double cutoff = 2.0 * cloud.error_bound + 1e-9;
        double separation = min_component_separation(cloud, cutoff);
        if (separation <= cutoff)
            result.warnings.push_back({ErrorKind::ComponentsOverlap,
                                       "components come within " + std::to_string(separation) +
                                           " at cloud error " + std::to_string(cloud.error_bound)});
    }

    result.system = std::move(system);
    return result;
}

System make_system(const SystemConfig& config) {
    ValidationResult result = validate_tifs(config);
    if (!result.ok()) {
        std::ostringstream message;
        for (std::size_t i = 0; i < result.errors.size(); ++i) {
            if (i) message << "; ";
            message << to_string(result.errors[i].kind) << ": " << result.errors[i].detail;
        }
        throw Error(result.errors.front().kind, message.str());
    }
    return *std::move(result.system);
}

std::vector<Word> enumerate_words(const System& system, int length, Orientation orientation,
                                  std::optional<int> root) {
    std::vector<Word> out;
    if (length < 0) return out;
    if (length == 0) {
        out.emplace_back(orientation);
        return out;
    }

    Word current(orientation);
    auto continuations = [&](int vertex) -> const std::vector<int>& {
        return orientation == Orientation::Forward ? system.edges_from(vertex) : system.edges_into(vertex);
    };

    auto extend = [&](auto&& self, int vertex, int remaining) -> void {
        for (int e : continuations(vertex)) {
            current.push_back(e);
            if (remaining == 1) {
                out.push_back(current);
            } else {
                int next = orientation == Orientation::Forward ? system.head(e) : system.tail(e);
                self(self, next, remaining - 1);
            }
            current = current.prefix(current.length() - 1);
        }
    };

    if (root) {
        extend(extend, *root, length);
    } else {
        for (int e = 1; e <= system.map_count(); ++e) {
            current.push_back(e);
            if (length == 1) {
                out.push_back(current);
            } else {
                int next = orientation == Orientation::Forward ? system.head(e) : system.tail(e);
                extend(extend, next, length - 1);
            }
            current = current.prefix(0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int xi(const System& system, const Word& word) { return system.xi(word); }
int xi_minus(const System& system, const Word& word) { return system.xi_minus(word); }

AffineMap compose(const System& system, const Word& word, MapSign sign) {
    system.require_admissible(word);
    AffineMap result = AffineMap::identity(system.dimension(), system.ratio());
    for (int i = 0; i < word.length(); ++i) {
        AffineMap f = system.map_of(word.symbol(i));
        result = result * (sign == MapSign::Forward ? f : f.inverse());
    }
    return result;
}

double hausdorff_dimension_osc(const System& system) {
    const int n = system.map_count();

    auto radius_at = [&](double d) {
        Matrix m = Matrix::Zero(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (system.head(j) == system.tail(i)) // edge i may follow edge j
                    m(i - 1, j - 1) = std::pow(system.ratio(), d * system.exponent_of(j));
        Eigen::EigenSolver<Matrix> solver(m, false);
        return solver.eigenvalues().cwiseAbs().maxCoeff();
    };

    double lo = 1e-6;
    double hi = static_cast<double>(system.dimension());
    double radius_hi = radius_at(hi);
    if (radius_hi > 1.0 + 1e-10)
        throw Error(ErrorKind::NoRootInRange,
                    "spectral radius at D = M is " + std::to_string(radius_hi) + " > 1");
    if (radius_at(lo) < 1.0 - 1e-10)
        throw Error(ErrorKind::NoRootInRange, "spectral radius already below 1 near D = 0");

    // The radius is strictly decreasing in D; bisect until the bracket is
    // far below the 1e-10 radius tolerance.
    for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (radius_at(mid) >= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace tifs
