#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "tifs/word.hpp"

namespace tifs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Affine similitude x -> s^m O x + q with the scale kept as the exact
/// integer exponent m of the base ratio s. Only the orthogonal factor O is
/// stored, so composition adds exponents and inversion negates them; a map
/// is an isometry exactly when its exponent is zero.
class AffineMap {
public:
    AffineMap() = default;
    AffineMap(double ratio, long exponent, Matrix rotation, Vector shift);

    static AffineMap identity(int dimension, double ratio);
    /// x -> s^exponent x
    static AffineMap scaling(int dimension, double ratio, long exponent);

    int dimension() const { return static_cast<int>(shift_.size()); }
    double ratio() const { return ratio_; }
    long exponent() const { return exponent_; }
    const Matrix& rotation() const { return rotation_; }
    const Vector& shift() const { return shift_; }
    double scale_factor() const;
    Matrix linear() const { return scale_factor() * rotation_; }

    bool is_isometry() const { return exponent_ == 0; }

    Vector operator()(const Vector& x) const;
    /// Applies the map to points stored column-wise.
    void apply_in_place(Eigen::Ref<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>> points) const;

    /// Composition (a * b)(x) = a(b(x)).
    AffineMap operator*(const AffineMap& other) const;
    AffineMap inverse() const;

    bool approx_equal(const AffineMap& other, double tolerance) const;

    /// Word provenance (theta, sigma) for maps of the form f_{-theta} o f_sigma.
    const std::optional<std::pair<Word, Word>>& provenance() const { return provenance_; }
    void set_provenance(Word theta, Word sigma) { provenance_ = std::make_pair(std::move(theta), std::move(sigma)); }

private:
    double ratio_ = 1.0;
    long exponent_ = 0;
    Matrix rotation_;
    Vector shift_;
    std::optional<std::pair<Word, Word>> provenance_;
};

/// An AffineMap contractually carrying exponent zero.
using IsometryRecord = AffineMap;

} // namespace tifs
