#include "tifs/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace tifs {

AffineMap::AffineMap(double ratio, long exponent, Matrix rotation, Vector shift)
    : ratio_(ratio), exponent_(exponent), rotation_(std::move(rotation)), shift_(std::move(shift)) {
    if (rotation_.rows() != rotation_.cols() || rotation_.rows() != shift_.size())
        throw std::invalid_argument("affine map dimension mismatch");
}

AffineMap AffineMap::identity(int dimension, double ratio) {
    return AffineMap(ratio, 0, Matrix::Identity(dimension, dimension), Vector::Zero(dimension));
}

AffineMap AffineMap::scaling(int dimension, double ratio, long exponent) {
    return AffineMap(ratio, exponent, Matrix::Identity(dimension, dimension), Vector::Zero(dimension));
}

double AffineMap::scale_factor() const {
    return std::pow(ratio_, static_cast<double>(exponent_));
}

Vector AffineMap::operator()(const Vector& x) const {
    return scale_factor() * (rotation_ * x) + shift_;
}

void AffineMap::apply_in_place(Eigen::Ref<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>> points) const {
    points = (scale_factor() * (rotation_ * points)).colwise() + shift_;
}

AffineMap AffineMap::operator*(const AffineMap& other) const {
    AffineMap result(ratio_, exponent_ + other.exponent_, rotation_ * other.rotation_,
                     scale_factor() * (rotation_ * other.shift_) + shift_);
    return result;
}

AffineMap AffineMap::inverse() const {
    Matrix rot = rotation_.transpose();
    double inv_scale = std::pow(ratio_, -static_cast<double>(exponent_));
    return AffineMap(ratio_, -exponent_, rot, -inv_scale * (rot * shift_));
}

bool AffineMap::approx_equal(const AffineMap& other, double tolerance) const {
    if (exponent_ != other.exponent_) return false;
    if (dimension() != other.dimension()) return false;
    return (rotation_ - other.rotation_).cwiseAbs().maxCoeff() <= tolerance &&
           (shift_ - other.shift_).cwiseAbs().maxCoeff() <= tolerance;
}

} // namespace tifs
