#pragma once

#include <Eigen/Dense>

namespace spinres {

using Real = double;
using Index = Eigen::Index;

template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using MaskGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Real, 1, Eigen::Dynamic>;

namespace constants {
inline constexpr Real mu0 = 4.0e-7 * 3.14159265358979323846;
inline constexpr Real eps0 = 8.8541878128e-12;  // F/m
// gamma * mu0 convention for H in A/m; standard micromagnetic value
inline constexpr Real default_gyromagnetic_ratio = 2.211e5;  // m/(A*s)
}  // namespace constants

/// Three scalar grids holding the x/y/z components of a cellwise 3-vector
/// field. Grids are (nx, ny); index (i, j) is the cell at x-index i,
/// y-index j.
template <typename Scalar>
struct VectorField3 {
  Grid<Scalar> x, y, z;

  VectorField3() = default;
  VectorField3(Index nx, Index ny)
      : x(Grid<Scalar>::Zero(nx, ny)),
        y(Grid<Scalar>::Zero(nx, ny)),
        z(Grid<Scalar>::Zero(nx, ny)) {}

  Index nx() const { return x.rows(); }
  Index ny() const { return x.cols(); }

  void setZero() {
    x.setZero();
    y.setZero();
    z.setZero();
  }

  void resizeLike(const VectorField3& other) {
    x.resizeLike(other.x);
    y.resizeLike(other.y);
    z.resizeLike(other.z);
  }

  Vec3<Scalar> at(Index i, Index j) const {
    return Vec3<Scalar>(x(i, j), y(i, j), z(i, j));
  }

  void set(Index i, Index j, const Vec3<Scalar>& v) {
    x(i, j) = v[0];
    y(i, j) = v[1];
    z(i, j) = v[2];
  }

  bool allFinite() const {
    return x.isFinite().all() && y.isFinite().all() && z.isFinite().all();
  }
};

using VectorField = VectorField3<Real>;

}  // namespace spinres
