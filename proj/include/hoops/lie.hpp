#pragma once

// Concrete matrix Lie groups used as structure groups: U(1), SU(2), SO(3) and
// SL(2,R).  Every group element and algebra element is stored as a complex
// matrix so that one code path serves all four groups.

#include <Eigen/Dense>

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hoops::gauge {

using Matrix = Eigen::MatrixXcd;

enum class GroupName { U1, SU2, SO3, SL2R };

std::string to_string(GroupName name);
/// Accepts "u1", "su2", "so3", "sl2r" (case-insensitive); throws InputError otherwise.
GroupName parse_group_name(const std::string& text);

/// Draws a random group element from a seeded generator.
using MatrixSampler = std::function<Matrix(std::mt19937_64&)>;

class LieGroupSpec
{
public:
  static LieGroupSpec make(GroupName name);

  GroupName name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  bool is_abelian() const { return name_ == GroupName::U1; }

  Matrix identity() const { return Matrix::Identity(dim_, dim_); }
  Matrix zero_algebra() const { return Matrix::Zero(dim_, dim_); }

  /// Algebra element sum_k c_k basis_k.
  Matrix algebra_element(const std::vector<double>& coefficients) const;
  bool in_algebra(const Matrix& x, double tol = 1e-12) const;
  /// Departure of g from the group (unitarity / orthogonality / determinant residuals).
  double residual(const Matrix& g) const;
  /// Nearest-group re-projection: polar factor plus determinant fix.
  Matrix project(const Matrix& g) const;

  /// Haar sampler for the compact groups; for SL(2,R) a product of two
  /// exponentials of Gaussian algebra elements.
  MatrixSampler sampler() const;

  friend bool operator==(const LieGroupSpec& a, const LieGroupSpec& b) { return a.name_ == b.name_; }

private:
  GroupName name_ = GroupName::U1;
  int dim_ = 1;
  std::vector<Matrix> basis_;
};

/// Largest singular value.
double operator_norm(const Matrix& m);
/// Operator-norm distance between two matrices.
double distance(const Matrix& a, const Matrix& b);
/// Matrix exponential.
Matrix expm(const Matrix& x);

/// Rotation about a coordinate axis (0 = x, 1 = y, 2 = z) as an SO(3) element.
Matrix rotation(int axis, double angle);

} // namespace hoops::gauge
