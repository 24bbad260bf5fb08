#include "hoops/lie.hpp"

#include "hoops/error.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>

namespace hoops::gauge {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

Matrix mat2(cd a, cd b, cd c, cd d)
{
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix so3_generator(int axis)
{
  Matrix m = Matrix::Zero(3, 3);
  const int i = (axis + 1) % 3, j = (axis + 2) % 3;
  m(i, j) = -1.0;
  m(j, i) = 1.0;
  return m;
}

double imag_norm(const Matrix& g)
{
  return g.imag().cwiseAbs().maxCoeff();
}

Eigen::Vector4d random_unit_quaternion(std::mt19937_64& rng)
{
  std::normal_distribution<double> normal;
  Eigen::Vector4d q;
  do {
    for (int k = 0; k < 4; ++k)
      q[k] = normal(rng);
  } while (q.norm() < 1e-6);
  return q.normalized();
}

} // namespace

std::string to_string(GroupName name)
{
  switch (name) {
    case GroupName::U1: return "u1";
    case GroupName::SU2: return "su2";
    case GroupName::SO3: return "so3";
    case GroupName::SL2R: return "sl2r";
  }
  return "?";
}

GroupName parse_group_name(const std::string& text)
{
  std::string t;
  for (char c : text)
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "u1")
    return GroupName::U1;
  if (t == "su2")
    return GroupName::SU2;
  if (t == "so3")
    return GroupName::SO3;
  if (t == "sl2r")
    return GroupName::SL2R;
  throw InputError("unknown group '" + text + "' (expected u1, su2, so3 or sl2r)");
}

LieGroupSpec LieGroupSpec::make(GroupName name)
{
  LieGroupSpec s;
  s.name_ = name;
  switch (name) {
    case GroupName::U1:
      s.dim_ = 1;
      s.basis_ = {Matrix::Constant(1, 1, I)};
      break;
    case GroupName::SU2:
      s.dim_ = 2;
      // i * Pauli matrices
      s.basis_ = {mat2(0, I, I, 0), mat2(0, 1, -1, 0), mat2(I, 0, 0, -I)};
      break;
    case GroupName::SO3:
      s.dim_ = 3;
      s.basis_ = {so3_generator(0), so3_generator(1), so3_generator(2)};
      break;
    case GroupName::SL2R:
      s.dim_ = 2;
      s.basis_ = {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
      break;
  }
  return s;
}

Matrix LieGroupSpec::algebra_element(const std::vector<double>& coefficients) const
{
  if (coefficients.size() != basis_.size())
    throw PreconditionError("expected " + std::to_string(basis_.size()) + " algebra coefficients");
  Matrix x = zero_algebra();
  for (std::size_t k = 0; k < basis_.size(); ++k)
    x += coefficients[k] * basis_[k];
  return x;
}

bool LieGroupSpec::in_algebra(const Matrix& x, double tol) const
{
  if (x.rows() != dim_ || x.cols() != dim_)
    return false;
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  const double t = tol * scale;
  switch (name_) {
    case GroupName::U1:
      return std::abs(x(0, 0).real()) <= t;
    case GroupName::SU2:
      return (x + x.adjoint()).cwiseAbs().maxCoeff() <= t && std::abs(x.trace()) <= t;
    case GroupName::SO3:
      return imag_norm(x) <= t && (x + x.transpose()).cwiseAbs().maxCoeff() <= t;
    case GroupName::SL2R:
      return imag_norm(x) <= t && std::abs(x.trace()) <= t;
  }
  return false;
}

double LieGroupSpec::residual(const Matrix& g) const
{
  if (g.rows() != dim_ || g.cols() != dim_)
    return std::numeric_limits<double>::infinity();
  if (!g.allFinite())
    return std::numeric_limits<double>::infinity();
  const Matrix id = identity();
  switch (name_) {
    case GroupName::U1:
      return std::abs(std::abs(g(0, 0)) - 1.0);
    case GroupName::SU2:
      return operator_norm(g.adjoint() * g - id) + std::abs(g.determinant() - 1.0);
    case GroupName::SO3:
      return operator_norm(g.transpose() * g - id) + std::abs(g.determinant() - 1.0) + imag_norm(g);
    case GroupName::SL2R:
      return std::abs(g.determinant() - 1.0) + imag_norm(g);
  }
  return 0.0;
}

Matrix LieGroupSpec::project(const Matrix& g) const
{
  if (!g.allFinite())
    throw NumericalError("cannot project a non-finite matrix to " + to_string(name_));
  switch (name_) {
    case GroupName::U1: {
      const double r = std::abs(g(0, 0));
      if (r == 0.0)
        throw NumericalError("cannot project 0 to U(1)");
      return Matrix::Constant(1, 1, g(0, 0) / r);
    }
    case GroupName::SU2: {
      Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Matrix u = svd.matrixU() * svd.matrixV().adjoint();
      const cd det = u.determinant();
      return u * std::exp(-0.5 * I * std::arg(det));
    }
    case GroupName::SO3: {
      const Eigen::Matrix3d r = g.real();
      Eigen::JacobiSVD<Eigen::Matrix3d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
      if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0)
        d(2, 2) = -1.0;
      const Eigen::Matrix3d q = svd.matrixU() * d * svd.matrixV().transpose();
      return q.cast<cd>();
    }
    case GroupName::SL2R: {
      Eigen::Matrix2d r = g.real();
      const double det = r.determinant();
      if (det <= 0)
        throw NumericalError("cannot project a matrix with det <= 0 to SL(2,R)");
      r /= std::sqrt(det);
      return r.cast<cd>();
    }
  }
  return g;
}

MatrixSampler LieGroupSpec::sampler() const
{
  switch (name_) {
    case GroupName::U1:
      return [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> angle(-M_PI, M_PI);
        return Matrix(Matrix::Constant(1, 1, std::exp(I * angle(rng))));
      };
    case GroupName::SU2:
      return [](std::mt19937_64& rng) {
        const Eigen::Vector4d q = random_unit_quaternion(rng);
        const cd a{q[0], q[1]}, b{q[2], q[3]};
        return mat2(a, b, -std::conj(b), std::conj(a));
      };
    case GroupName::SO3:
      return [](std::mt19937_64& rng) {
        const Eigen::Vector4d q = random_unit_quaternion(rng);
        const Eigen::Quaterniond quat(q[0], q[1], q[2], q[3]);
        return Matrix(quat.toRotationMatrix().cast<cd>());
      };
    case GroupName::SL2R:
      return [spec = *this](std::mt19937_64& rng) {
        std::normal_distribution<double> normal;
        auto draw = [&] { return spec.algebra_element({normal(rng), normal(rng), normal(rng)}); };
        return Matrix(expm(draw()) * expm(draw()));
      };
  }
  return {};
}

double operator_norm(const Matrix& m)
{
  if (m.size() == 0)
    return 0.0;
  if (m.size() == 1)
    return std::abs(m(0, 0));
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double distance(const Matrix& a, const Matrix& b)
{
  return operator_norm(a - b);
}

Matrix expm(const Matrix& x)
{
  if (x.size() == 1)
    return Matrix::Constant(1, 1, std::exp(x(0, 0)));
  return x.exp();
}

Matrix rotation(int axis, double angle)
{
  return expm(angle * so3_generator(axis));
}

} // namespace hoops::gauge
