#include "hoops/log_map.hpp"

#include "hoops/error.hpp"

#include <algorithm>
#include <cmath>

namespace hoops::gauge {

namespace {

using cd = std::complex<double>;

Matrix log_u1(const Matrix& g)
{
  return Matrix::Constant(1, 1, cd(0.0, std::arg(g(0, 0))));
}

Matrix log_su2(const Matrix& g)
{
  // g = cos t I + sin t (n . i sigma), t in [0, pi]
  const double c = 0.5 * g.trace().real();
  const Matrix skew = 0.5 * (g - g.adjoint());
  const double s = operator_norm(skew);
  const double t = std::atan2(s, c);
  if (s < 1e-12) {
    if (c > 0)
      return skew;
    // g = -I: any unit axis works
    Matrix x = Matrix::Zero(2, 2);
    x(0, 0) = cd(0.0, M_PI);
    x(1, 1) = cd(0.0, -M_PI);
    return x;
  }
  return (t / s) * skew;
}

Eigen::Matrix3d hat(const Eigen::Vector3d& n)
{
  Eigen::Matrix3d k;
  k << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
  return k;
}

Matrix log_so3(const Matrix& g)
{
  const Eigen::Matrix3d r = g.real();
  const double c = 0.5 * (r.trace() - 1.0);
  const Eigen::Matrix3d skew = 0.5 * (r - r.transpose());
  const Eigen::Vector3d axial(skew(2, 1), skew(0, 2), skew(1, 0)); // sin t * n
  const double s = axial.norm();
  const double t = std::atan2(s, c);
  if (t < M_PI_2) {
    const double scale = s < 1e-12 ? 1.0 : t / s;
    return (scale * skew).cast<cd>();
  }
  // Near pi the skew part is small; read the axis off the symmetric part
  // n n^T = (R + R^T - 2c I) / (2 (1 - c)).
  const double cc = std::cos(t);
  const Eigen::Matrix3d nn = (0.5 * (r + r.transpose()) - cc * Eigen::Matrix3d::Identity()) / (1.0 - cc);
  int k = 0;
  nn.diagonal().maxCoeff(&k);
  Eigen::Vector3d n = nn.col(k) / std::sqrt(nn(k, k));
  if (n.dot(axial) < 0)
    n = -n;
  return (t * hat(n)).cast<cd>();
}

// Real traceless X with exp(X) = g for trace(g) > -2; g in SL(2,R).
Eigen::Matrix2d log_sl2_principal(const Eigen::Matrix2d& g)
{
  const double h = 0.5 * g.trace();
  const Eigen::Matrix2d y = g - h * Eigen::Matrix2d::Identity();
  double scale;
  if (h > 1.0) {
    const double s = std::acosh(h);
    scale = s / std::sinh(s);
  } else if (h < 1.0) {
    const double s = std::acos(h);
    scale = s / std::sin(s);
  } else {
    scale = 1.0;
  }
  return scale * y;
}

} // namespace

LogResult log_map(const Matrix& g, const LieGroupSpec& spec)
{
  const double tol = spec.name() == GroupName::SL2R ? 1e-8 : 1e-10;
  if (spec.residual(g) > tol)
    throw PreconditionError("log_map: element is not in " + to_string(spec.name()) + " (residual " +
                            std::to_string(spec.residual(g)) + ")");
  LogResult out;
  switch (spec.name()) {
    case GroupName::U1: out.factors.push_back(log_u1(g)); break;
    case GroupName::SU2: out.factors.push_back(log_su2(g)); break;
    case GroupName::SO3: out.factors.push_back(log_so3(g)); break;
    case GroupName::SL2R: {
      const Eigen::Matrix2d r = g.real();
      const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
      Eigen::Matrix2d j;
      j << 0, -1, 1, 0;
      // Traces near -2 are ill-conditioned for the principal branch; write
      // g = (-I) * (-g) = exp(pi J) exp(log(-g)) instead.
      if (r.trace() > -2.0 + 1e-6) {
        out.factors.push_back(log_sl2_principal(r).cast<cd>());
      } else if ((r + id).norm() < 1e-14) {
        out.factors.push_back((M_PI * j).cast<cd>());
      } else {
        out.factors.push_back((M_PI * j).cast<cd>());
        out.factors.push_back(log_sl2_principal(-r).cast<cd>());
      }
      break;
    }
  }
  Matrix product = spec.identity();
  for (const auto& x : out.factors)
    product = product * expm(x);
  out.residual = distance(product, g);
  return out;
}

} // namespace hoops::gauge
