#pragma once

#include "trr/common.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace trr {

double binomial(int n, int k);

/// C(n,i) t^i (1-t)^(n-i).
double bernstein(int n, int i, double t);

/// One Bézier piece: control points are the columns of |ctrl|, and the
/// curve is parameterised by t in [0, duration].
class BezierPiece {
 public:
  BezierPiece(Eigen::Matrix3Xd ctrl, double duration);

  int degree() const { return static_cast<int>(ctrl_.cols()) - 1; }
  double duration() const { return duration_; }
  const Eigen::Matrix3Xd& ctrl() const { return ctrl_; }

  /// Order-k derivative at time t. Orders above the degree give zero.
  Vec3 eval(double t, int order = 0) const;
  /// Control points of the order-k derivative curve (time-scaled).
  Eigen::Matrix3Xd derivative_ctrl(int order) const;

 private:
  Eigen::Matrix3Xd ctrl_;
  double duration_;
};

class PiecewiseBezier {
 public:
  PiecewiseBezier() = default;
  PiecewiseBezier(std::vector<BezierPiece> pieces, std::vector<int> polyhedron_index = {});

  const std::vector<BezierPiece>& pieces() const { return pieces_; }
  const std::vector<int>& polyhedron_index() const { return polyhedron_; }
  std::size_t size() const { return pieces_.size(); }
  double total_duration() const;
  std::vector<double> durations() const;

  /// Global time; clamped into [0, total_duration].
  Vec3 eval(double t, int order = 0) const;
  /// Piece index and local time for a global time.
  std::pair<std::size_t, double> locate(double t) const;

 private:
  std::vector<BezierPiece> pieces_;
  std::vector<int> polyhedron_;
};

/// Non-periodic B-spline of degree p with knots t_0..t_m, m = N + p + 1.
class BSpline {
 public:
  BSpline(int degree, std::vector<Vec3> ctrl, std::vector<double> knots);
  /// Uniform knots with the valid range starting at |t0|.
  static BSpline uniform(int degree, std::vector<Vec3> ctrl, double dt, double t0 = 0.0);

  int degree() const { return degree_; }
  const std::vector<Vec3>& ctrl() const { return ctrl_; }
  std::vector<Vec3>& mutable_ctrl() { return ctrl_; }
  const std::vector<double>& knots() const { return knots_; }
  std::vector<double>& mutable_knots() { return knots_; }

  double t_begin() const { return knots_[static_cast<std::size_t>(degree_)]; }
  double t_end() const { return knots_[ctrl_.size()]; }

  /// Matrix-form evaluation on the span containing t, t in [t_begin, t_end].
  Vec3 eval(double t, int order = 0) const;
  /// Degree p-1 spline of the first derivative.
  BSpline derivative() const;

  /// Basis matrix of span i (t_i <= t < t_{i+1}, p <= i <= N): row r holds the
  /// coefficients of u^r, column j multiplies control point Q_{i-p+j}.
  Eigen::MatrixXd span_matrix(std::size_t i) const;
  std::size_t span_index(double t) const;

 private:
  int degree_;
  std::vector<Vec3> ctrl_;
  std::vector<double> knots_;
};

struct Sample {
  double t;
  Vec3 p;
};

struct BSplineFit {
  BSpline spline;
  double rms;
  std::vector<std::string> warnings;
};

/// Least-squares uniform B-spline through time-uniform samples. The first
/// and last p control points are fixed so the curve reproduces |start| and
/// |end| (position, velocity, acceleration) at the window ends. The span is
/// shrunk so an integer number of spans covers the window exactly.
BSplineFit fit_uniform_bspline(const std::vector<Sample>& samples, double span, int degree, const State& start,
                               const State& end);

/// Fixed boundary control points for a uniform spline reproducing |s| at the
/// start (at_end = false) or at the end of the valid range.
std::vector<Vec3> clamp_control_points(const State& s, double dt, int degree, bool at_end);

}  // namespace trr
