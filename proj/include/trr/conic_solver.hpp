#pragma once

#include "trr/common.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace trr {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Eigen::VectorXd;

/// min 1/2 x'Px + c'x  s.t.  A_eq x = b_eq,  A_ie x <= b_ie.
struct QpProblem {
  SparseMatrix P;
  VectorXd c;
  SparseMatrix A_eq;
  VectorXd b_eq;
  SparseMatrix A_ie;
  VectorXd b_ie;
};

enum class ConeKind {
  kQuadratic,  // u0 >= ||u1..||
  kRotated,    // 2 u0 u1 >= ||u2..||^2, u0, u1 >= 0
};

/// Affine cone membership G x + h in K.
struct ConeConstraint {
  ConeKind kind = ConeKind::kQuadratic;
  SparseMatrix G;
  VectorXd h;
};

/// min 1/2 x'Px + c'x  s.t.  A_eq x = b_eq,  A_ie x <= b_ie,  G_i x + h_i in K_i.
/// P may be left empty (0 x 0) for a purely linear objective.
struct SocpProblem {
  SparseMatrix P;
  VectorXd c;
  SparseMatrix A_eq;
  VectorXd b_eq;
  SparseMatrix A_ie;
  VectorXd b_ie;
  std::vector<ConeConstraint> cones;
};

enum class SolveStatus { kOptimal, kInfeasible, kMaxIter };

const char* to_string(SolveStatus s);

/// Scaled KKT residuals, all measured on the caller's problem.
struct Residuals {
  double stationarity = 0;     // ||Px + c + A_eq'y + A_ie'z - sum G_i'z_i||_inf / max(1, ||c||_inf)
  double primal = 0;           // equality and cone violation of x / max(1, ||b||_inf, ||h||_inf)
  double dual = 0;             // cone violation of the multipliers
  double complementarity = 0;  // |slack'z| / max(1, |objective|)

  double max() const;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kMaxIter;
  VectorXd x;
  VectorXd y;                    // equality multipliers
  VectorXd z_ineq;               // >= 0
  std::vector<VectorXd> z_cone;  // in the caller's cone coordinates
  double objective = 0;
  Residuals residuals;
  int iterations = 0;
  std::string message;
};

struct SolverOptions {
  double feastol = 1e-10;
  double gaptol = 1e-10;
  double accept = 1e-6;  // residual bound that qualifies a stalled run as optimal
  int max_iter = 10000;
  double regularization = 1e-11;
  int refinement_steps = 3;
};

SolveReport solve_qp(const QpProblem& problem, const SolverOptions& options = {});
SolveReport solve_socp(const SocpProblem& problem, const SolverOptions& options = {});

/// Recomputes the residuals of |report| from scratch.
Residuals compute_residuals(const SocpProblem& problem, const SolveReport& report);
Residuals compute_residuals(const QpProblem& problem, const SolveReport& report);

SocpProblem to_socp(const QpProblem& qp);

/// Triplet helper for assembling sparse systems row by row.
class SparseBuilder {
 public:
  explicit SparseBuilder(int cols) : cols_(cols) {}
  int add_row() { return rows_++; }
  void add(int row, int col, double value);
  int rows() const { return rows_; }
  SparseMatrix build() const;

 private:
  int cols_;
  int rows_ = 0;
  std::vector<Eigen::Triplet<double>> triplets_;
};

}  // namespace trr
