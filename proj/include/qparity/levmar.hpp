#ifndef QPARITY_LEVMAR_HPP
#define QPARITY_LEVMAR_HPP

#include <Eigen/Dense>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace qparity {

struct FitParam {
  std::string name;
  double initial = 0.0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool log_scale = false;   // strictly positive parameter, optimized as ln(p)
  std::string share_tag;    // parameters with equal non-empty tags are tied
};

struct FitOptions {
  int max_iterations = 200;
  double gradient_tol = 1e-10;
  double step_tol = 1e-12;
  double jacobian_step = 1e-7;  // h = max(step, step*|q|) per parameter
};

struct FitProblem {
  std::function<std::vector<double>(std::span<const double>)> residual;
  std::vector<FitParam> params;
  FitOptions options;
};

struct FitResult {
  std::vector<double> estimates;     // one per declared parameter
  std::vector<double> std_errors;
  Eigen::MatrixXd covariance;        // declared-parameter space
  bool converged = false;
  int iterations = 0;
  double final_cost = 0.0;           // sum of squared residuals
  std::string message;
  std::vector<double> cost_history;  // accepted costs, non-increasing
};

/// Damped least squares with numerical Jacobian (central differences),
/// bound handling by smooth parameter transforms, and shared-group
/// parameters tied to a single optimizer variable. Throws validation_error
/// if the residual is non-finite at the initial point; non-convergence is
/// reported through the result, not thrown.
FitResult levmar_fit(const FitProblem& problem);

} // namespace qparity

#endif
