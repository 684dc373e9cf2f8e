#include "qparity/levmar.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qparity/errors.hpp"

namespace qparity {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Transform { identity, log, lower_bounded, upper_bounded, box };

struct Var {
  Transform transform = Transform::identity;
  double lower = -kInf, upper = kInf;

  double external(double q) const {
    switch (transform) {
      case Transform::identity: return q;
      case Transform::log: return std::exp(q);
      case Transform::lower_bounded: return lower + std::exp(q);
      case Transform::upper_bounded: return upper - std::exp(q);
      case Transform::box:
        return lower + (upper - lower) / (1.0 + std::exp(-q));
    }
    return q;
  }
  double internal(double p) const {
    switch (transform) {
      case Transform::identity: return p;
      case Transform::log: return std::log(p);
      case Transform::lower_bounded: return std::log(p - lower);
      case Transform::upper_bounded: return std::log(upper - p);
      case Transform::box: {
        const double f = (p - lower) / (upper - lower);
        return std::log(f / (1.0 - f));
      }
    }
    return p;
  }
  // d external / d internal
  double slope(double q) const {
    switch (transform) {
      case Transform::identity: return 1.0;
      case Transform::log: return std::exp(q);
      case Transform::lower_bounded: return std::exp(q);
      case Transform::upper_bounded: return -std::exp(q);
      case Transform::box: {
        const double s = 1.0 / (1.0 + std::exp(-q));
        return (upper - lower) * s * (1.0 - s);
      }
    }
    return 1.0;
  }
};

Var make_var(const FitParam& p) {
  Var v;
  v.lower = p.lower;
  v.upper = p.upper;
  if (p.log_scale) {
    if (!(p.initial > 0.0))
      throw validation_error("levmar: log-scale parameter '" + p.name +
                             "' needs a positive initial value");
    v.transform = Transform::log;
  } else if (std::isfinite(p.lower) && std::isfinite(p.upper)) {
    if (!(p.lower < p.upper))
      throw validation_error("levmar: bounds out of order for '" + p.name + "'");
    if (!(p.initial > p.lower && p.initial < p.upper))
      throw validation_error("levmar: initial value outside bounds for '" +
                             p.name + "'");
    v.transform = Transform::box;
  } else if (std::isfinite(p.lower)) {
    if (!(p.initial > p.lower))
      throw validation_error("levmar: initial value below bound for '" + p.name + "'");
    v.transform = Transform::lower_bounded;
  } else if (std::isfinite(p.upper)) {
    if (!(p.initial < p.upper))
      throw validation_error("levmar: initial value above bound for '" + p.name + "'");
    v.transform = Transform::upper_bounded;
  }
  return v;
}

} // namespace

FitResult levmar_fit(const FitProblem& problem) {
  const auto& params = problem.params;
  const std::size_t n_decl = params.size();
  if (n_decl == 0) throw validation_error("levmar: no parameters");
  if (!problem.residual) throw validation_error("levmar: no residual function");

  // Collapse shared groups onto internal variables.
  std::vector<int> var_of(n_decl, -1);
  std::vector<Var> vars;
  std::vector<double> q0;
  std::map<std::string, int> group;
  for (std::size_t i = 0; i < n_decl; ++i) {
    if (!params[i].share_tag.empty()) {
      auto it = group.find(params[i].share_tag);
      if (it != group.end()) {
        var_of[i] = it->second;
        continue;
      }
    }
    const int idx = static_cast<int>(vars.size());
    vars.push_back(make_var(params[i]));
    q0.push_back(vars.back().internal(params[i].initial));
    var_of[i] = idx;
    if (!params[i].share_tag.empty()) group[params[i].share_tag] = idx;
  }
  const std::size_t n_var = vars.size();

  const auto expand = [&](const Eigen::VectorXd& q) {
    std::vector<double> p(n_decl);
    for (std::size_t i = 0; i < n_decl; ++i)
      p[i] = vars[var_of[i]].external(q[var_of[i]]);
    return p;
  };

  const auto eval = [&](const Eigen::VectorXd& q, Eigen::VectorXd& r) -> bool {
    const std::vector<double> res = problem.residual(expand(q));
    r = Eigen::Map<const Eigen::VectorXd>(res.data(),
                                          static_cast<Eigen::Index>(res.size()));
    return r.allFinite();
  };

  Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(
      q0.data(), static_cast<Eigen::Index>(n_var));
  Eigen::VectorXd r;
  if (!eval(q, r))
    throw validation_error("levmar: residual not finite at the initial point");
  const Eigen::Index m = r.size();
  if (m < static_cast<Eigen::Index>(n_var))
    throw validation_error("levmar: fewer residuals than free parameters");

  const FitOptions& opt = problem.options;
  double cost = r.squaredNorm();

  FitResult out;
  out.cost_history.push_back(cost);

  const auto jacobian = [&](const Eigen::VectorXd& at, Eigen::MatrixXd& J) -> bool {
    J.resize(m, static_cast<Eigen::Index>(n_var));
    Eigen::VectorXd rp, rm, qq = at;
    for (std::size_t j = 0; j < n_var; ++j) {
      const double h =
          std::max(opt.jacobian_step, opt.jacobian_step * std::fabs(at[j]));
      qq[j] = at[j] + h;
      const bool okp = eval(qq, rp);
      qq[j] = at[j] - h;
      const bool okm = eval(qq, rm);
      qq[j] = at[j];
      if (!okp || !okm) return false;
      J.col(static_cast<Eigen::Index>(j)) = (rp - rm) / (2.0 * h);
    }
    return true;
  };

  Eigen::MatrixXd J;
  double lambda = -1.0;
  bool converged = false;
  std::string message;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    if (!jacobian(q, J)) {
      message = "non-finite residual while forming the Jacobian";
      break;
    }
    const Eigen::VectorXd g = J.transpose() * r;
    Eigen::MatrixXd A = J.transpose() * J;
    if (g.lpNorm<Eigen::Infinity>() < opt.gradient_tol * std::max(1.0, cost)) {
      converged = true;
      message = "gradient tolerance reached";
      break;
    }
    // start near Gauss-Newton; rejected steps raise the damping quickly
    if (lambda < 0.0) lambda = 1e-8 * A.diagonal().maxCoeff();
    if (!(lambda > 0.0) || !std::isfinite(lambda)) lambda = 1e-8;

    bool stepped = false;
    for (int attempt = 0; attempt < 30; ++attempt) {
      Eigen::MatrixXd Ad = A;
      Ad.diagonal() += lambda * A.diagonal().cwiseMax(1e-30);
      Eigen::LDLT<Eigen::MatrixXd> ldlt(Ad);
      if (ldlt.info() != Eigen::Success) {
        lambda *= 10.0;
        continue;
      }
      const Eigen::VectorXd delta = ldlt.solve(-g);
      if (!delta.allFinite()) {
        lambda *= 10.0;
        continue;
      }
      if (delta.norm() < opt.step_tol * (q.norm() + opt.step_tol)) {
        converged = true;
        message = "step tolerance reached";
        stepped = false;
        break;
      }
      Eigen::VectorXd r_try;
      const Eigen::VectorXd q_try = q + delta;
      if (eval(q_try, r_try)) {
        const double cost_try = r_try.squaredNorm();
        if (cost_try < cost) {
          q = q_try;
          r = r_try;
          cost = cost_try;
          out.cost_history.push_back(cost);
          lambda = std::max(lambda / 8.0, 1e-300);
          stepped = true;
          break;
        }
      }
      lambda *= 8.0;
    }
    if (converged) break;
    if (!stepped) {
      // no acceptable step found at any damping
      converged = true;
      message = "no further improvement possible";
      break;
    }
  }
  if (!converged && message.empty()) message = "maximum iterations reached";

  out.converged = converged;
  out.iterations = iter;
  out.final_cost = cost;
  out.message = message;
  out.estimates = expand(q);

  // Covariance in declared-parameter space by the delta method.
  out.covariance = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_decl),
                                         static_cast<Eigen::Index>(n_decl));
  out.std_errors.assign(n_decl, 0.0);
  if (jacobian(q, J)) {
    const Eigen::Index dof = m - static_cast<Eigen::Index>(n_var);
    const double sigma2 = dof > 0 ? cost / static_cast<double>(dof) : 0.0;
    Eigen::MatrixXd A = J.transpose() * J;
    // a parameter with no leverage gets a huge variance, not a zero one
    const double ridge = 1e-12 * std::max(A.diagonal().maxCoeff(), 1e-300);
    A.diagonal() += ridge * Eigen::VectorXd::Ones(A.rows());
    const Eigen::MatrixXd cov_q =
        sigma2 *
        A.ldlt().solve(Eigen::MatrixXd::Identity(A.rows(), A.cols()));
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_decl),
                                              static_cast<Eigen::Index>(n_var));
    for (std::size_t i = 0; i < n_decl; ++i)
      D(static_cast<Eigen::Index>(i), var_of[i]) = vars[var_of[i]].slope(q[var_of[i]]);
    out.covariance = D * cov_q * D.transpose();
    for (std::size_t i = 0; i < n_decl; ++i) {
      const double v = out.covariance(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(i));
      out.std_errors[i] = v > 0 ? std::sqrt(v) : 0.0;
    }
  }
  return out;
}

} // namespace qparity
