#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <vector>

#include "cotrans/report.hpp"

namespace cotrans {

// t -> A(t), the coefficient of the linear equation x' = A(t) x. Assumed
// continuous; smooth wherever finite differences are taken.
struct GeneratorFunction {
  int dim = 1;
  std::function<Eigen::MatrixXd(double)> rule;

  Eigen::MatrixXd at(double t) const;
};

// Psi(u, v) by classical fixed-step 4th-order integration of M' = A(t) M
// from t = v with M(v) = Id. Global error O(step^4).
Eigen::MatrixXd integrate_transition(const GeneratorFunction& A, double u,
                                     double v, double step);

// Two-parameter family with Psi(r,r) = Id and Psi(u,v)Psi(v,w) = Psi(u,w).
struct Evolution {
  int dim = 1;
  std::function<Eigen::MatrixXd(double, double)> psi;
};

// Integrator-backed evolution operator with a cache of previously requested
// (u, v) pairs.
class EvolutionOperator {
 public:
  EvolutionOperator(GeneratorFunction A, double step);

  Eigen::MatrixXd psi(double u, double v) const;
  Evolution as_evolution() const;
  const GeneratorFunction& generator() const { return A_; }
  double step() const { return step_; }

 private:
  GeneratorFunction A_;
  double step_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Matrix-valued cotranslation over (R, +), evaluated numerically.
struct RealCotranslation {
  int dim = 1;
  std::function<Eigen::MatrixXd(double, double)> eval;

  Eigen::MatrixXd operator()(double r, double t) const { return eval(r, t); }
};

// Z(r, t) = Psi(t + r, r).
RealCotranslation cotranslation_of_evolution(const Evolution& E);
// Psi(u, v) = Z(v, u - v).
Evolution evolution_of_cotranslation(const RealCotranslation& Z);

// Central differences, error O(h^2) for smooth generators.
Eigen::MatrixXd fd_partial1(const RealCotranslation& Z, double r, double t,
                            double h);
Eigen::MatrixXd fd_partial2(const RealCotranslation& Z, double r, double t,
                            double h);

// A(t) = d2 Z(t, 0).
Eigen::MatrixXd infinitesimal_generator(const RealCotranslation& Z, double t,
                                        double h);

// The five derivative identities of a differentiable cotranslation, checked
// with central differences at the sampled (r, t):
//   d1 Z^inv(r,t) = -Z^inv(r,t) [d1 Z(r,t)] Z^inv(r,t)
//   d2 Z^inv(r,t) = -Z^inv(r,t) [d2 Z(r,t)] Z^inv(r,t)
//   d1 Z(r,t)     = [d1 Z(0,t+r)] Z(r,-r) - Z(r,t) [d1 Z(0,r)] Z(r,-r)
//   d2 Z(r,t)     = [d2 Z(r+t,0)] Z(r,t)
//   d1 Z(r,t)     = d2 Z(r,t) - Z(r,t) [d2 Z(r,0)]
Report verify_derivative_identities(
    const RealCotranslation& Z,
    const std::vector<std::pair<double, double>>& samples, double h,
    double tol);

// Evolution-operator properties: Psi(r,r) = Id, the chain law over sampled
// (u, v, w), dPsi/du = A(u) Psi(u,v), dPsi/dv = -Psi(u,v) A(v), and the
// initial-value property of trajectories u -> Psi(u, v) xi.
Report verify_evolution_properties(const Evolution& E,
                                   const GeneratorFunction& A,
                                   const std::vector<std::array<double, 3>>& samples,
                                   double h, double tol);

}  // namespace cotrans
