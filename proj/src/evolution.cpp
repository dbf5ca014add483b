#include "cotrans/evolution.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <unordered_map>

#include "cotrans/error.hpp"

namespace cotrans {

Eigen::MatrixXd GeneratorFunction::at(double t) const {
  Eigen::MatrixXd a = rule(t);
  if (a.rows() != dim || a.cols() != dim) {
    throw ConfigError("generator value has the wrong shape");
  }
  return a;
}

Eigen::MatrixXd integrate_transition(const GeneratorFunction& A, double u,
                                     double v, double step) {
  if (!(step > 0.0)) throw ConfigError("integration step must be positive");
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(A.dim, A.dim);
  if (u == v) return M;
  const double span = u - v;
  const double steps_needed = std::ceil(std::abs(span) / step);
  if (steps_needed > 1e7) {
    throw RangeError("integration span exceeds the step budget");
  }
  const long n = static_cast<long>(steps_needed);
  const double h = span / static_cast<double>(n);
  double t = v;
  for (long i = 0; i < n; ++i) {
    const Eigen::MatrixXd k1 = A.at(t) * M;
    const Eigen::MatrixXd k2 = A.at(t + h / 2) * (M + (h / 2) * k1);
    const Eigen::MatrixXd k3 = A.at(t + h / 2) * (M + (h / 2) * k2);
    const Eigen::MatrixXd k4 = A.at(t + h) * (M + h * k3);
    M += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    t = v + static_cast<double>(i + 1) * h;
  }
  if (!M.allFinite()) {
    throw NumericOverflowError("transition integration diverged");
  }
  return M;
}

namespace {

struct UVKey {
  std::uint64_t u, v;
  bool operator==(const UVKey&) const = default;
};

struct UVHash {
  std::size_t operator()(const UVKey& k) const {
    return k.u * 0x9e3779b97f4a7c15ull ^ (k.v + (k.u << 7));
  }
};

UVKey key_of(double u, double v) {
  UVKey k;
  std::memcpy(&k.u, &u, sizeof(double));
  std::memcpy(&k.v, &v, sizeof(double));
  return k;
}

}  // namespace

struct EvolutionOperator::Cache {
  std::mutex mutex;
  std::unordered_map<UVKey, Eigen::MatrixXd, UVHash> values;
};

EvolutionOperator::EvolutionOperator(GeneratorFunction A, double step)
    : A_(std::move(A)), step_(step), cache_(std::make_shared<Cache>()) {
  if (!(step_ > 0.0)) throw ConfigError("integration step must be positive");
}

Eigen::MatrixXd EvolutionOperator::psi(double u, double v) const {
  if (u == v) return Eigen::MatrixXd::Identity(A_.dim, A_.dim);
  const UVKey key = key_of(u, v);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  Eigen::MatrixXd value = integrate_transition(A_, u, v, step_);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(key, value);
  return value;
}

Evolution EvolutionOperator::as_evolution() const {
  EvolutionOperator self = *this;
  return Evolution{A_.dim,
                   [self](double u, double v) { return self.psi(u, v); }};
}

RealCotranslation cotranslation_of_evolution(const Evolution& E) {
  return RealCotranslation{E.dim, [E](double r, double t) {
                             return E.psi(t + r, r);
                           }};
}

Evolution evolution_of_cotranslation(const RealCotranslation& Z) {
  return Evolution{Z.dim, [Z](double u, double v) { return Z(v, u - v); }};
}

Eigen::MatrixXd fd_partial1(const RealCotranslation& Z, double r, double t,
                            double h) {
  if (!(h > 0.0)) throw ConfigError("difference step must be positive");
  return (Z(r + h, t) - Z(r - h, t)) / (2 * h);
}

Eigen::MatrixXd fd_partial2(const RealCotranslation& Z, double r, double t,
                            double h) {
  if (!(h > 0.0)) throw ConfigError("difference step must be positive");
  return (Z(r, t + h) - Z(r, t - h)) / (2 * h);
}

Eigen::MatrixXd infinitesimal_generator(const RealCotranslation& Z, double t,
                                        double h) {
  return fd_partial2(Z, t, 0.0, h);
}

namespace {

RealCotranslation inverse_of(const RealCotranslation& Z) {
  return RealCotranslation{Z.dim, [Z](double r, double t) {
                             return Z(r, t).inverse().eval();
                           }};
}

std::string at_point(double r, double t) {
  return "(r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")";
}

}  // namespace

Report verify_derivative_identities(
    const RealCotranslation& Z,
    const std::vector<std::pair<double, double>>& samples, double h,
    double tol) {
  Report report;
  auto& d1inv = report.add("d1_of_inverse");
  auto& d2inv = report.add("d2_of_inverse");
  auto& d1zero = report.add("d1_from_base_zero");
  auto& d2units = report.add("d2_through_units");
  auto& d1d2 = report.add("d1_from_d2");

  const RealCotranslation Zi = inverse_of(Z);
  for (const auto& [r, t] : samples) {
    const Eigen::MatrixXd zi = Zi(r, t);
    const Eigen::MatrixXd z = Z(r, t);

    double res = (fd_partial1(Zi, r, t, h) +
                  zi * fd_partial1(Z, r, t, h) * zi)
                     .norm();
    d1inv.record(res, res <= tol, "identity 1 fails at " + at_point(r, t));

    res = (fd_partial2(Zi, r, t, h) + zi * fd_partial2(Z, r, t, h) * zi)
              .norm();
    d2inv.record(res, res <= tol, "identity 2 fails at " + at_point(r, t));

    const Eigen::MatrixXd z_r_minus_r = Z(r, -r);
    res = (fd_partial1(Z, r, t, h) -
           (fd_partial1(Z, 0.0, t + r, h) * z_r_minus_r -
            z * fd_partial1(Z, 0.0, r, h) * z_r_minus_r))
              .norm();
    d1zero.record(res, res <= tol, "identity 3 fails at " + at_point(r, t));

    res = (fd_partial2(Z, r, t, h) - fd_partial2(Z, r + t, 0.0, h) * z).norm();
    d2units.record(res, res <= tol, "identity 4 fails at " + at_point(r, t));

    res = (fd_partial1(Z, r, t, h) -
           (fd_partial2(Z, r, t, h) - z * fd_partial2(Z, r, 0.0, h)))
              .norm();
    d1d2.record(res, res <= tol, "identity 5 fails at " + at_point(r, t));
  }
  return report;
}

Report verify_evolution_properties(const Evolution& E,
                                   const GeneratorFunction& A,
                                   const std::vector<std::array<double, 3>>& samples,
                                   double h, double tol) {
  Report report;
  auto& unit = report.add("psi_unit");
  auto& chain = report.add("chain_law");
  auto& ddu = report.add("d_du");
  auto& ddv = report.add("d_dv");
  auto& ivp = report.add("initial_value_and_ode");

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(E.dim, E.dim);
  for (const auto& [u, v, w] : samples) {
    double res = (E.psi(u, u) - id).norm();
    unit.record(res, res <= tol, "Psi(r,r) != Id at r=" + std::to_string(u));

    res = (E.psi(u, v) * E.psi(v, w) - E.psi(u, w)).norm();
    chain.record(res, res <= tol,
                 "Psi(u,v)Psi(v,w) != Psi(u,w) at u=" + std::to_string(u) +
                     ", v=" + std::to_string(v) + ", w=" + std::to_string(w));

    const Eigen::MatrixXd du =
        (E.psi(u + h, v) - E.psi(u - h, v)) / (2 * h);
    res = (du - A.at(u) * E.psi(u, v)).norm();
    ddu.record(res, res <= tol,
               "dPsi/du != A(u)Psi at u=" + std::to_string(u) +
                   ", v=" + std::to_string(v));

    const Eigen::MatrixXd dv =
        (E.psi(u, v + h) - E.psi(u, v - h)) / (2 * h);
    res = (dv + E.psi(u, v) * A.at(v)).norm();
    ddv.record(res, res <= tol,
               "dPsi/dv != -Psi A(v) at u=" + std::to_string(u) +
                   ", v=" + std::to_string(v));

    // Trajectory through xi = e_1 at time v: starts at xi and satisfies the
    // equation at u (finite-difference residual).
    Eigen::VectorXd xi = Eigen::VectorXd::Zero(E.dim);
    xi(0) = 1.0;
    res = (E.psi(v, v) * xi - xi).norm();
    const Eigen::VectorXd traj_rate =
        (E.psi(u + h, v) * xi - E.psi(u - h, v) * xi) / (2 * h);
    res = std::max(res, (traj_rate - A.at(u) * (E.psi(u, v) * xi)).norm());
    ivp.record(res, res <= tol,
               "trajectory is not a solution at u=" + std::to_string(u) +
                   ", v=" + std::to_string(v));
  }
  return report;
}

}  // namespace cotrans
