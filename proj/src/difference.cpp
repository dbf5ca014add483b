#include "cotrans/difference.hpp"

namespace cotrans {

Cotranslation cotranslation_from_sequence(const MatrixSequence& S) {
  auto P = GroupPresentation::integers();
  const Space X = Space::euclidean(S.dim());
  MatrixSequence seq = S;
  GeneratorMaps::Rule rule = [seq, X](const Word& base) {
    return Transform::affine(X, seq.at(word_to_int(base)),
                             Eigen::VectorXd::Zero(seq.dim()));
  };
  return Cotranslation(GeneratorMaps(std::move(P), X, {rule}));
}

MatrixSequence generator_from_cotranslation(const Cotranslation& Z,
                                            long horizon) {
  if (Z.presentation().family() != Family::Integers) {
    throw UnsupportedOperationError(
        "generator extraction needs a cotranslation over the integers");
  }
  if (Z.space().kind != SpaceKind::Euclidean) {
    throw UnsupportedOperationError("needs a Euclidean carrier space");
  }
  const int dim = Z.space().dim;
  Cotranslation source = Z;
  MatrixSequence::Rule rule = [source](long n) {
    auto lin = source.evaluate(word_from_int(n), word_from_int(1)).as_linear();
    if (!lin) {
      throw UnsupportedOperationError(
          "cotranslation value at n=" + std::to_string(n) + " is not linear");
    }
    return *lin;
  };
  return MatrixSequence(dim, std::move(rule), horizon);
}

Report verify_cocycle(const MatrixSequence& S,
                      const std::vector<std::array<long, 3>>& samples,
                      double tol) {
  Report report;
  auto& law = report.add("difference_cocycle_law");
  for (const auto& [n, m, p] : samples) {
    const Eigen::MatrixXd whole = transition_matrix(S, n, m + p);
    const Eigen::MatrixXd split =
        transition_matrix(S, m + n, p) * transition_matrix(S, n, m);
    const double r =
        (whole - split).norm() / std::max(1.0, whole.norm());
    law.record(r, r <= tol,
               "Z(n,m+p) != Z(m+n,p)Z(n,m) at n=" + std::to_string(n) +
                   ", m=" + std::to_string(m) + ", p=" + std::to_string(p));
  }
  return report;
}

}  // namespace cotrans
