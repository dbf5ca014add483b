#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>

#include "cotrans/cotranslation.hpp"
#include "cotrans/difference.hpp"
#include "cotrans/presentation.hpp"
#include "cotrans/report.hpp"

namespace cotrans {

// Invertible-matrix-valued cotranslation over a discrete group.
class MatrixCotranslation {
 public:
  using Eval = std::function<Eigen::MatrixXd(const Word&, const Word&)>;

  MatrixCotranslation(GroupPresentation pres, int dim, Eval eval);
  static MatrixCotranslation from_sequence(const MatrixSequence& S);

  const GroupPresentation& presentation() const { return pres_; }
  int dim() const { return dim_; }
  Eigen::MatrixXd evaluate(const Word& g, const Word& h) const;

 private:
  GroupPresentation pres_;
  int dim_;
  Eval eval_;
};

// Idempotent-valued map g -> P(g). Values are checked for idempotency
// (within 1e-9) on access.
class MatrixProjector {
 public:
  using Rule = std::function<Eigen::MatrixXd(const Word&)>;

  MatrixProjector(GroupPresentation pres, int dim, Rule rule);
  static MatrixProjector constant(GroupPresentation pres, Eigen::MatrixXd P);

  const GroupPresentation& presentation() const { return pres_; }
  int dim() const { return dim_; }
  Eigen::MatrixXd at(const Word& g) const;

 private:
  GroupPresentation pres_;
  int dim_;
  Rule rule_;
};

enum class PartialForm { Product, ConstantBlock, Conjugated, Sum, Explicit };

// W: G x G -> M_d(R) obeying W(g, kh) = W(hg, k) W(g, h), with possibly
// non-invertible values. Explicit-rule instances must pass the law check
// before the calculus operations run; ensure_verified performs the check
// once per instance.
class PartialCotranslation {
 public:
  static PartialCotranslation explicit_rule(GroupPresentation pres, int dim,
                                            MatrixCotranslation::Eval eval);
  // Constant value diag(Id_rank, 0).
  static PartialCotranslation constant_block(GroupPresentation pres, int dim,
                                             int rank);
  static PartialCotranslation from_cotranslation(const MatrixCotranslation& Z);

  const GroupPresentation& presentation() const { return pres_; }
  int dim() const { return dim_; }
  PartialForm form() const { return form_; }
  Eigen::MatrixXd evaluate(const Word& g, const Word& h) const;

  bool verified() const { return *verified_; }

  friend PartialCotranslation restrict_partial(const PartialCotranslation&,
                                               const MatrixProjector&,
                                               double);
  friend PartialCotranslation orthogonal_sum(const PartialCotranslation&,
                                             const PartialCotranslation&,
                                             double);
  friend PartialCotranslation conjugate(const PartialCotranslation&,
                                        const MatrixProjector::Rule&);
  friend void ensure_verified(const PartialCotranslation& W);

 private:
  PartialCotranslation(GroupPresentation pres, int dim, PartialForm form,
                       MatrixCotranslation::Eval eval, bool verified);

  GroupPresentation pres_;
  int dim_;
  PartialForm form_;
  MatrixCotranslation::Eval eval_;
  std::shared_ptr<bool> verified_;
};

// Sample words for the group: all elements for small finite groups, else
// ball(P, radius).
std::vector<Word> sample_words(const GroupPresentation& P, int radius = 3);

// Relative Frobenius residual of the partial law over the sampled triples.
Report verify_partial_law(const PartialCotranslation& W,
                          const std::vector<std::array<Word, 3>>& triples,
                          double tol);
Report verify_partial_law(const PartialCotranslation& W, int radius = 3,
                          double tol = 1e-8);

// Runs the law check once for instances not verified by construction;
// throws InconsistencyError on failure.
void ensure_verified(const PartialCotranslation& W);

// g -> W(g, e), the idempotent the partial cotranslation induces on units.
MatrixProjector units_projector(const PartialCotranslation& W);

// Numerical rank (singular values above 1e-9 relative), required constant
// across the sampled pairs; also asserts that ker W(h, g) does not depend on
// g (principal angles below 1e-7).
int rank_of(const PartialCotranslation& W,
            const std::vector<std::pair<Word, Word>>& samples);
int rank_of(const PartialCotranslation& W, int radius = 3);

// Invariance P(hg) V(g,h) = V(g,h) P(g), for Id - P as well; and mutual
// orthogonality of projector pairs.
Report verify_invariant_projector(const MatrixProjector& P,
                                  const PartialCotranslation& V,
                                  const std::vector<std::pair<Word, Word>>& samples,
                                  double tol);
Report verify_projector_orthogonality(const MatrixProjector& P,
                                      const MatrixProjector& Q,
                                      const std::vector<Word>& samples,
                                      double tol);

// W(g, h) = V(g, h) P(g) for an invariant projector P; invariance is
// re-checked on samples and failures reject with a witness.
PartialCotranslation restrict_partial(const PartialCotranslation& V,
                                      const MatrixProjector& P,
                                      double tol = 1e-8);
PartialCotranslation restrict_partial(const MatrixCotranslation& V,
                                      const MatrixProjector& P,
                                      double tol = 1e-8);

// W + V for mutually orthogonal summands; orthogonality is checked on
// samples first. restrict_partial(W + V, units_projector(W)) recovers W.
PartialCotranslation orthogonal_sum(const PartialCotranslation& W,
                                    const PartialCotranslation& V,
                                    double tol = 1e-8);

// W_T(g, h) = T(hg)^-1 W(g, h) T(g). Near-singular T values (condition
// above 1e12) are rejected. Preserves the law, the rank and mutual
// orthogonality.
PartialCotranslation conjugate(const PartialCotranslation& W,
                               const MatrixProjector::Rule& T);

struct DiagonalizerResult {
  // T(g) whose first n columns are an orthonormal basis of im P(g) and the
  // rest an orthonormal basis of ker P(g); conjugation by it sends P(g) to
  // the constant orthogonal block.
  std::function<Eigen::MatrixXd(const Word&)> T;
  int rank = 0;
  double M = 1.0;  // sup over samples of max(|P|, |Id-P|)
  Report report;   // block-form residuals and the norm bounds |T| <= d,
                   // |T^-1| <= d*M per sample
};

DiagonalizerResult bounded_diagonalizer(const MatrixProjector& P,
                                        const std::vector<Word>& samples);

struct Completion {
  PartialCotranslation complement;  // mutually orthogonal to W
  PartialCotranslation total;       // W + complement, rank d, invertible values
  Report report;
};

Completion complete(const PartialCotranslation& W, int radius = 3,
                    double tol = 1e-8);

struct Factorization {
  MatrixCotranslation Z;  // invertible-valued completion
  MatrixProjector P;      // units projector of W
  Report report;          // residuals of W(g,h) = Z(g,h) P(g)
};

Factorization factorize(const PartialCotranslation& W, int radius = 3,
                        double tol = 1e-8);

// Matrix view of a cotranslation whose transforms are linear maps of R^d.
MatrixCotranslation from_linear_cotranslation(const Cotranslation& Z);

// Seeded instance of an invertible cocycle with a known invariant projector:
// a block-diagonal cocycle (block sizes as given) conjugated by a
// well-conditioned random frame per group element, together with the
// conjugated block projector. Supported over the integers and cyclic groups.
struct BlockCocycleInstance {
  MatrixCotranslation V;
  MatrixProjector P;  // invariant for V, rank = blocks[0]
  int rank = 0;
};

BlockCocycleInstance random_block_cocycle(const GroupPresentation& P,
                                          const std::vector<int>& blocks,
                                          std::uint64_t seed);

}  // namespace cotrans
