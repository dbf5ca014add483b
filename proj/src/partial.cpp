#include "cotrans/partial.hpp"

#include <unordered_map>

#include "cotrans/error.hpp"
#include "cotrans/rng.hpp"

namespace cotrans {

namespace {

std::string at_pair(const Word& g, const Word& h, const GroupPresentation& P) {
  return "(g=" + to_string(g, P) + ", h=" + to_string(h, P) + ")";
}

double operator_norm(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

// Orthonormal bases of the image and kernel of an idempotent via SVD.
struct ImKer {
  Eigen::MatrixXd im;   // d x n
  Eigen::MatrixXd ker;  // d x (d - n)
};

ImKer image_kernel_bases(const Eigen::MatrixXd& p) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      p, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() == 0 ? 0.0 : 1e-9 * sv(0);
  int n = 0;
  while (n < sv.size() && sv(n) > cutoff && sv(n) > 1e-12) ++n;
  ImKer out;
  out.im = svd.matrixU().leftCols(n);
  out.ker = svd.matrixV().rightCols(p.rows() - n);
  return out;
}

// sin of the largest principal angle between the column spaces of two
// orthonormal bases of equal width.
double kernel_angle(const Eigen::MatrixXd& k1, const Eigen::MatrixXd& k2) {
  if (k1.cols() == 0 && k2.cols() == 0) return 0.0;
  if (k1.cols() != k2.cols()) return 1.0;
  const Eigen::MatrixXd residual = k2 - k1 * (k1.transpose() * k2);
  return operator_norm(residual);
}

}  // namespace

MatrixCotranslation::MatrixCotranslation(GroupPresentation pres, int dim,
                                         Eval eval)
    : pres_(std::move(pres)), dim_(dim), eval_(std::move(eval)) {
  if (dim_ < 1) throw ConfigError("matrix dimension must be >= 1");
}

MatrixCotranslation MatrixCotranslation::from_sequence(const MatrixSequence& S) {
  MatrixSequence seq = S;
  return MatrixCotranslation(
      GroupPresentation::integers(), S.dim(),
      [seq](const Word& g, const Word& h) {
        return transition_matrix(seq, word_to_int(g), word_to_int(h));
      });
}

Eigen::MatrixXd MatrixCotranslation::evaluate(const Word& g,
                                              const Word& h) const {
  Eigen::MatrixXd m = eval_(normal_form(g, pres_), normal_form(h, pres_));
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw ConfigError("cotranslation value has the wrong shape");
  }
  return m;
}

MatrixProjector::MatrixProjector(GroupPresentation pres, int dim, Rule rule)
    : pres_(std::move(pres)), dim_(dim), rule_(std::move(rule)) {
  if (dim_ < 1) throw ConfigError("matrix dimension must be >= 1");
}

MatrixProjector MatrixProjector::constant(GroupPresentation pres,
                                          Eigen::MatrixXd P) {
  const int dim = static_cast<int>(P.rows());
  return MatrixProjector(std::move(pres), dim,
                         [P](const Word&) { return P; });
}

Eigen::MatrixXd MatrixProjector::at(const Word& g) const {
  Eigen::MatrixXd p = rule_(normal_form(g, pres_));
  if (p.rows() != dim_ || p.cols() != dim_) {
    throw ConfigError("projector value has the wrong shape");
  }
  if ((p * p - p).norm() > 1e-9) {
    throw InconsistencyError("projector value is not idempotent at g=" +
                             to_string(g, pres_));
  }
  return p;
}

PartialCotranslation::PartialCotranslation(GroupPresentation pres, int dim,
                                           PartialForm form,
                                           MatrixCotranslation::Eval eval,
                                           bool verified)
    : pres_(std::move(pres)),
      dim_(dim),
      form_(form),
      eval_(std::move(eval)),
      verified_(std::make_shared<bool>(verified)) {}

PartialCotranslation PartialCotranslation::explicit_rule(
    GroupPresentation pres, int dim, MatrixCotranslation::Eval eval) {
  return PartialCotranslation(std::move(pres), dim, PartialForm::Explicit,
                              std::move(eval), false);
}

PartialCotranslation PartialCotranslation::constant_block(
    GroupPresentation pres, int dim, int rank) {
  if (rank < 0 || rank > dim) throw ConfigError("rank must be in [0, dim]");
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(dim, dim);
  block.topLeftCorner(rank, rank) =
      Eigen::MatrixXd::Identity(rank, rank);
  return PartialCotranslation(
      std::move(pres), dim, PartialForm::ConstantBlock,
      [block](const Word&, const Word&) { return block; }, true);
}

PartialCotranslation PartialCotranslation::from_cotranslation(
    const MatrixCotranslation& Z) {
  MatrixCotranslation inner = Z;
  return PartialCotranslation(
      Z.presentation(), Z.dim(), PartialForm::Explicit,
      [inner](const Word& g, const Word& h) { return inner.evaluate(g, h); },
      false);
}

Eigen::MatrixXd PartialCotranslation::evaluate(const Word& g,
                                               const Word& h) const {
  Eigen::MatrixXd m = eval_(normal_form(g, pres_), normal_form(h, pres_));
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw ConfigError("partial cotranslation value has the wrong shape");
  }
  return m;
}

std::vector<Word> sample_words(const GroupPresentation& P, int radius) {
  if (P.is_finite() && P.order() <= 64) return P.elements();
  return ball(P, radius);
}

Report verify_partial_law(const PartialCotranslation& W,
                          const std::vector<std::array<Word, 3>>& triples,
                          double tol) {
  const auto& P = W.presentation();
  Report report;
  auto& law = report.add("partial_law");
  for (const auto& [g, h, k] : triples) {
    const Eigen::MatrixXd whole = W.evaluate(g, multiply(k, h, P));
    const Eigen::MatrixXd split =
        W.evaluate(multiply(h, g, P), k) * W.evaluate(g, h);
    const double r = (whole - split).norm() / std::max(1.0, whole.norm());
    law.record(r, r <= tol,
               "W(g,kh) != W(hg,k)W(g,h) at g=" + to_string(g, P) +
                   ", h=" + to_string(h, P) + ", k=" + to_string(k, P));
  }
  return report;
}

Report verify_partial_law(const PartialCotranslation& W, int radius,
                          double tol) {
  return verify_partial_law(W, default_triples(W.presentation(), radius), tol);
}

void ensure_verified(const PartialCotranslation& W) {
  if (*W.verified_) return;
  Report r = verify_partial_law(W, 2, 1e-8);
  if (!r.all_passed()) {
    std::string witness = "partial law check failed";
    for (const auto& c : r.checks) {
      if (!c.passed && !c.witnesses.empty()) {
        witness += ": " + c.witnesses.front();
        break;
      }
    }
    throw InconsistencyError(witness);
  }
  *W.verified_ = true;
}

MatrixProjector units_projector(const PartialCotranslation& W) {
  ensure_verified(W);
  PartialCotranslation inner = W;
  return MatrixProjector(W.presentation(), W.dim(), [inner](const Word& g) {
    return inner.evaluate(g, unit_word());
  });
}

int rank_of(const PartialCotranslation& W,
            const std::vector<std::pair<Word, Word>>& samples) {
  ensure_verified(W);
  if (samples.empty()) throw ConfigError("rank needs at least one sample");
  const auto& P = W.presentation();
  int rank = -1;
  std::unordered_map<Word, Eigen::MatrixXd, WordHash> kernel_by_first;
  for (const auto& [g, h] : samples) {
    const ImKer bases = image_kernel_bases(W.evaluate(g, h));
    const int r = static_cast<int>(bases.im.cols());
    if (rank < 0) rank = r;
    if (r != rank) {
      throw InconsistencyError(
          "rank varies across samples: " + std::to_string(rank) + " vs " +
          std::to_string(r) + " at " + at_pair(g, h, P));
    }
    const Word key = normal_form(g, P);
    auto it = kernel_by_first.find(key);
    if (it == kernel_by_first.end()) {
      kernel_by_first.emplace(key, bases.ker);
    } else if (kernel_angle(it->second, bases.ker) > 1e-7) {
      throw InconsistencyError("ker W(h,g) depends on the second argument at " +
                               at_pair(g, h, P));
    }
  }
  return rank;
}

int rank_of(const PartialCotranslation& W, int radius) {
  const auto words = sample_words(W.presentation(), radius);
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& g : words) {
    for (const auto& h : words) pairs.emplace_back(g, h);
  }
  return rank_of(W, pairs);
}

Report verify_invariant_projector(const MatrixProjector& P,
                                  const PartialCotranslation& V,
                                  const std::vector<std::pair<Word, Word>>& samples,
                                  double tol) {
  const auto& pres = V.presentation();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(V.dim(), V.dim());
  Report report;
  auto& inv = report.add("projector_invariance");
  auto& comp = report.add("complement_invariance");
  for (const auto& [g, h] : samples) {
    const Word hg = multiply(h, g, pres);
    const Eigen::MatrixXd v = V.evaluate(g, h);
    const Eigen::MatrixXd pg = P.at(g);
    const Eigen::MatrixXd phg = P.at(hg);
    const double scale = std::max(1.0, v.norm());
    const double r1 = (phg * v - v * pg).norm() / scale;
    inv.record(r1, r1 <= tol,
               "P(hg)V(g,h) != V(g,h)P(g) at " + at_pair(g, h, pres));
    const double r2 = ((id - phg) * v - v * (id - pg)).norm() / scale;
    comp.record(r2, r2 <= tol,
                "Id-P is not invariant at " + at_pair(g, h, pres));
  }
  return report;
}

Report verify_projector_orthogonality(const MatrixProjector& P,
                                      const MatrixProjector& Q,
                                      const std::vector<Word>& samples,
                                      double tol) {
  Report report;
  auto& ortho = report.add("projector_orthogonality");
  for (const auto& g : samples) {
    const Eigen::MatrixXd p = P.at(g);
    const Eigen::MatrixXd q = Q.at(g);
    const double r = std::max((p * q).norm(), (q * p).norm());
    ortho.record(r, r <= tol,
                 "P(g)Q(g) or Q(g)P(g) != 0 at g=" +
                     to_string(g, P.presentation()));
  }
  return report;
}

PartialCotranslation restrict_partial(const PartialCotranslation& V,
                                      const MatrixProjector& P,
                                      double tol) {
  ensure_verified(V);
  if (P.dim() != V.dim()) throw ConfigError("dimension mismatch");
  const auto words = sample_words(V.presentation());
  std::vector<std::pair<Word, Word>> pairs;
  for (const auto& g : words) {
    for (const auto& h : words) pairs.emplace_back(g, h);
  }
  Report inv = verify_invariant_projector(P, V, pairs, tol);
  for (const auto& c : inv.checks) {
    if (c.name == "projector_invariance" && !c.passed) {
      throw RejectedConstructionError(
          "restriction needs an invariant projector; " +
          (c.witnesses.empty() ? std::string("invariance failed")
                               : c.witnesses.front()));
    }
  }
  PartialCotranslation inner = V;
  MatrixProjector proj = P;
  return PartialCotranslation(
      V.presentation(), V.dim(), PartialForm::Product,
      [inner, proj](const Word& g, const Word& h) {
        return (inner.evaluate(g, h) * proj.at(g)).eval();
      },
      true);
}

PartialCotranslation restrict_partial(const MatrixCotranslation& V,
                                      const MatrixProjector& P, double tol) {
  return restrict_partial(PartialCotranslation::from_cotranslation(V), P, tol);
}

PartialCotranslation orthogonal_sum(const PartialCotranslation& W,
                                    const PartialCotranslation& V,
                                    double tol) {
  ensure_verified(W);
  ensure_verified(V);
  if (!(W.presentation() == V.presentation()) || W.dim() != V.dim()) {
    throw ConfigError("summands live on different groups or dimensions");
  }
  const auto& pres = W.presentation();
  for (const auto& [g, h, k] : default_triples(pres, 2)) {
    const Word hg = multiply(h, g, pres);
    const double r1 = (W.evaluate(hg, k) * V.evaluate(g, h)).norm();
    const double r2 = (V.evaluate(hg, k) * W.evaluate(g, h)).norm();
    if (std::max(r1, r2) > tol) {
      throw RejectedConstructionError(
          "summands are not mutually orthogonal at g=" + to_string(g, pres) +
          ", h=" + to_string(h, pres) + ", k=" + to_string(k, pres) +
          ", residual " + std::to_string(std::max(r1, r2)));
    }
  }
  PartialCotranslation a = W;
  PartialCotranslation b = V;
  return PartialCotranslation(
      pres, W.dim(), PartialForm::Sum,
      [a, b](const Word& g, const Word& h) {
        return (a.evaluate(g, h) + b.evaluate(g, h)).eval();
      },
      true);
}

PartialCotranslation conjugate(const PartialCotranslation& W,
                               const MatrixProjector::Rule& T) {
  ensure_verified(W);
  const auto& pres = W.presentation();
  const int dim = W.dim();
  auto cache = std::make_shared<
      std::unordered_map<Word, std::pair<Eigen::MatrixXd, Eigen::MatrixXd>,
                         WordHash>>();
  GroupPresentation pres_copy = pres;
  auto lookup = [T, cache, dim, pres_copy](const Word& g) {
    const Word key = normal_form(g, pres_copy);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    Eigen::MatrixXd t = T(key);
    if (t.rows() != dim || t.cols() != dim) {
      throw ConfigError("conjugation value has the wrong shape");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
      throw SingularMatrixError("conjugation is near-singular at g=" +
                                to_string(key, pres_copy));
    }
    auto value = std::make_pair(t, t.inverse().eval());
    cache->emplace(key, value);
    return value;
  };
  PartialCotranslation inner = W;
  return PartialCotranslation(
      pres, dim, PartialForm::Conjugated,
      [inner, lookup, pres_copy](const Word& g, const Word& h) {
        const Word hg = multiply(h, g, pres_copy);
        return (lookup(hg).second * inner.evaluate(g, h) * lookup(g).first)
            .eval();
      },
      *W.verified_);
}

DiagonalizerResult bounded_diagonalizer(const MatrixProjector& P,
                                        const std::vector<Word>& samples) {
  if (samples.empty()) throw ConfigError("diagonalizer needs sample words");
  const int d = P.dim();
  DiagonalizerResult result;

  // First pass: rank consistency and the bound constant M.
  int rank = -1;
  double M = 1.0;
  for (const auto& g : samples) {
    const Eigen::MatrixXd p = P.at(g);
    const ImKer bases = image_kernel_bases(p);
    const int r = static_cast<int>(bases.im.cols());
    if (rank < 0) rank = r;
    if (r != rank) {
      throw InconsistencyError("projector rank varies across samples");
    }
    M = std::max(M, operator_norm(p));
    M = std::max(M,
                 operator_norm(Eigen::MatrixXd::Identity(d, d) - p));
  }
  result.rank = rank;
  result.M = M;

  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(d, d);
  block.topLeftCorner(rank, rank) = Eigen::MatrixXd::Identity(rank, rank);

  auto cache =
      std::make_shared<std::unordered_map<Word, Eigen::MatrixXd, WordHash>>();
  MatrixProjector proj = P;
  const int expected_rank = rank;
  auto T = [proj, cache, expected_rank](const Word& g) {
    const Word key = normal_form(g, proj.presentation());
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    const Eigen::MatrixXd p = proj.at(key);
    const ImKer bases = image_kernel_bases(p);
    if (static_cast<int>(bases.im.cols()) != expected_rank) {
      throw InconsistencyError("projector rank changed away from the samples");
    }
    Eigen::MatrixXd t(p.rows(), p.rows());
    t << bases.im, bases.ker;
    cache->emplace(key, t);
    return t;
  };
  result.T = T;

  auto& block_form = result.report.add("diagonalizer_block_form");
  auto& t_bound = result.report.add("diagonalizer_T_bound");
  auto& tinv_bound = result.report.add("diagonalizer_Tinv_bound");
  for (const auto& g : samples) {
    const Eigen::MatrixXd t = T(g);
    const Eigen::MatrixXd tinv = t.inverse();
    const std::string at = "g=" + to_string(g, P.presentation());
    const double res = (tinv * P.at(g) * t - block).norm();
    block_form.record(res, res <= 1e-8, "block form not achieved at " + at);
    const double nt = operator_norm(t);
    t_bound.record(nt, nt <= static_cast<double>(d) + 1e-9,
                   "|T(g)| exceeds d at " + at);
    const double ntinv = operator_norm(tinv);
    tinv_bound.record(ntinv, ntinv <= static_cast<double>(d) * M + 1e-6,
                      "|T(g)^-1| exceeds d*M at " + at);
  }
  return result;
}

Completion complete(const PartialCotranslation& W, int radius, double tol) {
  ensure_verified(W);
  const auto& pres = W.presentation();
  const int d = W.dim();
  const auto words = sample_words(pres, radius);

  const int n = rank_of(W, radius);
  MatrixProjector P = units_projector(W);
  DiagonalizerResult diag = bounded_diagonalizer(P, words);

  // Complement carried back from the constant block: V = T bhat T^-1 with
  // bhat = diag(0, Id_{d-n}).
  PartialCotranslation hat =
      PartialCotranslation::explicit_rule(pres, d, [d, n](const Word&, const Word&) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d, d);
        b.bottomRightCorner(d - n, d - n) =
            Eigen::MatrixXd::Identity(d - n, d - n);
        return b;
      });
  auto Tfn = diag.T;
  MatrixProjector::Rule t_inverse = [Tfn](const Word& g) {
    return Tfn(g).inverse().eval();
  };
  PartialCotranslation complement = conjugate(hat, t_inverse);

  PartialCotranslation total = orthogonal_sum(W, complement, tol);

  Completion out{complement, total, Report{}};
  out.report.append(diag.report);
  auto& rank_check = out.report.add("completion_rank");
  const int total_rank = rank_of(total, radius);
  rank_check.record(static_cast<double>(total_rank), total_rank == d,
                    "completed rank " + std::to_string(total_rank) +
                        " != dimension " + std::to_string(d));
  auto& invertible = out.report.add("total_invertible");
  for (const auto& g : words) {
    for (const auto& h : words) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(total.evaluate(g, h));
      const auto& sv = svd.singularValues();
      const double cond =
          sv(sv.size() - 1) <= 0.0 ? 1e308 : sv(0) / sv(sv.size() - 1);
      invertible.record(cond, cond < 1e12,
                        "total value is near-singular at " +
                            at_pair(g, h, pres));
    }
  }
  return out;
}

MatrixCotranslation from_linear_cotranslation(const Cotranslation& Z) {
  if (Z.space().kind != SpaceKind::Euclidean) {
    throw UnsupportedOperationError("needs a Euclidean carrier space");
  }
  Cotranslation inner = Z;
  return MatrixCotranslation(
      Z.presentation(), Z.space().dim,
      [inner](const Word& g, const Word& h) {
        auto lin = inner.evaluate(g, h).as_linear();
        if (!lin) {
          throw UnsupportedOperationError(
              "cotranslation value is not linear");
        }
        return *lin;
      });
}

namespace {

// Invertible with condition number O(1): identity plus a small perturbation.
Eigen::MatrixXd seeded_frame(int d, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  const double spread = 0.5 / static_cast<double>(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) += rng.uniform(-spread, spread);
  }
  return m;
}

Eigen::MatrixXd seeded_block_diagonal(const std::vector<int>& blocks,
                                      std::uint64_t seed) {
  int d = 0;
  for (int b : blocks) d += b;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  int at = 0;
  std::uint64_t s = seed;
  for (int b : blocks) {
    m.block(at, at, b, b) = seeded_frame(b, s);
    at += b;
    s = s * 6364136223846793005ull + 1442695040888963407ull;
  }
  return m;
}

}  // namespace

BlockCocycleInstance random_block_cocycle(const GroupPresentation& P,
                                          const std::vector<int>& blocks,
                                          std::uint64_t seed) {
  if (blocks.empty()) throw ConfigError("need at least one block");
  int d = 0;
  for (int b : blocks) {
    if (b < 1) throw ConfigError("block sizes must be >= 1");
    d += b;
  }

  // The straight block cocycle.
  MatrixCotranslation hat = [&]() -> MatrixCotranslation {
    switch (P.family()) {
      case Family::Integers: {
        MatrixSequence seq(d,
                           [blocks, seed](long n) {
                             return seeded_block_diagonal(
                                 blocks, seed ^ (0x9e37ull * static_cast<std::uint64_t>(
                                                                 n + 100000)));
                           });
        return MatrixCotranslation::from_sequence(seq);
      }
      case Family::Cyclic: {
        const int n = P.parameter();
        std::vector<Eigen::MatrixXd> values;
        Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(d, d);
        for (int k = 0; k + 1 < n; ++k) {
          values.push_back(seeded_block_diagonal(
              blocks, seed ^ (0x51ull * static_cast<std::uint64_t>(k + 3))));
          prod = values.back() * prod;
        }
        values.push_back(prod.inverse());  // closes the cyclic relator
        GroupPresentation pres = P;
        return MatrixCotranslation(
            P, d, [values, pres, n](const Word& g, const Word& h) {
              long base = 0;
              for (const auto& l : g.letters) base += l.sign;
              long m = 0;
              for (const auto& l : h.letters) m += l.sign;
              base %= n;
              if (base < 0) base += n;
              m %= n;
              if (m < 0) m += n;
              Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(
                  values[0].rows(), values[0].rows());
              for (long j = 0; j < m; ++j) {
                acc = values[static_cast<std::size_t>((base + j) % n)] * acc;
              }
              return acc;
            });
      }
      default:
        throw UnsupportedOperationError(
            "block cocycles are generated over the integers or cyclic groups");
    }
  }();

  // Per-element conjugation frame, memoized.
  auto frames =
      std::make_shared<std::unordered_map<Word, Eigen::MatrixXd, WordHash>>();
  GroupPresentation pres = P;
  auto frame_at = [frames, pres, d, seed](const Word& g) {
    const Word key = normal_form(g, pres);
    auto it = frames->find(key);
    if (it != frames->end()) return it->second;
    Eigen::MatrixXd t = seeded_frame(d, seed ^ WordHash{}(key));
    frames->emplace(key, t);
    return t;
  };

  Eigen::MatrixXd p0 = Eigen::MatrixXd::Zero(d, d);
  p0.topLeftCorner(blocks[0], blocks[0]) =
      Eigen::MatrixXd::Identity(blocks[0], blocks[0]);

  MatrixCotranslation V(
      P, d, [hat, frame_at, pres](const Word& g, const Word& h) {
        const Word hg = multiply(h, g, pres);
        return (frame_at(hg) * hat.evaluate(g, h) *
                frame_at(g).inverse())
            .eval();
      });
  MatrixProjector proj(P, d, [frame_at, p0](const Word& g) {
    const Eigen::MatrixXd t = frame_at(g);
    return (t * p0 * t.inverse()).eval();
  });
  return BlockCocycleInstance{std::move(V), std::move(proj), blocks[0]};
}

Factorization factorize(const PartialCotranslation& W, int radius,
                        double tol) {
  Completion c = complete(W, radius, tol);
  PartialCotranslation total = c.total;
  MatrixCotranslation Z(W.presentation(), W.dim(),
                        [total](const Word& g, const Word& h) {
                          return total.evaluate(g, h);
                        });
  MatrixProjector P = units_projector(W);

  Factorization out{Z, P, Report{}};
  out.report.append(c.report);
  auto& residual = out.report.add("factorization_residual");
  const auto& pres = W.presentation();
  const auto words = sample_words(pres, radius);
  for (const auto& g : words) {
    for (const auto& h : words) {
      const Eigen::MatrixXd w = W.evaluate(g, h);
      const double r =
          (w - Z.evaluate(g, h) * P.at(g)).norm() / std::max(1.0, w.norm());
      residual.record(r, r <= tol,
                      "W != Z P at " + at_pair(g, h, pres));
    }
  }
  return out;
}

}  // namespace cotrans
