#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cotrans/space.hpp"

namespace cotrans {

// Gate on the integer label of a labeled-Euclidean point.
struct LabelGate {
  enum class Kind { Even, Odd, Equals };
  Kind kind = Kind::Even;
  int value = 0;

  static LabelGate even() { return {Kind::Even, 0}; }
  static LabelGate odd() { return {Kind::Odd, 0}; }
  static LabelGate equals(int k) { return {Kind::Equals, k}; }

  bool test(int label) const {
    switch (kind) {
      case Kind::Even:
        return (label % 2) == 0;
      case Kind::Odd:
        return (label % 2) != 0;
      case Kind::Equals:
        return label == value;
    }
    return false;
  }
};

struct TransformNode;
using TransformNodePtr = std::shared_ptr<const TransformNode>;

// An invertible map of a space, kept as a symbolic expression tree and
// evaluated on demand. Every constructor is invertible by construction, so
// inversion is structural.
class Transform {
 public:
  static Transform identity(const Space& space);
  // x -> A x + b on the vector part. A must be invertible.
  static Transform affine(const Space& space, Eigen::MatrixXd A,
                          Eigen::VectorXd b);
  // Counterclockwise rotation in the (i, j) coordinate plane.
  static Transform rotation(const Space& space, int i, int j, double angle);
  // (v, k) -> (v, k + offset) on labeled copies.
  static Transform copy_shift(const Space& space, int offset);
  // Applies inner only on copies whose label passes the gate. inner must
  // preserve labels.
  static Transform label_gated(const Space& space, LabelGate gate,
                               Transform inner);
  // Applies a permutation of the alphabet at one position (or everywhere
  // when position is -1). At position 0 on a tree this is the rooted
  // automorphism fixing the root.
  static Transform symbol_perm(const Space& space, std::vector<int> perm,
                               int position);
  // Tree automorphism supported on the subtree below `anchor`: vertices
  // outside it are fixed, anchor.v maps to anchor.inner(v).
  static Transform tree_portrait(const Space& space, std::vector<int> anchor,
                                 Transform inner);
  // Swaps sequence positions 0 and n (identity when n == 0).
  static Transform position_swap(const Space& space, int n);

  const Space& space() const { return space_; }

  // (A, b) such that the transform is x -> A x + b, when the whole tree is
  // affine on a Euclidean space.
  std::optional<std::pair<Eigen::MatrixXd, Eigen::VectorXd>> as_affine() const;
  // The matrix of a purely linear transform (affine with |b| <= tol).
  std::optional<Eigen::MatrixXd> as_linear(double tol = 1e-12) const;

  bool is_identity_node() const;

  std::string describe() const;

  friend Point apply(const Transform& t, const Point& p);
  // apply(compose(t1, t2), p) = apply(t1, apply(t2, p)).
  friend Transform compose(const Transform& t1, const Transform& t2);
  friend Transform invert(const Transform& t);

 private:
  Transform(Space space, TransformNodePtr node)
      : space_(space), node_(std::move(node)) {}

  Space space_;
  TransformNodePtr node_;
};

Transform compose(const std::vector<Transform>& parts);  // parts[0] applied last

// Extensional approximate equality on the given test points: true iff the
// max image distance is <= tol. Exact comparison on discrete spaces.
bool approx_equal(const Transform& t1, const Transform& t2,
                  const std::vector<Point>& testpoints, double tol);

// Largest image distance over the test points (infinity on a discrete
// mismatch); the residual used by the verification suites.
double max_image_distance(const Transform& t1, const Transform& t2,
                          const std::vector<Point>& testpoints);

}  // namespace cotrans
