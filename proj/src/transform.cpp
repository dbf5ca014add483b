#include "cotrans/transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <variant>

#include "cotrans/error.hpp"

namespace cotrans {

namespace {

struct IdentityNode {};

struct AffineNode {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  Eigen::MatrixXd Ainv;  // kept so double inversion restores A exactly
};

struct RotationNode {
  int i = 0, j = 1;
  double angle = 0.0;
};

struct CopyShiftNode {
  int offset = 0;
};

struct LabelGatedNode {
  LabelGate gate;
  TransformNodePtr inner;
};

struct SymbolPermNode {
  std::vector<int> perm;
  std::vector<int> inv;
  int position = 0;  // -1: every position
};

struct TreePortraitNode {
  std::vector<int> anchor;
  TransformNodePtr inner;
};

struct PositionSwapNode {
  int n = 0;
};

struct ComposeNode {
  std::vector<TransformNodePtr> parts;  // applied in order: parts[0] first
};

}  // namespace

struct TransformNode
    : std::variant<IdentityNode, AffineNode, RotationNode, CopyShiftNode,
                   LabelGatedNode, SymbolPermNode, TreePortraitNode,
                   PositionSwapNode, ComposeNode> {
  using variant::variant;
};

namespace {

TransformNodePtr make_node(TransformNode n) {
  return std::make_shared<const TransformNode>(std::move(n));
}

bool vector_space(const Space& s) {
  return s.kind == SpaceKind::Euclidean || s.kind == SpaceKind::LabeledEuclidean;
}

bool contains_copy_shift(const TransformNodePtr& node) {
  if (std::holds_alternative<CopyShiftNode>(*node)) return true;
  if (const auto* c = std::get_if<ComposeNode>(node.get())) {
    for (const auto& p : c->parts) {
      if (contains_copy_shift(p)) return true;
    }
  }
  if (const auto* g = std::get_if<LabelGatedNode>(node.get())) {
    return contains_copy_shift(g->inner);
  }
  return false;
}

Point apply_node(const TransformNodePtr& node, Point p, const Space& space);

struct ApplyVisitor {
  Point p;
  const Space& space;

  Point operator()(const IdentityNode&) { return std::move(p); }

  Point operator()(const AffineNode& n) {
    p.vec = n.A * p.vec + n.b;
    return std::move(p);
  }

  Point operator()(const RotationNode& n) {
    const double c = std::cos(n.angle);
    const double s = std::sin(n.angle);
    const double xi = p.vec[n.i];
    const double xj = p.vec[n.j];
    p.vec[n.i] = c * xi - s * xj;
    p.vec[n.j] = s * xi + c * xj;
    return std::move(p);
  }

  Point operator()(const CopyShiftNode& n) {
    p.label += n.offset;
    if (p.label < -space.label_window || p.label > space.label_window) {
      throw RangeError("copy shift left the configured label window");
    }
    return std::move(p);
  }

  Point operator()(const LabelGatedNode& n) {
    if (n.gate.test(p.label)) return apply_node(n.inner, std::move(p), space);
    return std::move(p);
  }

  Point operator()(const SymbolPermNode& n) {
    if (n.position < 0) {
      for (auto& s : p.sym) s = n.perm[static_cast<std::size_t>(s)];
    } else if (n.position < static_cast<int>(p.sym.size())) {
      auto& s = p.sym[static_cast<std::size_t>(n.position)];
      s = n.perm[static_cast<std::size_t>(s)];
    }
    return std::move(p);
  }

  Point operator()(const TreePortraitNode& n) {
    if (p.sym.size() < n.anchor.size()) return std::move(p);
    if (!std::equal(n.anchor.begin(), n.anchor.end(), p.sym.begin())) {
      return std::move(p);
    }
    Point tail;
    tail.sym.assign(p.sym.begin() + static_cast<long>(n.anchor.size()),
                    p.sym.end());
    tail = apply_node(n.inner, std::move(tail), space);
    Point out;
    out.sym = n.anchor;
    out.sym.insert(out.sym.end(), tail.sym.begin(), tail.sym.end());
    return out;
  }

  Point operator()(const PositionSwapNode& n) {
    if (n.n > 0) std::swap(p.sym[0], p.sym[static_cast<std::size_t>(n.n)]);
    return std::move(p);
  }

  Point operator()(const ComposeNode& n) {
    Point q = std::move(p);
    for (const auto& part : n.parts) q = apply_node(part, std::move(q), space);
    return q;
  }
};

Point apply_node(const TransformNodePtr& node, Point p, const Space& space) {
  return std::visit(ApplyVisitor{std::move(p), space}, *node);
}

TransformNodePtr invert_node(const TransformNodePtr& node) {
  if (std::holds_alternative<IdentityNode>(*node) ||
      std::holds_alternative<PositionSwapNode>(*node)) {
    return node;
  }
  if (const auto* a = std::get_if<AffineNode>(node.get())) {
    return make_node(AffineNode{a->Ainv, -(a->Ainv * a->b), a->A});
  }
  if (const auto* r = std::get_if<RotationNode>(node.get())) {
    return make_node(RotationNode{r->i, r->j, -r->angle});
  }
  if (const auto* c = std::get_if<CopyShiftNode>(node.get())) {
    return make_node(CopyShiftNode{-c->offset});
  }
  if (const auto* g = std::get_if<LabelGatedNode>(node.get())) {
    return make_node(LabelGatedNode{g->gate, invert_node(g->inner)});
  }
  if (const auto* s = std::get_if<SymbolPermNode>(node.get())) {
    return make_node(SymbolPermNode{s->inv, s->perm, s->position});
  }
  if (const auto* t = std::get_if<TreePortraitNode>(node.get())) {
    return make_node(TreePortraitNode{t->anchor, invert_node(t->inner)});
  }
  const auto& c = std::get<ComposeNode>(*node);
  ComposeNode out;
  out.parts.reserve(c.parts.size());
  for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) {
    out.parts.push_back(invert_node(*it));
  }
  return make_node(std::move(out));
}

void flatten_into(const TransformNodePtr& node,
                  std::vector<TransformNodePtr>& out) {
  if (std::holds_alternative<IdentityNode>(*node)) return;
  if (const auto* c = std::get_if<ComposeNode>(node.get())) {
    for (const auto& p : c->parts) flatten_into(p, out);
    return;
  }
  out.push_back(node);
}

// Fuses adjacent nodes in application order where the result stays exact.
std::vector<TransformNodePtr> fuse(std::vector<TransformNodePtr> parts) {
  std::vector<TransformNodePtr> out;
  auto try_fuse = [&](const TransformNodePtr& next) -> bool {
    if (out.empty()) return false;
    const auto& prev = out.back();
    if (const auto* a1 = std::get_if<AffineNode>(prev.get())) {
      if (const auto* a2 = std::get_if<AffineNode>(next.get())) {
        // prev applied first, then next: x -> A2 (A1 x + b1) + b2.
        out.back() = make_node(AffineNode{a2->A * a1->A,
                                          a2->A * a1->b + a2->b,
                                          a1->Ainv * a2->Ainv});
        return true;
      }
    }
    if (const auto* r1 = std::get_if<RotationNode>(prev.get())) {
      if (const auto* r2 = std::get_if<RotationNode>(next.get())) {
        if (r1->i == r2->i && r1->j == r2->j) {
          out.back() = make_node(RotationNode{r1->i, r1->j,
                                              r1->angle + r2->angle});
          return true;
        }
      }
    }
    if (const auto* c1 = std::get_if<CopyShiftNode>(prev.get())) {
      if (const auto* c2 = std::get_if<CopyShiftNode>(next.get())) {
        const int off = c1->offset + c2->offset;
        if (off == 0) {
          out.pop_back();
        } else {
          out.back() = make_node(CopyShiftNode{off});
        }
        return true;
      }
    }
    if (const auto* s1 = std::get_if<PositionSwapNode>(prev.get())) {
      if (const auto* s2 = std::get_if<PositionSwapNode>(next.get())) {
        if (s1->n == s2->n) {
          out.pop_back();
          return true;
        }
      }
    }
    return false;
  };
  for (const auto& p : parts) {
    if (!try_fuse(p)) out.push_back(p);
  }
  return out;
}

TransformNodePtr compose_nodes(const TransformNodePtr& first_applied,
                               const TransformNodePtr& second_applied) {
  std::vector<TransformNodePtr> parts;
  flatten_into(first_applied, parts);
  flatten_into(second_applied, parts);
  parts = fuse(std::move(parts));
  if (parts.empty()) return make_node(IdentityNode{});
  if (parts.size() == 1) return parts[0];
  return make_node(ComposeNode{std::move(parts)});
}

Eigen::MatrixXd rotation_matrix(const RotationNode& r, int dim) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
  const double c = std::cos(r.angle);
  const double s = std::sin(r.angle);
  m(r.i, r.i) = c;
  m(r.i, r.j) = -s;
  m(r.j, r.i) = s;
  m(r.j, r.j) = c;
  return m;
}

bool affine_fold(const TransformNodePtr& node, int dim, Eigen::MatrixXd& M,
                 Eigen::VectorXd& c) {
  if (std::holds_alternative<IdentityNode>(*node)) return true;
  if (const auto* a = std::get_if<AffineNode>(node.get())) {
    M = a->A * M;
    c = a->A * c + a->b;
    return true;
  }
  if (const auto* r = std::get_if<RotationNode>(node.get())) {
    const Eigen::MatrixXd R = rotation_matrix(*r, dim);
    M = R * M;
    c = R * c;
    return true;
  }
  if (const auto* comp = std::get_if<ComposeNode>(node.get())) {
    for (const auto& p : comp->parts) {
      if (!affine_fold(p, dim, M, c)) return false;
    }
    return true;
  }
  return false;
}

std::string describe_node(const TransformNodePtr& node) {
  std::ostringstream out;
  if (std::holds_alternative<IdentityNode>(*node)) return "id";
  if (const auto* a = std::get_if<AffineNode>(node.get())) {
    out << "affine(A=[";
    for (int r = 0; r < a->A.rows(); ++r) {
      if (r) out << "; ";
      for (int cidx = 0; cidx < a->A.cols(); ++cidx) {
        if (cidx) out << ",";
        out << a->A(r, cidx);
      }
    }
    out << "], b=[";
    for (int r = 0; r < a->b.size(); ++r) {
      if (r) out << ",";
      out << a->b[r];
    }
    out << "])";
    return out.str();
  }
  if (const auto* r = std::get_if<RotationNode>(node.get())) {
    out << "rot(" << r->i << "," << r->j << "; " << r->angle << ")";
    return out.str();
  }
  if (const auto* c = std::get_if<CopyShiftNode>(node.get())) {
    out << "shift(k" << (c->offset >= 0 ? "+" : "") << c->offset << ")";
    return out.str();
  }
  if (const auto* g = std::get_if<LabelGatedNode>(node.get())) {
    out << "gate(";
    switch (g->gate.kind) {
      case LabelGate::Kind::Even:
        out << "even";
        break;
      case LabelGate::Kind::Odd:
        out << "odd";
        break;
      case LabelGate::Kind::Equals:
        out << "k=" << g->gate.value;
        break;
    }
    out << "; " << describe_node(g->inner) << ")";
    return out.str();
  }
  if (const auto* s = std::get_if<SymbolPermNode>(node.get())) {
    out << "perm(";
    for (std::size_t i = 0; i < s->perm.size(); ++i) {
      if (i) out << ",";
      out << s->perm[i];
    }
    out << (s->position < 0 ? "; all" : "; at " + std::to_string(s->position))
        << ")";
    return out.str();
  }
  if (const auto* t = std::get_if<TreePortraitNode>(node.get())) {
    out << "portrait(";
    for (int s : t->anchor) out << s;
    out << "; " << describe_node(t->inner) << ")";
    return out.str();
  }
  if (const auto* s = std::get_if<PositionSwapNode>(node.get())) {
    out << "swap(0," << s->n << ")";
    return out.str();
  }
  const auto& c = std::get<ComposeNode>(*node);
  // Rendered outermost-first.
  for (auto it = c.parts.rbegin(); it != c.parts.rend(); ++it) {
    if (it != c.parts.rbegin()) out << " . ";
    out << describe_node(*it);
  }
  return out.str();
}

}  // namespace

Transform Transform::identity(const Space& space) {
  return Transform(space, make_node(IdentityNode{}));
}

Transform Transform::affine(const Space& space, Eigen::MatrixXd A,
                            Eigen::VectorXd b) {
  if (!vector_space(space)) {
    throw SpaceMismatchError("affine transforms need a Euclidean vector part");
  }
  if (A.rows() != space.dim || A.cols() != space.dim ||
      b.size() != space.dim) {
    throw ConfigError("affine shape does not match space dimension");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) {
    throw ConfigError("affine matrix is not invertible");
  }
  Eigen::MatrixXd Ainv = lu.inverse();
  return Transform(space,
                   make_node(AffineNode{std::move(A), std::move(b),
                                        std::move(Ainv)}));
}

Transform Transform::rotation(const Space& space, int i, int j, double angle) {
  if (!vector_space(space)) {
    throw SpaceMismatchError("rotations need a Euclidean vector part");
  }
  if (i < 0 || j <= i || j >= space.dim) {
    throw ConfigError("rotation plane axes must satisfy 0 <= i < j < dim");
  }
  return Transform(space, make_node(RotationNode{i, j, angle}));
}

Transform Transform::copy_shift(const Space& space, int offset) {
  if (space.kind != SpaceKind::LabeledEuclidean) {
    throw SpaceMismatchError("copy shift needs labeled copies");
  }
  if (offset == 0) return identity(space);
  return Transform(space, make_node(CopyShiftNode{offset}));
}

Transform Transform::label_gated(const Space& space, LabelGate gate,
                                 Transform inner) {
  if (space.kind != SpaceKind::LabeledEuclidean) {
    throw SpaceMismatchError("label gates need labeled copies");
  }
  if (!(inner.space() == space)) {
    throw SpaceMismatchError("gated inner transform lives on another space");
  }
  if (contains_copy_shift(inner.node_)) {
    throw ConfigError("gated inner transform must preserve labels");
  }
  return Transform(space, make_node(LabelGatedNode{gate, inner.node_}));
}

Transform Transform::symbol_perm(const Space& space, std::vector<int> perm,
                                 int position) {
  if (!space.discrete()) {
    throw SpaceMismatchError("symbol permutations need a discrete space");
  }
  if (static_cast<int>(perm.size()) != space.dim) {
    throw ConfigError("permutation size must equal the alphabet size");
  }
  std::vector<int> inv(perm.size(), -1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] < 0 || perm[i] >= space.dim || inv[perm[i]] != -1) {
      throw ConfigError("not a permutation of the alphabet");
    }
    inv[perm[i]] = static_cast<int>(i);
  }
  if (position < -1 ||
      (space.kind == SpaceKind::Sequence && position >= space.extent)) {
    throw ConfigError("permutation position outside the sequence");
  }
  return Transform(space, make_node(SymbolPermNode{std::move(perm),
                                                   std::move(inv), position}));
}

Transform Transform::tree_portrait(const Space& space, std::vector<int> anchor,
                                   Transform inner) {
  if (space.kind != SpaceKind::Tree) {
    throw SpaceMismatchError("portraits need a tree space");
  }
  if (!(inner.space() == space)) {
    throw SpaceMismatchError("portrait inner transform lives on another space");
  }
  for (int s : anchor) {
    if (s < 0 || s >= space.dim) throw ConfigError("anchor symbol outside alphabet");
  }
  return Transform(space,
                   make_node(TreePortraitNode{std::move(anchor), inner.node_}));
}

Transform Transform::position_swap(const Space& space, int n) {
  if (space.kind != SpaceKind::Sequence) {
    throw SpaceMismatchError("position swaps need a sequence space");
  }
  if (n < 0 || n >= space.extent) {
    throw RangeError("swap position outside the sequence length");
  }
  if (n == 0) return identity(space);
  return Transform(space, make_node(PositionSwapNode{n}));
}

std::optional<std::pair<Eigen::MatrixXd, Eigen::VectorXd>>
Transform::as_affine() const {
  if (space_.kind != SpaceKind::Euclidean) return std::nullopt;
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(space_.dim, space_.dim);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(space_.dim);
  if (!affine_fold(node_, space_.dim, M, c)) return std::nullopt;
  return std::make_pair(std::move(M), std::move(c));
}

std::optional<Eigen::MatrixXd> Transform::as_linear(double tol) const {
  auto aff = as_affine();
  if (!aff || aff->second.norm() > tol) return std::nullopt;
  return aff->first;
}

bool Transform::is_identity_node() const {
  return std::holds_alternative<IdentityNode>(*node_);
}

std::string Transform::describe() const { return describe_node(node_); }

Point apply(const Transform& t, const Point& p) {
  check_point(p, t.space_);
  return apply_node(t.node_, p, t.space_);
}

Transform compose(const Transform& t1, const Transform& t2) {
  if (!(t1.space() == t2.space())) {
    throw SpaceMismatchError("composing transforms of different spaces");
  }
  return Transform(t1.space(), compose_nodes(t2.node_, t1.node_));
}

Transform compose(const std::vector<Transform>& parts) {
  if (parts.empty()) throw ConfigError("empty composition");
  Transform out = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it) {
    out = compose(*it, out);
  }
  return out;
}

Transform invert(const Transform& t) {
  return Transform(t.space_, invert_node(t.node_));
}

double max_image_distance(const Transform& t1, const Transform& t2,
                          const std::vector<Point>& testpoints) {
  if (testpoints.empty()) {
    throw ConfigError("extensional comparison needs at least one test point");
  }
  if (!(t1.space() == t2.space())) {
    throw SpaceMismatchError("comparing transforms of different spaces");
  }
  double worst = 0.0;
  for (const auto& p : testpoints) {
    worst = std::max(worst, distance(apply(t1, p), apply(t2, p), t1.space()));
  }
  return worst;
}

bool approx_equal(const Transform& t1, const Transform& t2,
                  const std::vector<Point>& testpoints, double tol) {
  const double d = max_image_distance(t1, t2, testpoints);
  return t1.space().discrete() ? d == 0.0 : d <= tol;
}

}  // namespace cotrans
