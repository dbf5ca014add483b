#include <doctest.h>

#include <cmath>

#include "cotrans/error.hpp"
#include "cotrans/rng.hpp"
#include "cotrans/transform.hpp"

using namespace cotrans;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Eigen::VectorXd v2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

// Seeded random transform per space kind, for the extensional group laws.
Transform random_transform(const Space& space, Rng& rng, int depth = 0) {
  const std::size_t pick = rng.index(depth > 1 ? 4 : 6);
  switch (space.kind) {
    case SpaceKind::Euclidean: {
      if (pick < 2 && space.dim >= 2) {
        return Transform::rotation(space, 0, space.dim - 1,
                                   rng.uniform(-3.0, 3.0));
      }
      if (pick < 4) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(space.dim, space.dim);
        for (int i = 0; i < space.dim; ++i) {
          for (int j = 0; j < space.dim; ++j) {
            a(i, j) += rng.uniform(-0.3, 0.3) / space.dim;
          }
        }
        Eigen::VectorXd b(space.dim);
        for (int i = 0; i < space.dim; ++i) b(i) = rng.uniform(-1.0, 1.0);
        return Transform::affine(space, a, b);
      }
      return compose(random_transform(space, rng, depth + 1),
                     random_transform(space, rng, depth + 1));
    }
    case SpaceKind::LabeledEuclidean: {
      if (pick < 2) return Transform::copy_shift(space, rng.integer(-2, 2));
      if (pick < 4) {
        const LabelGate gate = rng.index(2) ? LabelGate::even()
                                            : LabelGate::odd();
        return Transform::label_gated(
            space, gate,
            Transform::rotation(space, 0, 1, rng.uniform(-3.0, 3.0)));
      }
      return compose(random_transform(space, rng, depth + 1),
                     random_transform(space, rng, depth + 1));
    }
    case SpaceKind::Tree: {
      std::vector<int> anchor;
      const std::size_t len = rng.index(3);
      for (std::size_t i = 0; i < len; ++i) {
        anchor.push_back(static_cast<int>(rng.index(space.dim)));
      }
      std::vector<int> perm(static_cast<std::size_t>(space.dim));
      for (int i = 0; i < space.dim; ++i) {
        perm[static_cast<std::size_t>(i)] = (i + 1) % space.dim;
      }
      Transform inner = Transform::symbol_perm(space, perm, 0);
      if (pick < 3) return Transform::tree_portrait(space, anchor, inner);
      return compose(Transform::tree_portrait(space, anchor, inner),
                     random_transform(space, rng, depth + 1));
    }
    case SpaceKind::Sequence: {
      if (pick < 2) {
        return Transform::position_swap(
            space, static_cast<int>(rng.index(space.extent)));
      }
      if (pick < 4) {
        std::vector<int> perm(static_cast<std::size_t>(space.dim));
        for (int i = 0; i < space.dim; ++i) {
          perm[static_cast<std::size_t>(i)] = (i + 1) % space.dim;
        }
        return Transform::symbol_perm(space, perm,
                                      static_cast<int>(rng.index(space.extent)));
      }
      return compose(random_transform(space, rng, depth + 1),
                     random_transform(space, rng, depth + 1));
    }
  }
  return Transform::identity(space);
}

}  // namespace

TEST_CASE("application basics") {
  const Space plane = Space::euclidean(2);
  const auto quarter = Transform::rotation(plane, 0, 1, kPi / 2);
  const Point image = apply(quarter, euclidean_point(v2(1, 0)));
  CHECK(std::abs(image.vec(0)) < 1e-12);
  CHECK(std::abs(image.vec(1) - 1) < 1e-12);

  const Space copies = Space::labeled_euclidean(2);
  const auto down = Transform::copy_shift(copies, -1);
  const Point moved = apply(down, labeled_point(3, v2(0.5, -1)));
  CHECK(moved.label == 2);
  CHECK(moved.vec == v2(0.5, -1));

  // portrait anchored at 1 swapping the next letter: vertex 10 -> 11
  const Space tree = Space::tree(2, 6);
  const auto portrait = Transform::tree_portrait(
      tree, {1}, Transform::symbol_perm(tree, {1, 0}, 0));
  CHECK(apply(portrait, symbol_point({1, 0})).sym == std::vector<int>{1, 1});
  CHECK(apply(portrait, symbol_point({0, 0})).sym == std::vector<int>{0, 0});
  CHECK(apply(portrait, symbol_point({})).sym == std::vector<int>{});

  CHECK_THROWS_AS(apply(quarter, labeled_point(0, v2(0, 0))),
                  SpaceMismatchError);
}

TEST_CASE("composition and inversion laws, extensionally per space") {
  const std::vector<Space> spaces = {
      Space::euclidean(2), Space::euclidean(3), Space::labeled_euclidean(2),
      Space::tree(2, 5), Space::sequence(3, 8)};
  Rng rng(99);
  for (const auto& space : spaces) {
    const auto pts = default_testpoints(space, 48, 7);
    const double tol = 1e-9;
    for (int trial = 0; trial < 25; ++trial) {
      const auto t1 = random_transform(space, rng);
      const auto t2 = random_transform(space, rng);
      const auto t3 = random_transform(space, rng);

      // compose agrees with pointwise application
      for (const auto& p : pts) {
        const Point lhs = apply(compose(t1, t2), p);
        const Point rhs = apply(t1, apply(t2, p));
        CHECK(distance(lhs, rhs, space) <= tol);
      }
      // associativity, identity, inverse
      CHECK(approx_equal(compose(compose(t1, t2), t3),
                         compose(t1, compose(t2, t3)), pts, tol));
      CHECK(approx_equal(compose(Transform::identity(space), t1), t1, pts, tol));
      CHECK(approx_equal(compose(t1, Transform::identity(space)), t1, pts, tol));
      CHECK(approx_equal(compose(t1, invert(t1)), Transform::identity(space),
                         pts, tol));
      CHECK(approx_equal(compose(invert(t1), t1), Transform::identity(space),
                         pts, tol));
      CHECK(approx_equal(invert(invert(t1)), t1, pts, tol));
    }
  }
}

TEST_CASE("rotations compose additively and close at full turns") {
  const Space plane = Space::euclidean(2);
  const auto pts = default_testpoints(plane, 20, 3);
  CHECK(approx_equal(compose(Transform::rotation(plane, 0, 1, 0.7),
                             Transform::rotation(plane, 0, 1, 1.1)),
                     Transform::rotation(plane, 0, 1, 1.8), pts, 1e-10));
  CHECK(approx_equal(Transform::rotation(plane, 0, 1, 2 * kPi),
                     Transform::identity(plane), pts, 1e-9));
  CHECK_FALSE(approx_equal(
      Transform::affine(plane, Eigen::MatrixXd::Identity(2, 2), v2(1, 0)),
      Transform::identity(plane), pts, 1e-9));
}

TEST_CASE("affine handling is exact") {
  const Space line = Space::euclidean(1);
  auto aff = [&](double a, double b) {
    Eigen::MatrixXd m(1, 1);
    m << a;
    Eigen::VectorXd v(1);
    v << b;
    return Transform::affine(line, m, v);
  };
  // x -> x+1 then x -> 2x gives 2x+1 with exact coefficients
  const auto fused = compose(aff(2, 0), aff(1, 1)).as_affine();
  REQUIRE(fused.has_value());
  CHECK(fused->first(0, 0) == 2.0);
  CHECK(fused->second(0) == 1.0);

  const auto inv = invert(aff(2, 2)).as_affine();
  REQUIRE(inv.has_value());
  CHECK(inv->first(0, 0) == 0.5);
  CHECK(inv->second(0) == -1.0);

  CHECK_THROWS_AS(aff(0, 1), ConfigError);
}

TEST_CASE("portraits preserve depth and adjacency") {
  const Space tree = Space::tree(2, 6);
  Rng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_transform(tree, rng);
    for (const auto& p : default_testpoints(tree, 127, 1)) {
      const Point image = apply(t, p);
      CHECK(image.sym.size() == p.sym.size());
      if (!p.sym.empty()) {
        // parent-child pairs map to parent-child pairs
        Point parent = p;
        parent.sym.pop_back();
        Point parent_image = apply(t, parent);
        std::vector<int> truncated(image.sym.begin(), image.sym.end() - 1);
        CHECK(parent_image.sym == truncated);
      }
    }
  }
}

TEST_CASE("gated transforms with disjoint supports commute") {
  const Space copies = Space::labeled_euclidean(2);
  const auto pts = default_testpoints(copies, 40, 11);
  const auto on_even = Transform::label_gated(
      copies, LabelGate::even(), Transform::rotation(copies, 0, 1, 0.9));
  const auto on_odd = Transform::label_gated(
      copies, LabelGate::odd(), Transform::rotation(copies, 0, 1, -1.3));
  CHECK(approx_equal(compose(on_even, on_odd), compose(on_odd, on_even), pts,
                     1e-12));

  // gates must not hide label changes
  CHECK_THROWS_AS(Transform::label_gated(copies, LabelGate::even(),
                                         Transform::copy_shift(copies, 1)),
                  ConfigError);
}

TEST_CASE("copy shifts respect the label window") {
  const Space copies = Space::labeled_euclidean(1, 4);
  const auto shift = Transform::copy_shift(copies, 3);
  CHECK(apply(shift, labeled_point(1, Eigen::VectorXd::Zero(1))).label == 4);
  CHECK_THROWS_AS(apply(shift, labeled_point(2, Eigen::VectorXd::Zero(1))),
                  RangeError);
}

TEST_CASE("position swaps are involutions") {
  const Space seq = Space::sequence(3, 6);
  const auto pts = default_testpoints(seq, 30, 2);
  const auto swap = Transform::position_swap(seq, 4);
  CHECK(approx_equal(invert(swap), swap, pts, 0));
  CHECK(approx_equal(compose(swap, swap), Transform::identity(seq), pts, 0));
  CHECK(Transform::position_swap(seq, 0).is_identity_node());
  CHECK_THROWS_AS(Transform::position_swap(seq, 6), RangeError);
}

TEST_CASE("empty test point set is a configuration error") {
  const Space plane = Space::euclidean(2);
  CHECK_THROWS_AS(approx_equal(Transform::identity(plane),
                               Transform::identity(plane), {}, 1e-9),
                  ConfigError);
}
