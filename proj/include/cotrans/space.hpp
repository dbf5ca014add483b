#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace cotrans {

enum class SpaceKind {
  Euclidean,         // R^d
  LabeledEuclidean,  // disjoint copies of R^d indexed by an integer label
  Tree,              // rooted tree of words over a finite alphabet, truncated at a depth
  Sequence,          // fixed-length symbol sequences over a finite alphabet
};

struct Space {
  SpaceKind kind = SpaceKind::Euclidean;
  int dim = 1;     // Euclidean kinds: d; Tree/Sequence: alphabet size
  int extent = 0;  // Tree: max depth; Sequence: length
  int label_window = 32;

  static Space euclidean(int d);
  static Space labeled_euclidean(int d, int window = 32);
  static Space tree(int alphabet, int depth);
  static Space sequence(int alphabet, int length);

  bool discrete() const {
    return kind == SpaceKind::Tree || kind == SpaceKind::Sequence;
  }

  friend bool operator==(const Space&, const Space&) = default;
};

enum class PointKind { Vector, LabeledVector, Symbols };

// A point of whichever space it is used with; only the fields for its kind
// are meaningful.
struct Point {
  PointKind kind = PointKind::Vector;
  Eigen::VectorXd vec;
  int label = 0;
  std::vector<int> sym;
};

Point euclidean_point(Eigen::VectorXd v);
Point labeled_point(int label, Eigen::VectorXd v);
Point symbol_point(std::vector<int> symbols);

// Throws SpaceMismatchError if p does not belong to the space.
void check_point(const Point& p, const Space& space);

// Euclidean distance on the vector part; infinity across distinct labels;
// 0/infinity on discrete spaces.
double distance(const Point& a, const Point& b, const Space& space);

bool points_equal(const Point& a, const Point& b, const Space& space,
                  double tol);

// Deterministic sample of points, reproducible from the seed. Tree points
// cover all depths by striding through the full vertex list.
std::vector<Point> default_testpoints(const Space& space, std::size_t count,
                                      std::uint64_t seed);

std::string describe(const Point& p, const Space& space);

}  // namespace cotrans
