#include "cotrans/space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cotrans/error.hpp"
#include "cotrans/rng.hpp"

namespace cotrans {

Space Space::euclidean(int d) {
  if (d < 1) throw ConfigError("euclidean dimension must be >= 1");
  return Space{SpaceKind::Euclidean, d, 0, 0};
}

Space Space::labeled_euclidean(int d, int window) {
  if (d < 1) throw ConfigError("euclidean dimension must be >= 1");
  if (window < 1) throw ConfigError("label window must be >= 1");
  return Space{SpaceKind::LabeledEuclidean, d, 0, window};
}

Space Space::tree(int alphabet, int depth) {
  if (alphabet < 2) throw ConfigError("tree alphabet must have >= 2 symbols");
  if (depth < 1 || depth > 16) throw ConfigError("tree depth must be in [1,16]");
  return Space{SpaceKind::Tree, alphabet, depth, 0};
}

Space Space::sequence(int alphabet, int length) {
  if (alphabet < 2) throw ConfigError("alphabet must have >= 2 symbols");
  if (length < 1 || length > 64) throw ConfigError("sequence length must be in [1,64]");
  return Space{SpaceKind::Sequence, alphabet, length, 0};
}

Point euclidean_point(Eigen::VectorXd v) {
  Point p;
  p.kind = PointKind::Vector;
  p.vec = std::move(v);
  return p;
}

Point labeled_point(int label, Eigen::VectorXd v) {
  Point p;
  p.kind = PointKind::LabeledVector;
  p.label = label;
  p.vec = std::move(v);
  return p;
}

Point symbol_point(std::vector<int> symbols) {
  Point p;
  p.kind = PointKind::Symbols;
  p.sym = std::move(symbols);
  return p;
}

void check_point(const Point& p, const Space& space) {
  switch (space.kind) {
    case SpaceKind::Euclidean:
      if (p.kind != PointKind::Vector || p.vec.size() != space.dim) {
        throw SpaceMismatchError("point dimension does not match space");
      }
      return;
    case SpaceKind::LabeledEuclidean:
      if (p.kind != PointKind::LabeledVector || p.vec.size() != space.dim) {
        throw SpaceMismatchError("point dimension does not match space");
      }
      if (p.label < -space.label_window || p.label > space.label_window) {
        throw RangeError("label outside configured window");
      }
      return;
    case SpaceKind::Tree:
      if (p.kind != PointKind::Symbols ||
          static_cast<int>(p.sym.size()) > space.extent) {
        throw SpaceMismatchError("tree vertex deeper than configured depth");
      }
      break;
    case SpaceKind::Sequence:
      if (p.kind != PointKind::Symbols ||
          static_cast<int>(p.sym.size()) != space.extent) {
        throw SpaceMismatchError("sequence length does not match space");
      }
      break;
  }
  for (int s : p.sym) {
    if (s < 0 || s >= space.dim) {
      throw SpaceMismatchError("symbol outside alphabet");
    }
  }
}

double distance(const Point& a, const Point& b, const Space& space) {
  switch (space.kind) {
    case SpaceKind::Euclidean:
      return (a.vec - b.vec).norm();
    case SpaceKind::LabeledEuclidean:
      if (a.label != b.label) return std::numeric_limits<double>::infinity();
      return (a.vec - b.vec).norm();
    case SpaceKind::Tree:
    case SpaceKind::Sequence:
      return a.sym == b.sym ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

bool points_equal(const Point& a, const Point& b, const Space& space,
                  double tol) {
  if (space.discrete()) return a.sym == b.sym;
  return distance(a, b, space) <= tol;
}

std::vector<Point> default_testpoints(const Space& space, std::size_t count,
                                      std::uint64_t seed) {
  if (count == 0) throw ConfigError("test point count must be positive");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(count);
  switch (space.kind) {
    case SpaceKind::Euclidean:
      for (std::size_t i = 0; i < count; ++i) {
        Eigen::VectorXd v(space.dim);
        for (int j = 0; j < space.dim; ++j) v[j] = rng.uniform(-2.0, 2.0);
        pts.push_back(euclidean_point(std::move(v)));
      }
      break;
    case SpaceKind::LabeledEuclidean: {
      const int span = std::min(4, space.label_window / 2);
      for (std::size_t i = 0; i < count; ++i) {
        Eigen::VectorXd v(space.dim);
        for (int j = 0; j < space.dim; ++j) v[j] = rng.uniform(-2.0, 2.0);
        const int label = static_cast<int>(i % (2 * span + 1)) - span;
        pts.push_back(labeled_point(label, std::move(v)));
      }
      break;
    }
    case SpaceKind::Tree: {
      // All vertices in breadth-first order, then stride through them so
      // every depth is represented.
      std::vector<std::vector<int>> vertices{{}};
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (static_cast<int>(vertices[i].size()) >= space.extent) continue;
        if (vertices.size() > 200000) break;
        for (int s = 0; s < space.dim; ++s) {
          auto child = vertices[i];
          child.push_back(s);
          vertices.push_back(std::move(child));
        }
      }
      if (vertices.size() <= count) {
        for (auto& v : vertices) pts.push_back(symbol_point(std::move(v)));
      } else {
        const std::size_t stride = vertices.size() / count;
        for (std::size_t i = 0; i < count; ++i) {
          pts.push_back(symbol_point(vertices[i * stride]));
        }
      }
      break;
    }
    case SpaceKind::Sequence:
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<int> s(static_cast<std::size_t>(space.extent));
        for (auto& x : s) x = static_cast<int>(rng.index(space.dim));
        pts.push_back(symbol_point(std::move(s)));
      }
      break;
  }
  return pts;
}

std::string describe(const Point& p, const Space& space) {
  std::ostringstream out;
  switch (space.kind) {
    case SpaceKind::LabeledEuclidean:
      out << "[k=" << p.label << "] ";
      [[fallthrough]];
    case SpaceKind::Euclidean: {
      out << "(";
      for (int i = 0; i < p.vec.size(); ++i) {
        if (i) out << ", ";
        out << p.vec[i];
      }
      out << ")";
      return out.str();
    }
    case SpaceKind::Tree:
    case SpaceKind::Sequence: {
      if (p.sym.empty()) return "<root>";
      for (int s : p.sym) out << s;
      return out.str();
    }
  }
  return out.str();
}

}  // namespace cotrans
