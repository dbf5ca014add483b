// Independent oracles the unit and acceptance suites check against. These
// deliberately avoid the library's own normal forms and integrators:
// faithful concrete representations for word problems, brute-force products
// for cocycles and a scaling-and-squaring exponential for the integrator.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cotrans/presentation.hpp"

namespace oracles {

// --- Word-problem oracles ---------------------------------------------------

// Faithful permutation representation of the cyclic group: the n-cycle.
struct CyclicPerm {
  int n;
  std::vector<int> image_of(const cotrans::Word& w) const {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    // each letter shifts by +-1
    long shift = 0;
    for (const auto& l : w.letters) shift += l.sign;
    shift %= n;
    if (shift < 0) shift += n;
    for (int i = 0; i < n; ++i) {
      img[static_cast<std::size_t>(i)] = static_cast<int>((i + shift) % n);
    }
    return img;
  }
  bool equal(const cotrans::Word& u, const cotrans::Word& v) const {
    return image_of(u) == image_of(v);
  }
};

// Faithful permutation representation of the dihedral group of order 2n on
// {0..n-1}: r is i -> i+1, s is i -> -i.
struct DihedralPerm {
  int n;

  std::vector<int> image_of(const cotrans::Word& w) const {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    auto apply_letter = [&](int gen) {
      for (auto& x : img) {
        x = gen == 0 ? (x + 1) % n : ((n - x) % n);
      }
    };
    // letters act on the right of the permutation word; applying them from
    // the word's right end composes the full element's action on points
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (it->gen == 0 && it->sign < 0) {
        for (int k = 0; k < n - 1; ++k) apply_letter(0);  // r^-1 = r^{n-1}
      } else {
        apply_letter(it->gen);  // s^-1 = s
      }
    }
    return img;
  }
  bool equal(const cotrans::Word& u, const cotrans::Word& v) const {
    return image_of(u) == image_of(v);
  }
};

// Faithful affine-integer representation of the infinite dihedral group:
// a: x -> -x and b: x -> 1 - x generate the isometries of Z. Elements are
// exact pairs (p, q) with x -> p x + q, p = +-1.
struct InfiniteDihedralAffine {
  static std::pair<long, long> image_of(const cotrans::Word& w) {
    long p = 1, q = 0;  // accumulated map, applied left of the next letter
    for (const auto& l : w.letters) {
      const long lp = -1;
      const long lq = l.gen == 0 ? 0 : 1;
      // (p, q) o (lp, lq): x -> p (lp x + lq) + q
      q = p * lq + q;
      p = p * lp;
    }
    return {p, q};
  }
  static bool equal(const cotrans::Word& u, const cotrans::Word& v) {
    return image_of(u) == image_of(v);
  }
};

// Free reduction by repeated full scans (quadratic on purpose; independent
// of the library's stack-based pass).
inline cotrans::Word free_reduce_rescan(const cotrans::Word& w) {
  std::vector<cotrans::Letter> ls = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].gen == ls[i + 1].gen && ls[i].sign == -ls[i + 1].sign) {
        ls.erase(ls.begin() + static_cast<long>(i),
                 ls.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return cotrans::Word{ls};
}

// Faithful integer-matrix representation of C2 * C3 in PSL(2, Z):
// a -> S = [[0,-1],[1,0]], b -> U = [[0,-1],[1,-1]] (orders 2 and 3 mod +-I).
struct Psl2z {
  using Mat = std::array<long long, 4>;  // row major

  static Mat mul(const Mat& x, const Mat& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  }
  static Mat inv(const Mat& m) {  // det = 1
    return {m[3], -m[1], -m[2], m[0]};
  }
  static Mat normalize(Mat m) {  // mod +-I: first nonzero entry positive
    for (long long v : m) {
      if (v > 0) return m;
      if (v < 0) return {-m[0], -m[1], -m[2], -m[3]};
    }
    return m;
  }

  // gen 0 is the order-2 generator, gen 1 the order-3 generator.
  static Mat image_of(const cotrans::Word& w) {
    const Mat S{0, -1, 1, 0};
    const Mat U{0, -1, 1, -1};
    Mat acc{1, 0, 0, 1};
    for (const auto& l : w.letters) {
      Mat m = l.gen == 0 ? S : U;
      if (l.sign < 0) m = inv(m);
      acc = mul(acc, m);
    }
    return normalize(acc);
  }
  static bool equal(const cotrans::Word& u, const cotrans::Word& v) {
    return image_of(u) == image_of(v);
  }
};

// --- Numeric oracles --------------------------------------------------------

// Matrix exponential by scaling and squaring with a truncated series.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  const long d = a.rows();
  double nrm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (nrm > 0.25) {
    nrm /= 2;
    ++squarings;
  }
  const Eigen::MatrixXd b = a / std::pow(2.0, squarings);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-19 * sum.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Sequential product A(n+m-1)...A(n) (or inverses) for the transition
// oracle, written as the naive loop.
template <class Rule>
Eigen::MatrixXd transition_bruteforce(const Rule& A, int dim, long n, long m) {
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(dim, dim);
  if (m > 0) {
    for (long k = n; k < n + m; ++k) acc = A(k) * acc;
  } else {
    for (long k = n - 1; k >= n + m; --k) {
      acc = A(k).inverse().eval() * acc;
    }
  }
  return acc;
}

}  // namespace oracles
