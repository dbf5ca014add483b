#pragma once

#include <functional>

#include "cotrans/cotranslation.hpp"

namespace cotrans {

// Admissible family {psi_g} of maps G x X -> X, indexed by group words and
// realized through slices psi_g(h, .) that are invertible transforms.
class Hull {
 public:
  using SliceFn = std::function<Transform(const Word& index, const Word& h)>;

  Hull(GroupPresentation pres, Space space, SliceFn slices);

  const GroupPresentation& presentation() const { return pres_; }
  const Space& space() const { return space_; }

  Transform slice(const Word& index, const Word& h) const;
  Point psi(const Word& index, const Word& h, const Point& x) const;

 private:
  GroupPresentation pres_;
  Space space_;
  SliceFn slices_;
};

// sigma(h, psi_index) = psi_{action(h, index)}, as a map on indices.
using IndexAction = std::function<Word(const Word& h, const Word& index)>;

struct SkewProduct {
  Hull hull;
  IndexAction sigma;
};

// The skew-product of a cotranslation: psi_g(h, x) = [Z(g,h)](x) and
// sigma(h, psi_g) = psi_{hg}.
SkewProduct hull_from_cotranslation(const Cotranslation& Z);

// Hull containing the single function of a group action gamma, with the
// trivial index action.
SkewProduct single_function_hull(const GroupPresentation& P, const Space& space,
                                 const std::function<Transform(const Word&)>& gamma);

// Checks admissibility (psi(e, .) = Id) and the compatibility axiom
// [sigma(h,psi)](g, psi(h,x)) = psi(gh, x) over sampled (index, g, h).
Report verify_skew_axiom(const Hull& hull, const IndexAction& sigma,
                         const std::vector<std::array<Word, 3>>& samples,
                         const std::vector<Point>& testpoints, double tol);

// Recovers the cotranslation Z(g, h) = psi_g(h, .) from a hull whose index
// action is the left translation (generator maps are re-derived from the
// slices at generator arrows). Throws InconsistencyError when the hull is
// not admissible.
Cotranslation cotranslation_from_hull(const Hull& hull,
                                      std::size_t testpoints = 16,
                                      double tol = 1e-9);

// The group-morphism form of a cotranslation on index-point pairs:
// W(g)(h, x) = (gh, [Z(h, g)](x)). Applications whose index leaves the
// window throw RangeError.
class SuspensionMorphism {
 public:
  struct PairPoint {
    Word index;
    Point x;
  };

  SuspensionMorphism(Cotranslation Z, std::vector<Word> window);

  PairPoint apply_to(const Word& g, const PairPoint& p) const;
  const std::vector<Word>& window() const { return window_; }

 private:
  Cotranslation Z_;
  std::vector<Word> window_;
  std::unordered_map<Word, bool, WordHash> member_;
};

// Checks W(e) = Id, the first-coordinate condition pi_G(W(g)(h,x)) = gh and
// the morphism law W(g2 g1) = W(g2) o W(g1) on the window.
Report verify_suspension(const Cotranslation& Z,
                         const std::vector<Word>& morphism_args,
                         const std::vector<Word>& window,
                         const std::vector<Point>& testpoints, double tol);

}  // namespace cotrans
