#include "cotrans/skew.hpp"

#include "cotrans/error.hpp"

namespace cotrans {

Hull::Hull(GroupPresentation pres, Space space, SliceFn slices)
    : pres_(std::move(pres)), space_(space), slices_(std::move(slices)) {}

Transform Hull::slice(const Word& index, const Word& h) const {
  Transform t = slices_(normal_form(index, pres_), normal_form(h, pres_));
  if (!(t.space() == space_)) {
    throw SpaceMismatchError("hull slice lives on another space");
  }
  return t;
}

Point Hull::psi(const Word& index, const Word& h, const Point& x) const {
  return apply(slice(index, h), x);
}

SkewProduct hull_from_cotranslation(const Cotranslation& Z) {
  GroupPresentation P = Z.presentation();
  Hull hull(P, Z.space(),
            [Z](const Word& index, const Word& h) { return Z.evaluate(index, h); });
  IndexAction sigma = [P](const Word& h, const Word& index) {
    return multiply(h, index, P);
  };
  return SkewProduct{std::move(hull), std::move(sigma)};
}

SkewProduct single_function_hull(const GroupPresentation& P, const Space& space,
                                 const std::function<Transform(const Word&)>& gamma) {
  Hull hull(P, space,
            [gamma](const Word&, const Word& h) { return gamma(h); });
  IndexAction sigma = [](const Word&, const Word& index) { return index; };
  return SkewProduct{std::move(hull), std::move(sigma)};
}

Report verify_skew_axiom(const Hull& hull, const IndexAction& sigma,
                         const std::vector<std::array<Word, 3>>& samples,
                         const std::vector<Point>& testpoints, double tol) {
  const auto& P = hull.presentation();
  const auto& space = hull.space();
  Report report;
  auto& admissible = report.add("admissibility");
  auto& action = report.add("sigma_left_action");
  auto& axiom = report.add("compatibility");

  std::unordered_map<Word, bool, WordHash> seen;
  for (const auto& [index, g, h] : samples) {
    if (seen.emplace(index, true).second) {
      const double r = max_image_distance(
          hull.slice(index, unit_word()), Transform::identity(space),
          testpoints);
      admissible.record(r, space.discrete() ? r == 0.0 : r <= tol,
                        "psi(e,.) != id at index " + to_string(index, P));
      const bool unit_fix = sigma(unit_word(), index) == normal_form(index, P);
      action.record(0.0, unit_fix,
                    "sigma(e, psi) != psi at index " + to_string(index, P));
    }
    // sigma(g, sigma(h, .)) = sigma(gh, .) on indices.
    const Word two_step = sigma(g, sigma(h, index));
    const Word one_step = sigma(multiply(g, h, P), index);
    action.record(0.0, two_step == one_step,
                  "sigma is not a left action at index " + to_string(index, P) +
                      ", g=" + to_string(g, P) + ", h=" + to_string(h, P));

    // [sigma(h, psi)](g, psi(h, x)) = psi(gh, x).
    const Word moved = sigma(h, index);
    const Transform lhs = compose(hull.slice(moved, g), hull.slice(index, h));
    const Transform rhs = hull.slice(index, multiply(g, h, P));
    const double r = max_image_distance(lhs, rhs, testpoints);
    axiom.record(r, space.discrete() ? r == 0.0 : r <= tol,
                 "compatibility fails at index " + to_string(index, P) +
                     ", g=" + to_string(g, P) + ", h=" + to_string(h, P));
  }
  return report;
}

Cotranslation cotranslation_from_hull(const Hull& hull, std::size_t testpoints,
                                      double tol) {
  const auto& P = hull.presentation();
  const auto& space = hull.space();
  const auto pts = default_testpoints(space, testpoints, 31);
  for (const auto& index : ball(P, 2)) {
    const double r = max_image_distance(hull.slice(index, unit_word()),
                                        Transform::identity(space), pts);
    if (space.discrete() ? r != 0.0 : r > tol) {
      throw InconsistencyError("hull is not admissible at index " +
                               to_string(index, P));
    }
  }
  Hull local = hull;
  std::vector<GeneratorMaps::Rule> rules;
  for (std::size_t i = 0; i < P.generators().size(); ++i) {
    const int gen = static_cast<int>(i);
    rules.push_back([local, gen](const Word& base) {
      return local.slice(base, single_letter(gen));
    });
  }
  return Cotranslation(GeneratorMaps(P, space, std::move(rules)));
}

SuspensionMorphism::SuspensionMorphism(Cotranslation Z, std::vector<Word> window)
    : Z_(std::move(Z)), window_(std::move(window)) {
  for (const auto& w : window_) {
    member_.emplace(normal_form(w, Z_.presentation()), true);
  }
}

SuspensionMorphism::PairPoint SuspensionMorphism::apply_to(
    const Word& g, const PairPoint& p) const {
  const auto& P = Z_.presentation();
  const Word moved = multiply(g, p.index, P);
  if (!member_.count(moved)) {
    throw RangeError("suspension left the index window at " +
                     to_string(moved, P));
  }
  return PairPoint{moved, apply(Z_.evaluate(p.index, g), p.x)};
}

Report verify_suspension(const Cotranslation& Z,
                         const std::vector<Word>& morphism_args,
                         const std::vector<Word>& window,
                         const std::vector<Point>& testpoints, double tol) {
  const auto& P = Z.presentation();
  const auto& space = Z.space();
  SuspensionMorphism W(Z, window);
  Report report;
  auto& unit = report.add("suspension_unit");
  auto& proj = report.add("projection_condition");
  auto& morphism = report.add("suspension_morphism_law");

  auto ok = [&](double r) { return space.discrete() ? r == 0.0 : r <= tol; };

  for (const auto& h : window) {
    for (const auto& x : testpoints) {
      const auto image = W.apply_to(unit_word(), {h, x});
      const double r = distance(image.x, x, space);
      unit.record(r, ok(r) && image.index == normal_form(h, P),
                  "W(e) != id at index " + to_string(h, P));
    }
  }

  for (const auto& g : morphism_args) {
    for (const auto& h : window) {
      const Word expected = multiply(g, h, P);
      bool inside = true;
      for (const auto& x : testpoints) {
        SuspensionMorphism::PairPoint image{unit_word(), x};
        try {
          image = W.apply_to(g, {h, x});
        } catch (const RangeError&) {
          inside = false;
          break;
        }
        proj.record(0.0, image.index == expected,
                    "pi_G(W(g)(h,x)) != gh at g=" + to_string(g, P) +
                        ", h=" + to_string(h, P));
      }
      if (!inside) continue;
    }
  }

  for (const auto& g2 : morphism_args) {
    for (const auto& g1 : morphism_args) {
      const Word g21 = multiply(g2, g1, P);
      for (const auto& h : window) {
        for (const auto& x : testpoints) {
          SuspensionMorphism::PairPoint lhs{unit_word(), x};
          SuspensionMorphism::PairPoint rhs{unit_word(), x};
          try {
            lhs = W.apply_to(g2, W.apply_to(g1, {h, x}));
            rhs = W.apply_to(g21, {h, x});
          } catch (const RangeError&) {
            continue;  // sampled outside the materialized window
          }
          const double r = distance(lhs.x, rhs.x, space);
          morphism.record(
              r, ok(r) && lhs.index == rhs.index,
              "W(g2 g1) != W(g2) o W(g1) at g2=" + to_string(g2, P) +
                  ", g1=" + to_string(g1, P) + ", h=" + to_string(h, P));
        }
      }
    }
  }
  return report;
}

}  // namespace cotrans
