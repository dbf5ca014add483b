#include "cotrans/cotranslation.hpp"

#include <mutex>

#include "cotrans/error.hpp"
#include "cotrans/rng.hpp"

namespace cotrans {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const {
    const std::size_t a = WordHash{}(p.first);
    const std::size_t b = WordHash{}(p.second);
    return a ^ (b * 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

bool extensionally_ok(const Space& space, double residual, double tol) {
  return space.discrete() ? residual == 0.0 : residual <= tol;
}

}  // namespace

GeneratorMaps::GeneratorMaps(GroupPresentation pres, Space space,
                             std::vector<Rule> rules)
    : pres_(std::move(pres)), space_(space), rules_(std::move(rules)) {
  if (rules_.size() != pres_.generators().size()) {
    throw ConfigError("one generator map per generator is required");
  }
}

GeneratorMaps GeneratorMaps::from_tables(GroupPresentation pres, Space space,
                                         std::vector<Table> tables) {
  const auto names = pres.generators();
  if (tables.size() != names.size()) {
    throw ConfigError("one table per generator is required");
  }
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    auto table = std::make_shared<Table>(std::move(tables[i]));
    const std::string gen = names[i];
    rules.push_back([table, gen](const Word& base) -> Transform {
      auto it = table->find(base);
      if (it == table->end()) {
        throw IncompleteDefinitionError("generator map for " + gen +
                                        " has no value at the required base");
      }
      return it->second;
    });
  }
  return GeneratorMaps(std::move(pres), space, std::move(rules));
}

Transform GeneratorMaps::at(int gen, const Word& base) const {
  if (gen < 0 || gen >= static_cast<int>(rules_.size())) {
    throw MalformedWordError("generator index outside presentation");
  }
  Transform t = rules_[static_cast<std::size_t>(gen)](base);
  if (!(t.space() == space_)) {
    throw SpaceMismatchError("generator map produced a transform of another space");
  }
  return t;
}

struct Cotranslation::Cache {
  std::mutex mutex;
  std::unordered_map<std::pair<Word, Word>, Transform, PairHash> values;
};

Cotranslation::Cotranslation(GeneratorMaps gens)
    : gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

Transform Cotranslation::generator_transform(int gen, const Word& base) const {
  return gens_.at(gen, normal_form(base, presentation()));
}

Transform Cotranslation::evaluate(const Word& g, const Word& h) const {
  const auto& P = presentation();
  const Word gn = normal_form(g, P);
  const Word hn = normal_form(h, P);
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->values.find({gn, hn});
    if (it != cache_->values.end()) return it->second;
  }

  Transform acc = Transform::identity(space());
  Word base = gn;
  for (auto it = hn.letters.rbegin(); it != hn.letters.rend(); ++it) {
    const Word step = multiply(single_letter(it->gen, it->sign), base, P);
    Transform t = it->sign > 0 ? gens_.at(it->gen, base)
                               : invert(gens_.at(it->gen, step));
    acc = compose(t, acc);
    base = step;
  }

  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(std::make_pair(gn, hn), acc);
  return acc;
}

std::vector<std::array<Word, 3>> default_triples(const GroupPresentation& P,
                                                 int radius, std::size_t cap,
                                                 std::uint64_t seed) {
  const auto words =
      P.is_finite() && P.order() <= 64 ? P.elements() : ball(P, radius);
  const std::size_t n = words.size();
  std::vector<std::array<Word, 3>> triples;
  if (n * n * n <= cap) {
    for (const auto& g : words) {
      for (const auto& h : words) {
        for (const auto& k : words) triples.push_back({g, h, k});
      }
    }
  } else {
    Rng rng(seed);
    triples.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) {
      triples.push_back({words[rng.index(n)], words[rng.index(n)],
                         words[rng.index(n)]});
    }
  }
  return triples;
}

Report verify_cotranslation(const Cotranslation& Z,
                            const std::vector<std::array<Word, 3>>& triples,
                            const std::vector<Point>& testpoints, double tol) {
  const auto& P = Z.presentation();
  const auto& space = Z.space();
  Report report;
  auto& law = report.add("cocycle_law");
  auto& unit = report.add("unit_law");
  auto& inv = report.add("involution_law");

  std::unordered_map<Word, bool, WordHash> unit_done;
  std::unordered_map<std::pair<Word, Word>, bool, PairHash> inv_done;

  for (const auto& [g, h, k] : triples) {
    const Word hg = multiply(h, g, P);
    const Word kh = multiply(k, h, P);
    const double r = max_image_distance(
        Z.evaluate(g, kh), compose(Z.evaluate(hg, k), Z.evaluate(g, h)),
        testpoints);
    law.record(r, extensionally_ok(space, r, tol),
               "Z(g,kh) != Z(hg,k)Z(g,h) at g=" + to_string(g, P) +
                   ", h=" + to_string(h, P) + ", k=" + to_string(k, P));

    if (unit_done.emplace(g, true).second) {
      const double ru = max_image_distance(
          Z.evaluate(g, unit_word()), Transform::identity(space), testpoints);
      unit.record(ru, extensionally_ok(space, ru, tol),
                  "Z(g,e) != Id at g=" + to_string(g, P));
    }
    if (inv_done.emplace(std::make_pair(g, h), true).second) {
      const double ri =
          max_image_distance(invert(Z.evaluate(g, h)),
                             Z.evaluate(hg, invert_word(h, P)), testpoints);
      inv.record(ri, extensionally_ok(space, ri, tol),
                 "Z(g,h)^-1 != Z(hg,h^-1) at g=" + to_string(g, P) +
                     ", h=" + to_string(h, P));
    }
  }
  return report;
}

Report verify_cotranslation(const Cotranslation& Z, int radius,
                            std::size_t testpoints, double tol) {
  return verify_cotranslation(
      Z, default_triples(Z.presentation(), radius),
      default_testpoints(Z.space(), testpoints, 17), tol);
}

Report check_relation_preservation(const GeneratorMaps& gens,
                                   const std::vector<Word>& basepoints,
                                   const std::vector<Point>& testpoints,
                                   double tol) {
  const auto& P = gens.presentation();
  const auto& space = gens.space();
  Report report;
  const auto relators = P.relators();
  for (std::size_t ri = 0; ri < relators.size(); ++ri) {
    const auto& p = relators[ri];
    auto& check =
        report.add("relator_" + std::to_string(ri) + "(" + to_string(p, P) + ")");
    for (const auto& eta : basepoints) {
      Transform acc = Transform::identity(space);
      Word base = normal_form(eta, P);
      for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) {
        const Word step = multiply(single_letter(it->gen, it->sign), base, P);
        Transform t = it->sign > 0 ? gens.at(it->gen, base)
                                   : invert(gens.at(it->gen, step));
        acc = compose(t, acc);
        base = step;
      }
      const double r = max_image_distance(acc, Transform::identity(space),
                                          testpoints);
      check.record(r, extensionally_ok(space, r, tol),
                   "relator product != Id at base " + to_string(eta, P));
    }
  }
  return report;
}

Report check_relation_preservation(const GeneratorMaps& gens, int radius,
                                   std::size_t testpoints, double tol) {
  const auto& P = gens.presentation();
  const auto bases =
      P.is_finite() && P.order() <= 64 ? P.elements() : ball(P, radius);
  return check_relation_preservation(
      gens, bases, default_testpoints(gens.space(), testpoints, 19), tol);
}

namespace {

// Shared morphism test: gamma(e) = Id and gamma(uv) = gamma(u) gamma(v) on
// ball(P, radius)^2.
void require_morphism(const GroupPresentation& P, const Space& space,
                      const std::function<Transform(const Word&)>& gamma,
                      int radius, const std::vector<Point>& pts, double tol,
                      const char* who) {
  const double re = max_image_distance(gamma(unit_word()),
                                       Transform::identity(space), pts);
  if (!extensionally_ok(space, re, tol)) {
    throw RejectedConstructionError(std::string(who) +
                                    ": gamma(e) != Id, residual " +
                                    std::to_string(re));
  }
  const auto words = ball(P, radius);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const double r = max_image_distance(
          gamma(multiply(u, v, P)), compose(gamma(u), gamma(v)), pts);
      if (!extensionally_ok(space, r, tol)) {
        throw RejectedConstructionError(
            std::string(who) + ": gamma is not a morphism at u=" +
            to_string(u, P) + ", v=" + to_string(v, P) + ", residual " +
            std::to_string(r));
      }
    }
  }
}

}  // namespace

Cotranslation from_group_morphism(const GroupPresentation& P,
                                  const Space& space,
                                  const std::function<Transform(const Word&)>& gamma,
                                  int sample_radius, std::size_t testpoints,
                                  double tol) {
  const auto pts = default_testpoints(space, testpoints, 23);
  require_morphism(P, space, gamma, sample_radius, pts, tol,
                   "from_group_morphism");
  std::vector<GeneratorMaps::Rule> rules;
  for (std::size_t i = 0; i < P.generators().size(); ++i) {
    Transform value = gamma(single_letter(static_cast<int>(i)));
    rules.push_back([value](const Word&) { return value; });
  }
  return Cotranslation(GeneratorMaps(P, space, std::move(rules)));
}

Cotranslation scalar_twist(const Cotranslation& Z,
                           const std::function<Transform(const Word&)>& gamma,
                           int sample_radius, std::size_t testpoints,
                           double tol) {
  const auto& P = Z.presentation();
  const auto& space = Z.space();
  const auto pts = default_testpoints(space, testpoints, 29);
  require_morphism(P, space, gamma, sample_radius, pts, tol, "scalar_twist");

  const auto words = ball(P, sample_radius);
  for (const auto& k : words) {
    const Transform gk = gamma(k);
    for (const auto& g : words) {
      for (const auto& h : words) {
        const Transform zgh = Z.evaluate(g, h);
        const double r = max_image_distance(compose(gk, zgh),
                                            compose(zgh, gk), pts);
        if (!extensionally_ok(space, r, tol)) {
          throw RejectedConstructionError(
              "scalar_twist: gamma(k) does not commute with Z(g,h) at k=" +
              to_string(k, P) + ", g=" + to_string(g, P) + ", h=" +
              to_string(h, P) + ", residual " + std::to_string(r));
        }
      }
    }
  }

  std::vector<GeneratorMaps::Rule> rules;
  for (std::size_t i = 0; i < P.generators().size(); ++i) {
    const Transform gi = gamma(single_letter(static_cast<int>(i)));
    Cotranslation inner = Z;
    const int gen = static_cast<int>(i);
    rules.push_back([inner, gi, gen](const Word& base) {
      return compose(inner.generator_transform(gen, base), gi);
    });
  }
  return Cotranslation(GeneratorMaps(P, space, std::move(rules)));
}

Cotranslation free_product_lift(const Cotranslation& left,
                                const Cotranslation& right) {
  if (!(left.space() == right.space())) {
    throw SpaceMismatchError("free product lift needs a common space");
  }
  GroupPresentation P = GroupPresentation::free_product(left.presentation(),
                                                        right.presentation());
  const int nl = static_cast<int>(left.presentation().generators().size());
  std::vector<GeneratorMaps::Rule> rules;
  for (std::size_t i = 0; i < P.generators().size(); ++i) {
    const int gen = static_cast<int>(i);
    if (gen < nl) {
      Cotranslation factor = left;
      GroupPresentation prod = P;
      rules.push_back([factor, prod, gen](const Word& base) {
        return factor.generator_transform(
            gen, project_free_factor(base, Factor::Left, prod));
      });
    } else {
      Cotranslation factor = right;
      GroupPresentation prod = P;
      rules.push_back([factor, prod, gen, nl](const Word& base) {
        return factor.generator_transform(
            gen - nl, project_free_factor(base, Factor::Right, prod));
      });
    }
  }
  return Cotranslation(GeneratorMaps(std::move(P), left.space(),
                                     std::move(rules)));
}

Cotranslation presentation_descent(const Cotranslation& Z,
                                   const GroupPresentation& target) {
  const auto& G = Z.presentation();
  if (target.generators() != G.generators()) {
    throw UnsupportedOperationError(
        "descent requires identical generator lists");
  }
  for (const auto& rel : target.relators()) {
    if (!normal_form(rel, G).empty()) {
      throw UnsupportedOperationError(
          "target relator " + to_string(rel, target) +
          " does not hold in the source group");
    }
  }
  std::vector<GeneratorMaps::Rule> rules;
  for (std::size_t i = 0; i < target.generators().size(); ++i) {
    const int gen = static_cast<int>(i);
    Cotranslation source = Z;
    GroupPresentation g_pres = G;
    rules.push_back([source, g_pres, gen](const Word& base) {
      return source.generator_transform(gen, normal_form(base, g_pres));
    });
  }
  return Cotranslation(GeneratorMaps(target, Z.space(), std::move(rules)));
}

}  // namespace cotrans
