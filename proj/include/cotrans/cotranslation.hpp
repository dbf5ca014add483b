#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "cotrans/presentation.hpp"
#include "cotrans/report.hpp"
#include "cotrans/space.hpp"
#include "cotrans/transform.hpp"

namespace cotrans {

// One map A_i per generator of the presentation, either table-backed (finite
// groups) or rule-backed. Rules receive the base word already in normal form
// and throw IncompleteDefinitionError where undefined.
class GeneratorMaps {
 public:
  using Rule = std::function<Transform(const Word&)>;
  using Table = std::unordered_map<Word, Transform, WordHash>;

  GeneratorMaps(GroupPresentation pres, Space space, std::vector<Rule> rules);
  static GeneratorMaps from_tables(GroupPresentation pres, Space space,
                                   std::vector<Table> tables);

  Transform at(int gen, const Word& base_normal_form) const;
  const GroupPresentation& presentation() const { return pres_; }
  const Space& space() const { return space_; }

 private:
  GroupPresentation pres_;
  Space space_;
  std::vector<Rule> rules_;
};

// Z: G x G -> A_X determined by its generator maps via A_i(g) = Z(g, xi_i).
// Evaluation decomposes the second argument: for h = l_k ... l_1 in normal
// form, Z(g, h) = T_k o ... o T_1 with bases g, l_1 g, l_2 l_1 g, ...; an
// inverse letter xi^-1 at base b contributes [A_i(xi^-1 b)]^-1.
class Cotranslation {
 public:
  explicit Cotranslation(GeneratorMaps gens);

  const GroupPresentation& presentation() const { return gens_.presentation(); }
  const Space& space() const { return gens_.space(); }
  const GeneratorMaps& generator_maps() const { return gens_; }

  Transform evaluate(const Word& g, const Word& h) const;
  Transform generator_transform(int gen, const Word& base) const;

 private:
  GeneratorMaps gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Word triples (g, h, k) for the law Z(g, kh) = Z(hg, k) Z(g, h), drawn from
// ball(P, radius)^3; exhaustive when small, otherwise a seeded subsample.
std::vector<std::array<Word, 3>> default_triples(const GroupPresentation& P,
                                                 int radius,
                                                 std::size_t cap = 20000,
                                                 std::uint64_t seed = 11);

// Checks the composition law, the unit law Z(g, e) = Id and the involution
// law Z(g,h)^-1 = Z(hg, h^-1), extensionally on the test points.
Report verify_cotranslation(const Cotranslation& Z,
                            const std::vector<std::array<Word, 3>>& triples,
                            const std::vector<Point>& testpoints, double tol);
Report verify_cotranslation(const Cotranslation& Z, int radius = 3,
                            std::size_t testpoints = 32, double tol = 1e-9);

// For every relator p = l_n ... l_1 and base eta, checks
// A(l_n at l_{n-1}...l_1 eta) o ... o A(l_1 at eta) = Id extensionally.
Report check_relation_preservation(const GeneratorMaps& gens,
                                   const std::vector<Word>& basepoints,
                                   const std::vector<Point>& testpoints,
                                   double tol);
Report check_relation_preservation(const GeneratorMaps& gens, int radius = 3,
                                   std::size_t testpoints = 32,
                                   double tol = 1e-9);

// The cotranslation Z(g, h) = gamma(h) of a group morphism gamma. gamma is
// tested on sample pairs first; a failure rejects with a witness.
Cotranslation from_group_morphism(const GroupPresentation& P,
                                  const Space& space,
                                  const std::function<Transform(const Word&)>& gamma,
                                  int sample_radius = 2,
                                  std::size_t testpoints = 32,
                                  double tol = 1e-9);

// W(g, h) = Z(g, h) gamma(h) for a group morphism gamma commuting with all
// values of Z. Both hypotheses are sampled; failures reject with a witness.
Cotranslation scalar_twist(const Cotranslation& Z,
                           const std::function<Transform(const Word&)>& gamma,
                           int sample_radius = 2, std::size_t testpoints = 32,
                           double tol = 1e-9);

// Cotranslation of the free product acting through the factor projections:
// the generator map of s in the left factor sends w to A_s(pi_left(w)).
Cotranslation free_product_lift(const Cotranslation& left,
                                const Cotranslation& right);

// Transports Z along the canonical morphism pi: H -> G for a presentation H
// with the same generators and a subset of the relations (generator maps
// factor through pi). Unsupported pairs throw.
Cotranslation presentation_descent(const Cotranslation& Z,
                                   const GroupPresentation& target);

}  // namespace cotrans
