#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "cotrans/presentation.hpp"
#include "cotrans/report.hpp"
#include "cotrans/word.hpp"

namespace cotrans {

// Element (base, arrow) of the left-translations groupoid on G x G.
// (p, q) is composable when p.base = q.arrow * q.base, and then
// p * q = (q.base, p.arrow * q.arrow); inv(x, g) = (g * x, g^-1).
struct GroupoidElement {
  Word base;
  Word arrow;
  friend auto operator<=>(const GroupoidElement&,
                          const GroupoidElement&) = default;
};

GroupoidElement groupoid_element(const Word& base, const Word& arrow,
                                 const GroupPresentation& P);

bool composable(const GroupoidElement& p, const GroupoidElement& q,
                const GroupPresentation& P);

// Throws ComposabilityError on a non-composable pair.
GroupoidElement compose_pair(const GroupoidElement& p, const GroupoidElement& q,
                             const GroupPresentation& P);

GroupoidElement inv_pair(const GroupoidElement& p, const GroupPresentation& P);

// The structure maps, injectable so a deliberately corrupted composition can
// be run through the axiom checker.
struct GroupoidOps {
  std::function<bool(const GroupoidElement&, const GroupoidElement&,
                     const GroupPresentation&)>
      composable;
  std::function<GroupoidElement(const GroupoidElement&, const GroupoidElement&,
                                const GroupPresentation&)>
      compose;
  std::function<GroupoidElement(const GroupoidElement&,
                                const GroupPresentation&)>
      inv;

  static GroupoidOps standard();
};

struct AxiomCheckConfig {
  std::size_t max_pairs = 50000;
  std::size_t max_triples = 20000;
  std::uint64_t seed = 7;
};

// Checks associativity (including its composability claims), involution,
// identity and the units-space characterization over the sampled elements.
// Failures are reported as counterexamples, not thrown.
Report verify_groupoid_axioms(const GroupPresentation& P,
                              const std::vector<GroupoidElement>& sample,
                              const GroupoidOps& ops = GroupoidOps::standard(),
                              const AxiomCheckConfig& config = {});

// Default sample: all (base, arrow) with both entries in ball(P, radius);
// exhaustive G x G for finite groups of order <= 64.
std::vector<GroupoidElement> groupoid_sample(const GroupPresentation& P,
                                             int radius);

}  // namespace cotrans
