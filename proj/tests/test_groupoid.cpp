#include <doctest.h>

#include "cotrans/error.hpp"
#include "cotrans/groupoid.hpp"

using namespace cotrans;

namespace {

Word w(const std::string& text, const GroupPresentation& P) {
  return parse_word(text, P);
}

}  // namespace

TEST_CASE("pair composition and inversion") {
  auto C3 = GroupPresentation::cyclic(3);
  auto F2 = GroupPresentation::free_group(2);

  // unit arrow composes away
  CHECK(compose_pair({w("a", C3), w("e", C3)}, {w("e", C3), w("a", C3)}, C3) ==
        GroupoidElement{w("e", C3), w("a", C3)});

  CHECK(compose_pair({w("b a", F2), w("a", F2)}, {w("a", F2), w("b", F2)},
                     F2) == GroupoidElement{w("a", F2), w("a b", F2)});

  CHECK_THROWS_AS(compose_pair({w("e", F2), w("a", F2)},
                               {w("a", F2), w("b", F2)}, F2),
                  ComposabilityError);

  CHECK(inv_pair({w("x", GroupPresentation::free_group(3, {"x", "y", "z"})),
                  Word{}},
                 GroupPresentation::free_group(3, {"x", "y", "z"})) ==
        GroupoidElement{w("x", GroupPresentation::free_group(3, {"x", "y", "z"})),
                        Word{}});
  CHECK(inv_pair({w("e", C3), w("a", C3)}, C3) ==
        GroupoidElement{w("a", C3), w("a^2", C3)});
  CHECK(inv_pair({w("b", F2), w("a", F2)}, F2) ==
        GroupoidElement{w("a b", F2), w("a^-1", F2)});

  // involution
  for (const auto& x : ball(F2, 2)) {
    for (const auto& g : ball(F2, 2)) {
      const GroupoidElement eta{x, g};
      CHECK(inv_pair(inv_pair(eta, F2), F2) == eta);
    }
  }
}

TEST_CASE("axioms pass exhaustively on small finite groups") {
  for (const auto& P : {GroupPresentation::cyclic(3),
                        GroupPresentation::cyclic(6),
                        GroupPresentation::dihedral(3)}) {
    const auto report = verify_groupoid_axioms(P, groupoid_sample(P, 3));
    CHECK(report.all_passed());
  }
}

TEST_CASE("axioms pass on sampled infinite groups") {
  for (const auto& P : {GroupPresentation::free_group(2),
                        GroupPresentation::infinite_dihedral()}) {
    const auto report = verify_groupoid_axioms(P, groupoid_sample(P, 3));
    CHECK(report.all_passed());
  }
}

TEST_CASE("units space is exactly the unit-arrow slice") {
  auto P = GroupPresentation::dihedral(3);
  const auto report = verify_groupoid_axioms(P, groupoid_sample(P, 3));
  for (const auto& c : report.checks) {
    if (c.name == "units_space") {
      CHECK(c.passed);
      CHECK(c.samples == 36);
    }
  }
}

TEST_CASE("corrupted composition is caught on a non-abelian group") {
  auto P = GroupPresentation::dihedral(3);
  GroupoidOps bad = GroupoidOps::standard();
  // arrows multiplied on the wrong side
  bad.compose = [](const GroupoidElement& p, const GroupoidElement& q,
                   const GroupPresentation& pres) {
    if (!composable(p, q, pres)) {
      throw ComposabilityError("not composable");
    }
    return GroupoidElement{q.base, multiply(q.arrow, p.arrow, pres)};
  };
  const auto report = verify_groupoid_axioms(P, groupoid_sample(P, 3), bad);
  CHECK_FALSE(report.all_passed());
  bool assoc_or_identity = false;
  for (const auto& c : report.checks) {
    if (!c.passed && (c.name == "associativity" || c.name == "identity_left" ||
                      c.name == "identity_right")) {
      assoc_or_identity = true;
      CHECK_FALSE(c.witnesses.empty());
    }
  }
  CHECK(assoc_or_identity);
}
