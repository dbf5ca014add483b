#include <doctest.h>

#include <set>

#include "cotrans/error.hpp"
#include "cotrans/presentation.hpp"
#include "cotrans/rng.hpp"
#include "oracles.hpp"

using namespace cotrans;

namespace {

Word w(const std::string& text, const GroupPresentation& P) {
  return parse_word(text, P);
}

}  // namespace

TEST_CASE("cyclic normal forms") {
  auto P = GroupPresentation::cyclic(3);
  CHECK(normal_form(w("a^4", P), P) == w("a", P));
  CHECK(normal_form(w("a^-1", P), P) == w("a^2", P));
  CHECK(normal_form(w("a^3", P), P) == w("e", P));
  CHECK(multiply(w("a", P), w("a", P), P) == w("a^2", P));
  CHECK(invert_word(w("a", P), P) == w("a^2", P));
  CHECK(invert_word(w("e", P), P) == w("e", P));

  oracles::CyclicPerm oracle{3};
  for (const auto& u : ball(P, 4)) {
    CHECK(oracle.equal(u, normal_form(u, P)));
  }
}

TEST_CASE("dihedral normal forms against the permutation oracle") {
  auto P = GroupPresentation::dihedral(3);
  oracles::DihedralPerm oracle{3};

  CHECK(normal_form(w("r s", P), P) == w("s r^2", P));
  CHECK(oracle.equal(w("r s", P), w("s r^2", P)));
  CHECK(multiply(w("s", P), w("r", P), P) == w("s r", P));
  CHECK(invert_word(w("s r", P), P) == w("s r", P));
  CHECK(oracle.equal(multiply(w("s r", P), w("s r", P), P), w("e", P)));

  // normal forms agree with the faithful representation on a big sample
  for (const auto& u : ball(P, 4)) {
    for (const auto& v : ball(P, 2)) {
      const Word prod = multiply(u, v, P);
      CHECK(oracle.image_of(prod) == oracle.image_of(concat(u, v)));
    }
  }

  // distinct normal forms have distinct oracle images
  std::set<std::vector<int>> images;
  for (const auto& u : P.elements()) images.insert(oracle.image_of(u));
  CHECK(images.size() == 6);
}

TEST_CASE("infinite dihedral normal forms") {
  auto P = GroupPresentation::infinite_dihedral();
  CHECK(normal_form(w("a a b", P), P) == w("b", P));
  CHECK(normal_form(w("a b a b", P), P).length() == 4);
  CHECK(invert_word(w("a b", P), P) == w("b a", P));

  for (const auto& u : ball(P, 5)) {
    CHECK(oracles::InfiniteDihedralAffine::equal(u, normal_form(u, P)));
    // a word equals e iff its affine image is the identity map
    CHECK((normal_form(u, P).empty()) ==
          (oracles::InfiniteDihedralAffine::image_of(u) ==
           std::make_pair(1l, 0l)));
  }
}

TEST_CASE("free group reduction matches the rescanning oracle") {
  auto P = GroupPresentation::free_group(2);
  CHECK(multiply(w("a b", P), w("b a", P), P) == w("a b^2 a", P));
  CHECK(multiply(w("a b", P), w("b^-1 a^-1", P), P) == w("e", P));

  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Word u;
    const std::size_t len = rng.index(12);
    for (std::size_t i = 0; i < len; ++i) {
      u.letters.push_back({static_cast<int>(rng.index(2)),
                           rng.index(2) ? 1 : -1});
    }
    CHECK(normal_form(u, P) == oracles::free_reduce_rescan(u));
  }
}

TEST_CASE("free product normal forms in C2*C3 against PSL(2,Z)") {
  auto P = GroupPresentation::free_product(GroupPresentation::cyclic(2, "a"),
                                           GroupPresentation::cyclic(3, "b"));
  CHECK(normal_form(w("a a b", P), P) == w("b", P));
  CHECK(normal_form(w("b^3 a", P), P) == w("a", P));
  CHECK(normal_form(w("b^-1", P), P) == w("b^2", P));

  for (const auto& u : ball(P, 4)) {
    CHECK(oracles::Psl2z::equal(u, normal_form(u, P)));
    CHECK((normal_form(u, P).empty()) ==
          (oracles::Psl2z::image_of(u) ==
           oracles::Psl2z::Mat{1, 0, 0, 1}));
  }

  // two words are equal in the group iff normal forms coincide
  const auto sample = ball(P, 3);
  for (const auto& u : sample) {
    for (const auto& v : sample) {
      CHECK((normal_form(u, P) == normal_form(v, P)) ==
            oracles::Psl2z::equal(u, v));
    }
  }
}

TEST_CASE("normal form is idempotent across families") {
  std::vector<GroupPresentation> groups = {
      GroupPresentation::cyclic(5),
      GroupPresentation::dihedral(4),
      GroupPresentation::infinite_dihedral(),
      GroupPresentation::free_group(2),
      GroupPresentation::integers(),
      GroupPresentation::free_product(GroupPresentation::cyclic(2, "x"),
                                      GroupPresentation::cyclic(3, "y")),
  };
  for (const auto& P : groups) {
    for (const auto& u : ball(P, 6)) {
      CHECK(normal_form(u, P) == normal_form(normal_form(u, P), P));
    }
  }
}

TEST_CASE("multiplication is associative on ball triples") {
  std::vector<GroupPresentation> groups = {
      GroupPresentation::dihedral(3),
      GroupPresentation::infinite_dihedral(),
      GroupPresentation::free_product(GroupPresentation::cyclic(2, "a"),
                                      GroupPresentation::cyclic(3, "b")),
  };
  for (const auto& P : groups) {
    const auto words = ball(P, 3);
    for (const auto& u : words) {
      for (const auto& v : words) {
        const Word uv = multiply(u, v, P);
        for (const auto& t : words) {
          CHECK(multiply(uv, t, P) == multiply(u, multiply(v, t, P), P));
        }
      }
    }
  }
}

TEST_CASE("inversion is an involution and two-sided") {
  for (const auto& P : {GroupPresentation::dihedral(3),
                        GroupPresentation::free_group(2),
                        GroupPresentation::infinite_dihedral()}) {
    for (const auto& u : ball(P, 4)) {
      const Word ui = invert_word(u, P);
      CHECK(invert_word(ui, P) == normal_form(u, P));
      CHECK(multiply(u, ui, P) == Word{});
      CHECK(multiply(ui, u, P) == Word{});
    }
  }
}

TEST_CASE("balls") {
  CHECK(ball(GroupPresentation::cyclic(3), 5).size() == 3);
  CHECK(ball(GroupPresentation::free_group(1), 2).size() == 5);

  auto D = GroupPresentation::infinite_dihedral();
  const auto b2 = ball(D, 2);
  CHECK(b2.size() == 5);
  std::set<Word> expected = {w("e", D), w("a", D), w("b", D), w("a b", D),
                             w("b a", D)};
  CHECK(std::set<Word>(b2.begin(), b2.end()) == expected);

  // finite families saturate at the group order
  CHECK(ball(GroupPresentation::cyclic(6), 12).size() == 6);
  CHECK(ball(GroupPresentation::dihedral(3), 12).size() == 6);
  CHECK(ball(GroupPresentation::dihedral(5), 12).size() == 10);
}

TEST_CASE("free factor projections") {
  auto P = GroupPresentation::free_product(GroupPresentation::cyclic(2, "a"),
                                           GroupPresentation::cyclic(3, "b"));
  auto C2 = GroupPresentation::cyclic(2, "a");
  auto C3 = GroupPresentation::cyclic(3, "b");

  CHECK(project_free_factor(Word{}, Factor::Left, P) == Word{});
  CHECK(project_free_factor(w("a b^2 a", P), Factor::Left, P) ==
        parse_word("e", C2));
  CHECK(project_free_factor(w("a b^2 a", P), Factor::Right, P) ==
        parse_word("b^2", C3));

  // morphism property and fixing of own generators
  const auto sample = ball(P, 3);
  for (const auto& u : sample) {
    for (const auto& v : sample) {
      CHECK(project_free_factor(multiply(u, v, P), Factor::Left, P) ==
            multiply(project_free_factor(u, Factor::Left, P),
                     project_free_factor(v, Factor::Left, P), C2));
      CHECK(project_free_factor(multiply(u, v, P), Factor::Right, P) ==
            multiply(project_free_factor(u, Factor::Right, P),
                     project_free_factor(v, Factor::Right, P), C3));
    }
  }
  CHECK(project_free_factor(w("a", P), Factor::Left, P) ==
        parse_word("a", C2));
  CHECK(project_free_factor(w("b", P), Factor::Right, P) ==
        parse_word("b", C3));

  CHECK_THROWS_AS(
      project_free_factor(Word{}, Factor::Left, GroupPresentation::cyclic(3)),
      UnsupportedOperationError);
}

TEST_CASE("malformed words are rejected") {
  auto P = GroupPresentation::cyclic(3);
  Word bad;
  bad.letters.push_back({5, 1});
  CHECK_THROWS_AS(normal_form(bad, P), MalformedWordError);
  CHECK_THROWS_AS(parse_word("q", P), MalformedWordError);
}

TEST_CASE("word rendering round trips") {
  auto P = GroupPresentation::dihedral(3);
  for (const auto& u : P.elements()) {
    CHECK(parse_word(to_string(u, P), P) == u);
  }
  auto F = GroupPresentation::free_group(2);
  CHECK(to_string(w("a b^-2 a", F), F) == "a b^-2 a");
}
