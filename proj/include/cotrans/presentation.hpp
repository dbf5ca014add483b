#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cotrans/word.hpp"

namespace cotrans {

enum class Family {
  Cyclic,
  Dihedral,
  InfiniteDihedral,
  FreeGroup,
  Integers,
  FreeProduct,
};

// A finitely presented group from one of the supported families, each of
// which has a canonical normal form.
//
// Convention used throughout the library: the product u*v concatenates u to
// the left of v, and in any action context v acts first. multiply(u, v)
// returns the normal form of uv.
class GroupPresentation {
 public:
  static GroupPresentation cyclic(int n, const std::string& gen = "a");
  // Dihedral group of order 2n with presentation <r,s | r^n = s^2 = (sr)^2 = e>.
  static GroupPresentation dihedral(int n, const std::string& r = "r",
                                    const std::string& s = "s");
  static GroupPresentation infinite_dihedral(const std::string& a = "a",
                                             const std::string& b = "b");
  static GroupPresentation free_group(int rank,
                                      std::vector<std::string> gens = {});
  static GroupPresentation integers(const std::string& gen = "a");
  static GroupPresentation free_product(GroupPresentation left,
                                        GroupPresentation right);

  Family family() const { return family_; }
  // Cyclic: group order. Dihedral: half order (group order is 2n).
  int parameter() const { return n_; }
  const std::vector<std::string>& generators() const { return generators_; }
  int generator_index(const std::string& name) const;  // -1 when absent

  // Relators, as positive words; empty for the free families.
  std::vector<Word> relators() const;

  bool is_finite() const;
  std::size_t order() const;              // finite families only
  std::vector<Word> elements() const;     // finite families only, normal forms

  const GroupPresentation& left_factor() const;
  const GroupPresentation& right_factor() const;

  bool operator==(const GroupPresentation& other) const;

 private:
  GroupPresentation() = default;

  Family family_ = Family::Cyclic;
  int n_ = 1;
  std::vector<std::string> generators_;
  std::shared_ptr<const GroupPresentation> left_, right_;
};

// Canonical representative of w in P. Idempotent; two words are equal in the
// group iff their normal forms are identical.
Word normal_form(const Word& w, const GroupPresentation& P);

// Normal form of the concatenation uv.
Word multiply(const Word& u, const Word& v, const GroupPresentation& P);

Word invert_word(const Word& w, const GroupPresentation& P);

// All distinct normal forms of words of letter-length <= radius, in shortlex
// order. For finite groups this saturates at the whole group.
std::vector<Word> ball(const GroupPresentation& P, int radius);

enum class Factor { Left, Right };

// Image of w under the canonical projection of a free product onto one of
// its factors (letters of the other factor map to e). The result is a word
// over the factor presentation.
Word project_free_factor(const Word& w, Factor which,
                         const GroupPresentation& P);

// Parsing and rendering. Words are written as juxtaposed generator names
// with optional integer exponents, e.g. "a^2", "sr^2", "a b^-1". "e" and "1"
// denote the unit.
Word parse_word(const std::string& text, const GroupPresentation& P);
std::string to_string(const Word& w, const GroupPresentation& P);

// Helpers for the Integers family: a^k <-> k.
Word word_from_int(long k);
long word_to_int(const Word& w);

}  // namespace cotrans
