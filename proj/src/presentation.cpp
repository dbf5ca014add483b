#include "cotrans/presentation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cotrans/error.hpp"

namespace cotrans {

namespace {

void require_distinct(const std::vector<std::string>& gens) {
  std::set<std::string> seen(gens.begin(), gens.end());
  if (seen.size() != gens.size() || seen.count("")) {
    throw ConfigError("generator symbols must be distinct and nonempty");
  }
}

void validate_word(const Word& w, const GroupPresentation& P) {
  const int n = static_cast<int>(P.generators().size());
  for (const auto& l : w.letters) {
    if (l.gen < 0 || l.gen >= n) {
      throw MalformedWordError("word uses generator index " +
                               std::to_string(l.gen) + " outside presentation");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw MalformedWordError("letter sign must be +1 or -1");
    }
  }
}

Word power_word(int gen, long k) {
  Word w;
  const int sign = k >= 0 ? 1 : -1;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) w.letters.push_back({gen, sign});
  return w;
}

long mod_pos(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

// Free reduction: cancel adjacent x x^-1 pairs.
Word reduce_free(const Word& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters) {
    if (!stack.empty() && stack.back().gen == l.gen &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word{std::move(stack)};
}

// Involution reduction: every generator squares to e, signs are ignored.
Word reduce_involutions(const Word& w) {
  std::vector<Letter> stack;
  for (auto l : w.letters) {
    l.sign = 1;
    if (!stack.empty() && stack.back().gen == l.gen) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word{std::move(stack)};
}

Word dihedral_normal_form(const Word& w, long n) {
  // Fold the word into (eps, k) with the element equal to s^eps r^k,
  // using rs = s r^-1.
  int eps = 0;
  long k = 0;
  for (const auto& l : w.letters) {
    if (l.gen == 0) {
      k = mod_pos(k + l.sign, n);
    } else {
      eps ^= 1;
      k = mod_pos(-k, n);
    }
  }
  Word out;
  if (eps) out.letters.push_back({1, 1});
  for (long i = 0; i < k; ++i) out.letters.push_back({0, 1});
  return out;
}

struct Syllable {
  Factor side;
  Word local;  // normal form in the factor, nonempty
};

Word free_product_normal_form(const Word& w, const GroupPresentation& P) {
  const auto& L = P.left_factor();
  const auto& R = P.right_factor();
  const int nl = static_cast<int>(L.generators().size());
  std::vector<Syllable> stack;
  for (const auto& l : w.letters) {
    const Factor side = l.gen < nl ? Factor::Left : Factor::Right;
    const auto& fac = side == Factor::Left ? L : R;
    const Letter local{side == Factor::Left ? l.gen : l.gen - nl, l.sign};
    if (!stack.empty() && stack.back().side == side) {
      stack.back().local =
          multiply(stack.back().local, Word{{local}}, fac);
      if (stack.back().local.empty()) stack.pop_back();
    } else {
      Word nf = normal_form(Word{{local}}, fac);
      if (!nf.empty()) stack.push_back({side, std::move(nf)});
    }
  }
  Word out;
  for (const auto& syl : stack) {
    const int offset = syl.side == Factor::Left ? 0 : nl;
    for (const auto& l : syl.local.letters) {
      out.letters.push_back({l.gen + offset, l.sign});
    }
  }
  return out;
}

}  // namespace

GroupPresentation GroupPresentation::cyclic(int n, const std::string& gen) {
  if (n < 1) throw ConfigError("cyclic group order must be >= 1");
  GroupPresentation p;
  p.family_ = Family::Cyclic;
  p.n_ = n;
  p.generators_ = {gen};
  require_distinct(p.generators_);
  return p;
}

GroupPresentation GroupPresentation::dihedral(int n, const std::string& r,
                                              const std::string& s) {
  if (n < 1) throw ConfigError("dihedral parameter must be >= 1");
  GroupPresentation p;
  p.family_ = Family::Dihedral;
  p.n_ = n;
  p.generators_ = {r, s};
  require_distinct(p.generators_);
  return p;
}

GroupPresentation GroupPresentation::infinite_dihedral(const std::string& a,
                                                       const std::string& b) {
  GroupPresentation p;
  p.family_ = Family::InfiniteDihedral;
  p.n_ = 0;
  p.generators_ = {a, b};
  require_distinct(p.generators_);
  return p;
}

GroupPresentation GroupPresentation::free_group(int rank,
                                                std::vector<std::string> gens) {
  if (rank < 1) throw ConfigError("free group rank must be >= 1");
  GroupPresentation p;
  p.family_ = Family::FreeGroup;
  p.n_ = rank;
  if (gens.empty()) {
    const char* names = "abcdfghijklm";  // 'e' is reserved for the unit
    for (int i = 0; i < rank; ++i) {
      if (i < 12) {
        gens.push_back(std::string(1, names[i]));
      } else {
        gens.push_back("x" + std::to_string(i));
      }
    }
  }
  if (static_cast<int>(gens.size()) != rank) {
    throw ConfigError("free group generator list must match rank");
  }
  p.generators_ = std::move(gens);
  require_distinct(p.generators_);
  return p;
}

GroupPresentation GroupPresentation::integers(const std::string& gen) {
  GroupPresentation p;
  p.family_ = Family::Integers;
  p.n_ = 1;
  p.generators_ = {gen};
  require_distinct(p.generators_);
  return p;
}

GroupPresentation GroupPresentation::free_product(GroupPresentation left,
                                                  GroupPresentation right) {
  GroupPresentation p;
  p.family_ = Family::FreeProduct;
  p.n_ = 0;
  p.generators_ = left.generators();
  p.generators_.insert(p.generators_.end(), right.generators().begin(),
                       right.generators().end());
  require_distinct(p.generators_);  // also enforces factor disjointness
  p.left_ = std::make_shared<GroupPresentation>(std::move(left));
  p.right_ = std::make_shared<GroupPresentation>(std::move(right));
  return p;
}

int GroupPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Word> GroupPresentation::relators() const {
  switch (family_) {
    case Family::Cyclic:
      return {power_word(0, n_)};
    case Family::Dihedral: {
      Word rn = power_word(0, n_);
      Word s2 = power_word(1, 2);
      Word srsr{{{1, 1}, {0, 1}, {1, 1}, {0, 1}}};
      return {rn, s2, srsr};
    }
    case Family::InfiniteDihedral:
      return {power_word(0, 2), power_word(1, 2)};
    case Family::FreeGroup:
    case Family::Integers:
      return {};
    case Family::FreeProduct: {
      std::vector<Word> rel = left_->relators();
      const int nl = static_cast<int>(left_->generators().size());
      for (const auto& q : right_->relators()) {
        Word shifted;
        for (const auto& l : q.letters) {
          shifted.letters.push_back({l.gen + nl, l.sign});
        }
        rel.push_back(shifted);
      }
      return rel;
    }
  }
  return {};
}

bool GroupPresentation::is_finite() const {
  switch (family_) {
    case Family::Cyclic:
    case Family::Dihedral:
      return true;
    case Family::FreeProduct:
      // G*H is finite only when one factor is trivial.
      return (left_->is_finite() && left_->order() == 1 &&
              right_->is_finite()) ||
             (right_->is_finite() && right_->order() == 1 &&
              left_->is_finite());
    default:
      return false;
  }
}

std::size_t GroupPresentation::order() const {
  if (!is_finite()) throw UnsupportedOperationError("group is infinite");
  switch (family_) {
    case Family::Cyclic:
      return static_cast<std::size_t>(n_);
    case Family::Dihedral:
      return static_cast<std::size_t>(2 * n_);
    case Family::FreeProduct:
      return left_->order() * right_->order();
    default:
      return 0;
  }
}

std::vector<Word> GroupPresentation::elements() const {
  if (!is_finite()) throw UnsupportedOperationError("group is infinite");
  std::vector<Word> out;
  switch (family_) {
    case Family::Cyclic:
      for (int k = 0; k < n_; ++k) out.push_back(power_word(0, k));
      break;
    case Family::Dihedral:
      for (int eps = 0; eps <= 1; ++eps) {
        for (int k = 0; k < n_; ++k) {
          Word w;
          if (eps) w.letters.push_back({1, 1});
          for (int i = 0; i < k; ++i) w.letters.push_back({0, 1});
          out.push_back(w);
        }
      }
      break;
    default:
      // Degenerate free products with a trivial factor.
      for (const auto& w : ball(*this, 2 * static_cast<int>(order()))) {
        out.push_back(w);
      }
      break;
  }
  return out;
}

const GroupPresentation& GroupPresentation::left_factor() const {
  if (family_ != Family::FreeProduct) {
    throw UnsupportedOperationError("not a free product");
  }
  return *left_;
}

const GroupPresentation& GroupPresentation::right_factor() const {
  if (family_ != Family::FreeProduct) {
    throw UnsupportedOperationError("not a free product");
  }
  return *right_;
}

bool GroupPresentation::operator==(const GroupPresentation& other) const {
  if (family_ != other.family_ || n_ != other.n_ ||
      generators_ != other.generators_) {
    return false;
  }
  if (family_ == Family::FreeProduct) {
    return *left_ == *other.left_ && *right_ == *other.right_;
  }
  return true;
}

Word normal_form(const Word& w, const GroupPresentation& P) {
  validate_word(w, P);
  switch (P.family()) {
    case Family::Cyclic: {
      long k = 0;
      for (const auto& l : w.letters) k += l.sign;
      return power_word(0, mod_pos(k, P.parameter()));
    }
    case Family::Integers: {
      long k = 0;
      for (const auto& l : w.letters) k += l.sign;
      return power_word(0, k);
    }
    case Family::FreeGroup:
      return reduce_free(w);
    case Family::InfiniteDihedral:
      return reduce_involutions(w);
    case Family::Dihedral:
      return dihedral_normal_form(w, P.parameter());
    case Family::FreeProduct:
      return free_product_normal_form(w, P);
  }
  throw UnsupportedOperationError("unknown family");
}

Word multiply(const Word& u, const Word& v, const GroupPresentation& P) {
  return normal_form(concat(u, v), P);
}

Word invert_word(const Word& w, const GroupPresentation& P) {
  validate_word(w, P);
  Word rev;
  rev.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    rev.letters.push_back({it->gen, -it->sign});
  }
  return normal_form(rev, P);
}

std::vector<Word> ball(const GroupPresentation& P, int radius) {
  if (radius < 0) throw ConfigError("ball radius must be >= 0");
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> frontier{unit_word()};
  seen.insert(unit_word());
  const int ngen = static_cast<int>(P.generators().size());
  for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int g = 0; g < ngen; ++g) {
        for (int sign : {1, -1}) {
          Word cand = multiply(w, single_letter(g, sign), P);
          if (seen.insert(cand).second) next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

Word project_free_factor(const Word& w, Factor which,
                         const GroupPresentation& P) {
  if (P.family() != Family::FreeProduct) {
    throw UnsupportedOperationError(
        "factor projection requires a free product presentation");
  }
  validate_word(w, P);
  const int nl = static_cast<int>(P.left_factor().generators().size());
  Word kept;
  for (const auto& l : w.letters) {
    if (which == Factor::Left && l.gen < nl) {
      kept.letters.push_back(l);
    } else if (which == Factor::Right && l.gen >= nl) {
      kept.letters.push_back({l.gen - nl, l.sign});
    }
  }
  const auto& fac =
      which == Factor::Left ? P.left_factor() : P.right_factor();
  return normal_form(kept, fac);
}

Word parse_word(const std::string& text, const GroupPresentation& P) {
  // Strip whitespace and separators first.
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '*' && c != '.') s.push_back(c);
  }
  if (s.empty() || s == "e" || s == "1") return unit_word();

  const auto& gens = P.generators();
  Word out;
  std::size_t i = 0;
  while (i < s.size()) {
    // Longest generator name starting at i.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto& name = gens[g];
      if (name.size() > best_len && s.compare(i, name.size(), name) == 0) {
        best = static_cast<int>(g);
        best_len = name.size();
      }
    }
    if (best < 0) {
      throw MalformedWordError("unknown generator symbol at '" + s.substr(i) +
                               "'");
    }
    i += best_len;
    long exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
      std::size_t k = j;
      while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
      if (k == j) throw MalformedWordError("missing exponent after '^'");
      exp = std::stol(s.substr(i, k - i));
      i = k;
    }
    const int sign = exp >= 0 ? 1 : -1;
    for (long t = 0; t < (exp >= 0 ? exp : -exp); ++t) {
      out.letters.push_back({best, sign});
    }
  }
  return out;
}

std::string to_string(const Word& w, const GroupPresentation& P) {
  if (w.empty()) return "e";
  const auto& gens = P.generators();
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    const long run = static_cast<long>(j - i);
    const long exp = w.letters[i].sign * run;
    if (!out.empty()) out.push_back(' ');
    out += gens[static_cast<std::size_t>(w.letters[i].gen)];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

Word word_from_int(long k) { return power_word(0, k); }

long word_to_int(const Word& w) {
  long k = 0;
  for (const auto& l : w.letters) {
    if (l.gen != 0) throw MalformedWordError("not a one-generator word");
    k += l.sign;
  }
  return k;
}

}  // namespace cotrans
