#include "cotrans/gallery.hpp"

#include <cmath>

#include "cotrans/error.hpp"

namespace cotrans {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_full_turns(double sum, const char* what) {
  if (std::abs(std::remainder(sum, 2.0 * kPi)) > 1e-9) {
    throw ConfigError(std::string(what) +
                      " must sum to an integer multiple of 2*pi");
  }
}

double number(const nlohmann::json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<double>();
}

int integer(const nlohmann::json& params, const char* key, int fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<int>();
}

Cotranslation c3_affine() {
  auto P = GroupPresentation::cyclic(3);
  const Space X = Space::euclidean(1);
  auto mat = [](double a) {
    Eigen::MatrixXd m(1, 1);
    m(0, 0) = a;
    return m;
  };
  auto vec = [](double b) {
    Eigen::VectorXd v(1);
    v(0) = b;
    return v;
  };
  GeneratorMaps::Table table;
  table.emplace(parse_word("e", P), Transform::affine(X, mat(1), vec(1)));
  table.emplace(parse_word("a", P), Transform::affine(X, mat(2), vec(0)));
  table.emplace(parse_word("a^2", P),
                Transform::affine(X, mat(0.5), vec(-1)));
  return Cotranslation(
      GeneratorMaps::from_tables(std::move(P), X, {std::move(table)}));
}

Cotranslation cyclic_multirotational(const nlohmann::json& params) {
  std::vector<std::vector<double>> sets{{kPi, kPi / 2, kPi / 2},
                                        {2 * kPi / 3, 4 * kPi / 3}};
  if (params.contains("angle_sets")) {
    sets = params.at("angle_sets").get<std::vector<std::vector<double>>>();
  }
  int n = 0;
  for (const auto& set : sets) {
    if (set.empty()) throw ConfigError("angle sets must be nonempty");
    double sum = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
      sum += set[i];
      for (std::size_t j = 0; j < i; ++j) {
        if (set[i] == set[j]) {
          throw ConfigError("angles within one set must be distinct");
        }
      }
    }
    require_full_turns(sum, "each angle set");
    n += static_cast<int>(set.size());
  }
  if (params.contains("n") && integer(params, "n", n) != n) {
    throw ConfigError("n must equal the total number of angles");
  }
  const int k = static_cast<int>(sets.size());
  const int dim = integer(params, "dim", 2 * k);
  if (dim < 2 * k) throw ConfigError("dimension must cover all planes");
  const Space X = Space::euclidean(dim);

  // Planes are pairwise disjoint coordinate pairs (2i, 2i+1), so all the
  // rotations commute and every cyclic relator product is a full turn per
  // plane.
  auto P = GroupPresentation::cyclic(n);
  GeneratorMaps::Table table;
  int t = 0;
  for (int i = 0; i < k; ++i) {
    for (double r : sets[static_cast<std::size_t>(i)]) {
      table.emplace(word_from_int(t),
                    Transform::rotation(X, 2 * i, 2 * i + 1, r));
      ++t;
    }
  }
  return Cotranslation(
      GeneratorMaps::from_tables(std::move(P), X, {std::move(table)}));
}

Cotranslation cyclic_disjoint(const nlohmann::json& params) {
  std::vector<std::vector<double>> copies{{kPi / 2, kPi / 2, kPi},
                                          {2 * kPi / 3, 2 * kPi / 3,
                                           2 * kPi / 3}};
  if (params.contains("copy_angles")) {
    copies = params.at("copy_angles").get<std::vector<std::vector<double>>>();
  }
  const int n = static_cast<int>(copies.size());
  if (n < 1) throw ConfigError("need at least one copy");
  for (const auto& triple : copies) {
    if (triple.size() != 3) throw ConfigError("each copy takes three angles");
    require_full_turns(triple[0] + triple[1] + triple[2], "each copy's angles");
  }
  const Space X = Space::labeled_euclidean(2, std::max(32, n + 1));
  auto P = GroupPresentation::cyclic(3 * n);
  GeneratorMaps::Table table;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) {
      table.emplace(
          word_from_int(3 * i + j),
          Transform::label_gated(
              X, LabelGate::equals(i),
              Transform::rotation(X, 0, 1,
                                  copies[static_cast<std::size_t>(i)]
                                        [static_cast<std::size_t>(j)])));
    }
  }
  return Cotranslation(
      GeneratorMaps::from_tables(std::move(P), X, {std::move(table)}));
}

Cotranslation d6_labeled_copies(const nlohmann::json& params) {
  const double alpha = number(params, "alpha", kPi / 2);
  const double beta = number(params, "beta", kPi / 3);
  const double gamma = number(params, "gamma", 2 * kPi - kPi / 2 - kPi / 3);
  require_full_turns(alpha + beta + gamma, "alpha+beta+gamma");
  const Space X = Space::labeled_euclidean(2);
  auto P = GroupPresentation::dihedral(3);

  auto even_rot = [&X](double z) {
    return Transform::label_gated(X, LabelGate::even(),
                                  Transform::rotation(X, 0, 1, z));
  };
  auto odd_rot = [&X](double z) {
    return Transform::label_gated(X, LabelGate::odd(),
                                  Transform::rotation(X, 0, 1, z));
  };
  const double angle[3] = {alpha, beta, gamma};

  GeneratorMaps::Table r_table;
  GeneratorMaps::Table s_table;
  const Transform shift_down = Transform::copy_shift(X, -1);
  const Transform shift_up = Transform::copy_shift(X, +1);
  for (int i = 0; i < 3; ++i) {
    const Word ri = parse_word(i == 0 ? "e" : "r^" + std::to_string(i), P);
    const Word sri = parse_word(i == 0 ? "s" : "s r^" + std::to_string(i), P);
    r_table.emplace(ri, even_rot(angle[i]));
    // Relator-correct pairing: the odd-copy rotation at s r^j undoes the
    // even-copy rotation at r^{j-1}.
    r_table.emplace(sri, odd_rot(-angle[(i + 2) % 3]));
    s_table.emplace(ri, shift_down);
    s_table.emplace(sri, shift_up);
  }
  return Cotranslation(GeneratorMaps::from_tables(
      std::move(P), X, {std::move(r_table), std::move(s_table)}));
}

// Shared rule shape for the two-involution-generator constructions:
// A(w) = seq(|u|) when w = (own letter) u, else seq(|w|)^-1.
GeneratorMaps::Rule involution_pair_rule(
    int own_gen, std::function<Transform(std::size_t)> seq) {
  return [own_gen, seq](const Word& w) {
    if (!w.empty() && w.letters.front().gen == own_gen) {
      return seq(w.length() - 1);
    }
    return invert(seq(w.length()));
  };
}

Cotranslation dinf_translation_rotation(const nlohmann::json& params) {
  const Space X = Space::euclidean(2);
  Eigen::VectorXd shift(2);
  shift << number(params, "shift_x", 1.0), number(params, "shift_y", 0.0);
  if (shift.norm() == 0.0) throw ConfigError("translation must be nonzero");
  auto P = GroupPresentation::infinite_dihedral();

  auto g = [X, shift](std::size_t n) {
    return Transform::affine(X, Eigen::MatrixXd::Identity(2, 2),
                             static_cast<double>(n) * shift);
  };
  auto h = [X](std::size_t n) {
    return Transform::rotation(X, 0, 1,
                               kPi / std::pow(2.0, static_cast<double>(n) + 1));
  };
  return Cotranslation(GeneratorMaps(
      std::move(P), X,
      {involution_pair_rule(0, g), involution_pair_rule(1, h)}));
}

Cotranslation dinf_symmetry_rotation(const nlohmann::json& params) {
  std::vector<double> lines{0.0, kPi / 6, kPi / 3};
  std::vector<double> zetas{kPi, kPi / 2, kPi / 3};
  if (params.contains("line_angles")) {
    lines = params.at("line_angles").get<std::vector<double>>();
  }
  if (params.contains("zetas")) {
    zetas = params.at("zetas").get<std::vector<double>>();
  }
  if (lines.empty() || zetas.empty()) {
    throw ConfigError("need at least one line and one rotation angle");
  }
  for (double z : zetas) {
    if (!(z > 0.0 && z <= kPi)) {
      throw ConfigError("rotation angles must satisfy 0 < zeta <= pi");
    }
  }
  const Space X = Space::euclidean(2);
  auto P = GroupPresentation::infinite_dihedral();

  auto g = [X, lines](std::size_t n) {
    const double phi = lines[n % lines.size()];
    Eigen::MatrixXd m(2, 2);
    m << std::cos(2 * phi), std::sin(2 * phi), std::sin(2 * phi),
        -std::cos(2 * phi);
    return Transform::affine(X, m, Eigen::VectorXd::Zero(2));
  };
  auto h = [X, zetas](std::size_t n) {
    return Transform::rotation(X, 0, 1, zetas[n % zetas.size()]);
  };
  return Cotranslation(GeneratorMaps(
      std::move(P), X,
      {involution_pair_rule(0, g), involution_pair_rule(1, h)}));
}

Cotranslation c2c3_prodiscrete(const nlohmann::json& params) {
  const int length = integer(params, "length", 16);
  const Space X = Space::sequence(3, length);
  auto P = GroupPresentation::free_product(GroupPresentation::cyclic(2, "a"),
                                           GroupPresentation::cyclic(3, "b"));

  // rho_n swaps positions 0 and n; it is its own inverse.
  auto a_rule = [X](const Word& w) {
    const std::size_t n =
        (!w.empty() && w.letters.front().gen == 0) ? w.length() - 1
                                                   : w.length();
    return Transform::position_swap(X, static_cast<int>(n));
  };
  // Sigma_j permutes the first symbol; j is the leading power of b.
  const std::vector<std::vector<int>> sigma = {
      {1, 0, 2},  // (0 1)
      {0, 2, 1},  // (1 2)
      {1, 2, 0},  // (0 1 2)
  };
  auto b_rule = [X, sigma](const Word& w) {
    std::size_t j = 0;
    while (j < w.length() && w.letters[j].gen == 1) ++j;
    return Transform::symbol_perm(X, sigma[j % 3], 0);
  };
  return Cotranslation(GeneratorMaps(std::move(P), X, {a_rule, b_rule}));
}

Cotranslation f2_binary_tree(const nlohmann::json& params) {
  const int depth = integer(params, "depth", 6);
  const Space X = Space::tree(2, depth);
  auto P = GroupPresentation::free_group(2);

  const Transform sigma = Transform::symbol_perm(X, {1, 0}, 0);
  // phi maps a^+- to 1 and b^+- to 0.
  auto rule = [X, sigma](const Word& w) {
    std::vector<int> anchor;
    anchor.reserve(w.length());
    for (const auto& l : w.letters) anchor.push_back(l.gen == 0 ? 1 : 0);
    return Transform::tree_portrait(X, std::move(anchor), sigma);
  };
  return Cotranslation(GeneratorMaps(std::move(P), X, {rule, rule}));
}

Cotranslation fn_tree(const nlohmann::json& params) {
  const int rank = integer(params, "rank", 2);
  const int depth = integer(params, "depth", 6);
  if (rank < 1) throw ConfigError("rank must be >= 1");
  const Space X = Space::tree(2 * rank, depth);
  auto P = GroupPresentation::free_group(rank);

  std::vector<std::vector<int>> perms;
  if (params.contains("perms")) {
    perms = params.at("perms").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(perms.size()) != rank) {
      throw ConfigError("need one alphabet permutation per generator");
    }
  } else {
    // Default: generator i swaps the edge pair {2i, 2i+1}.
    for (int i = 0; i < rank; ++i) {
      std::vector<int> p(static_cast<std::size_t>(2 * rank));
      for (int j = 0; j < 2 * rank; ++j) p[static_cast<std::size_t>(j)] = j;
      std::swap(p[static_cast<std::size_t>(2 * i)],
                p[static_cast<std::size_t>(2 * i + 1)]);
      perms.push_back(std::move(p));
    }
  }

  std::vector<GeneratorMaps::Rule> rules;
  for (int i = 0; i < rank; ++i) {
    const Transform sigma =
        Transform::symbol_perm(X, perms[static_cast<std::size_t>(i)], 0);
    rules.push_back([X, sigma](const Word& w) {
      // The base word in normal form is itself a vertex: letter (i, +)
      // is edge 2i, letter (i, -) is edge 2i+1.
      std::vector<int> anchor;
      anchor.reserve(w.length());
      for (const auto& l : w.letters) {
        anchor.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
      }
      return Transform::tree_portrait(X, std::move(anchor), sigma);
    });
  }
  return Cotranslation(GeneratorMaps(std::move(P), X, std::move(rules)));
}

}  // namespace

Cotranslation build_example(const std::string& name,
                            const nlohmann::json& params) {
  if (name == "c3_affine") return c3_affine();
  if (name == "cyclic_multirotational") return cyclic_multirotational(params);
  if (name == "cyclic_disjoint") return cyclic_disjoint(params);
  if (name == "d6_labeled_copies") return d6_labeled_copies(params);
  if (name == "dinf_translation_rotation") {
    return dinf_translation_rotation(params);
  }
  if (name == "dinf_symmetry_rotation") return dinf_symmetry_rotation(params);
  if (name == "c2c3_prodiscrete") return c2c3_prodiscrete(params);
  if (name == "f2_binary_tree") return f2_binary_tree(params);
  if (name == "fn_tree") return fn_tree(params);
  throw ConfigError("unknown example name: " + name);
}

std::vector<std::string> example_names() {
  return {"c3_affine",
          "cyclic_multirotational",
          "cyclic_disjoint",
          "d6_labeled_copies",
          "dinf_translation_rotation",
          "dinf_symmetry_rotation",
          "c2c3_prodiscrete",
          "f2_binary_tree",
          "fn_tree"};
}

}  // namespace cotrans
