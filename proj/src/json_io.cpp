#include "cotrans/json_io.hpp"

#include <cmath>

#include "cotrans/error.hpp"
#include "cotrans/gallery.hpp"
#include "cotrans/rng.hpp"

namespace cotrans {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw ConfigError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<double>>>();
  if (rows.empty()) throw ConfigError("empty matrix");
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw ConfigError("ragged matrix");
    }
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      m(static_cast<long>(i), static_cast<long>(k)) = rows[i][k];
    }
  }
  return m;
}

Eigen::VectorXd vector_from_json(const json& j) {
  const auto vals = j.get<std::vector<double>>();
  Eigen::VectorXd v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    v(static_cast<long>(i)) = vals[i];
  }
  return v;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GroupPresentation presentation_from_json(const nlohmann::json& j) {
  const std::string family = field(j, "family").get<std::string>();
  if (family == "cyclic") {
    return GroupPresentation::cyclic(field(j, "n").get<int>(),
                                     j.value("generator", std::string("a")));
  }
  if (family == "dihedral") {
    return GroupPresentation::dihedral(field(j, "n").get<int>());
  }
  if (family == "infinite_dihedral") {
    return GroupPresentation::infinite_dihedral();
  }
  if (family == "free") {
    std::vector<std::string> gens;
    if (j.contains("generators")) {
      gens = j.at("generators").get<std::vector<std::string>>();
    }
    return GroupPresentation::free_group(field(j, "rank").get<int>(), gens);
  }
  if (family == "integers") {
    return GroupPresentation::integers(j.value("generator", std::string("a")));
  }
  if (family == "free_product") {
    return GroupPresentation::free_product(
        presentation_from_json(field(j, "left")),
        presentation_from_json(field(j, "right")));
  }
  throw ConfigError("unknown family: " + family);
}

Space space_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "euclidean") return Space::euclidean(field(j, "dim").get<int>());
  if (kind == "labeled_euclidean") {
    return Space::labeled_euclidean(field(j, "dim").get<int>(),
                                    j.value("window", 32));
  }
  if (kind == "tree") {
    return Space::tree(field(j, "alphabet").get<int>(),
                       field(j, "depth").get<int>());
  }
  if (kind == "sequence") {
    return Space::sequence(field(j, "alphabet").get<int>(),
                           field(j, "length").get<int>());
  }
  throw ConfigError("unknown space kind: " + kind);
}

Transform transform_from_json(const nlohmann::json& j, const Space& space) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return Transform::identity(space);
    throw ConfigError("unknown transform literal: " + j.get<std::string>());
  }
  if (!j.is_object() || j.size() != 1) {
    throw ConfigError("a transform is a one-key object or \"identity\"");
  }
  const auto& [key, value] = *j.items().begin();
  if (key == "identity") return Transform::identity(space);
  if (key == "affine") {
    return Transform::affine(space, matrix_from_json(field(value, "A")),
                             vector_from_json(field(value, "b")));
  }
  if (key == "rot") {
    return Transform::rotation(space, field(value, "i").get<int>(),
                               field(value, "j").get<int>(),
                               field(value, "angle").get<double>());
  }
  if (key == "copy_shift") {
    return Transform::copy_shift(space, value.get<int>());
  }
  if (key == "label_gated") {
    const auto& gate_j = field(value, "gate");
    LabelGate gate;
    if (gate_j.is_string()) {
      const std::string name = gate_j.get<std::string>();
      if (name == "even") {
        gate = LabelGate::even();
      } else if (name == "odd") {
        gate = LabelGate::odd();
      } else {
        throw ConfigError("unknown gate: " + name);
      }
    } else {
      gate = LabelGate::equals(field(gate_j, "equals").get<int>());
    }
    return Transform::label_gated(
        space, gate, transform_from_json(field(value, "inner"), space));
  }
  if (key == "perm") {
    return Transform::symbol_perm(
        space, field(value, "values").get<std::vector<int>>(),
        value.value("position", 0));
  }
  if (key == "tree_portrait") {
    return Transform::tree_portrait(
        space, field(value, "anchor").get<std::vector<int>>(),
        transform_from_json(field(value, "inner"), space));
  }
  if (key == "position_swap") {
    return Transform::position_swap(space, value.get<int>());
  }
  if (key == "compose") {
    std::vector<Transform> parts;
    for (const auto& part : value) {
      parts.push_back(transform_from_json(part, space));
    }
    return compose(parts);
  }
  if (key == "inverse") {
    return invert(transform_from_json(value, space));
  }
  throw ConfigError("unknown transform constructor: " + key);
}

OrderedJson transform_to_json(const Transform& t) {
  OrderedJson out;
  out["description"] = t.describe();
  if (auto aff = t.as_affine()) {
    OrderedJson affine;
    affine["A"] = matrix_to_json(aff->first);
    OrderedJson b = OrderedJson::array();
    for (long i = 0; i < aff->second.size(); ++i) b.push_back(aff->second(i));
    affine["b"] = b;
    out["affine"] = affine;
  }
  return out;
}

Cotranslation cotranslation_from_json(const nlohmann::json& j) {
  if (j.contains("gallery")) {
    return build_example(j.at("gallery").get<std::string>(),
                         j.value("params", json::object()));
  }
  GroupPresentation P = presentation_from_json(field(j, "presentation"));
  const Space space = space_from_json(field(j, "space"));
  const auto& gens = field(j, "generators");
  if (!gens.is_array() || gens.size() != P.generators().size()) {
    throw ConfigError("need one generator table per generator");
  }
  std::vector<GeneratorMaps::Table> tables;
  for (const auto& table_j : gens) {
    GeneratorMaps::Table table;
    for (const auto& [word_text, transform_j] : table_j.items()) {
      table.emplace(normal_form(parse_word(word_text, P), P),
                    transform_from_json(transform_j, space));
    }
    tables.push_back(std::move(table));
  }
  return Cotranslation(
      GeneratorMaps::from_tables(std::move(P), space, std::move(tables)));
}

MatrixSequence sequence_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "constant") {
    const Eigen::MatrixXd m = matrix_from_json(field(j, "matrix"));
    return MatrixSequence(static_cast<int>(m.rows()),
                          [m](long) { return m; });
  }
  if (kind == "periodic") {
    std::vector<Eigen::MatrixXd> mats;
    for (const auto& mj : field(j, "matrices")) {
      mats.push_back(matrix_from_json(mj));
    }
    if (mats.empty()) throw ConfigError("periodic sequence needs matrices");
    const long period = static_cast<long>(mats.size());
    return MatrixSequence(static_cast<int>(mats[0].rows()),
                          [mats, period](long n) {
                            long k = n % period;
                            if (k < 0) k += period;
                            return mats[static_cast<std::size_t>(k)];
                          });
  }
  if (kind == "random") {
    const int dim = field(j, "dim").get<int>();
    const std::uint64_t seed = field(j, "seed").get<std::uint64_t>();
    return MatrixSequence(dim, [dim, seed](long n) {
      Rng rng(seed ^ (0x2545F4914F6CDD1Dull *
                      static_cast<std::uint64_t>(n + 1000000)));
      // Entries in [-1, 1], redrawn until the condition number is <= 100.
      while (true) {
        Eigen::MatrixXd m(dim, dim);
        for (int r = 0; r < dim; ++r) {
          for (int c = 0; c < dim; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv(sv.size() - 1) > 1e-6 && sv(0) / sv(sv.size() - 1) <= 100.0) {
          return m;
        }
      }
    });
  }
  throw ConfigError("unknown sequence kind: " + kind);
}

GeneratorFunction generator_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "constant") {
    const Eigen::MatrixXd m = matrix_from_json(field(j, "matrix"));
    return GeneratorFunction{static_cast<int>(m.rows()),
                             [m](double) { return m; }};
  }
  if (kind == "builtin") {
    const std::string name = field(j, "name").get<std::string>();
    if (name == "zero") {
      const int dim = j.value("dim", 2);
      return GeneratorFunction{dim, [dim](double) {
                                 return Eigen::MatrixXd::Zero(dim, dim);
                               }};
    }
    if (name == "rotation") {
      return GeneratorFunction{2, [](double) {
                                 Eigen::MatrixXd m(2, 2);
                                 m << 0, 1, -1, 0;
                                 return m;
                               }};
    }
    if (name == "sin_cos") {
      return GeneratorFunction{2, [](double t) {
                                 Eigen::MatrixXd m(2, 2);
                                 m << std::sin(t), 1, 0, std::cos(t);
                                 return m;
                               }};
    }
    if (name == "diag_t") {
      const int dim = j.value("dim", 2);
      return GeneratorFunction{dim, [dim](double t) {
                                 return (t * Eigen::MatrixXd::Identity(dim, dim))
                                     .eval();
                               }};
    }
    throw ConfigError("unknown builtin generator: " + name);
  }
  throw ConfigError("unknown generator kind: " + kind);
}

PartialCotranslation partial_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "constant_block") {
    GroupPresentation P = j.contains("presentation")
                              ? presentation_from_json(j.at("presentation"))
                              : GroupPresentation::integers();
    return PartialCotranslation::constant_block(std::move(P),
                                                field(j, "dim").get<int>(),
                                                field(j, "rank").get<int>());
  }
  if (kind == "block_cocycle") {
    GroupPresentation P = j.contains("presentation")
                              ? presentation_from_json(j.at("presentation"))
                              : GroupPresentation::integers();
    const auto blocks = field(j, "blocks").get<std::vector<int>>();
    const auto seed = field(j, "seed").get<std::uint64_t>();
    BlockCocycleInstance inst = random_block_cocycle(P, blocks, seed);
    return restrict_partial(inst.V, inst.P);
  }
  throw ConfigError("unknown partial cotranslation kind: " + kind);
}

OrderedJson report_to_json(const Report& report) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : report.checks) {
    OrderedJson row;
    row["name"] = c.name;
    row["samples"] = c.samples;
    row["max_residual"] = c.max_residual;
    row["status"] = c.passed ? "ok" : "fail";
    row["witnesses"] = c.witnesses;
    checks.push_back(row);
  }
  OrderedJson out;
  out["passed"] = report.all_passed();
  out["checks"] = checks;
  return out;
}

}  // namespace cotrans
