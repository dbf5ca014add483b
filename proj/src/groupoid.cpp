#include "cotrans/groupoid.hpp"

#include <unordered_map>

#include "cotrans/error.hpp"
#include "cotrans/rng.hpp"

namespace cotrans {

namespace {

std::string describe(const GroupoidElement& p, const GroupPresentation& P) {
  return "(" + to_string(p.base, P) + ", " + to_string(p.arrow, P) + ")";
}

}  // namespace

GroupoidElement groupoid_element(const Word& base, const Word& arrow,
                                 const GroupPresentation& P) {
  return GroupoidElement{normal_form(base, P), normal_form(arrow, P)};
}

bool composable(const GroupoidElement& p, const GroupoidElement& q,
                const GroupPresentation& P) {
  return p.base == multiply(q.arrow, q.base, P);
}

GroupoidElement compose_pair(const GroupoidElement& p, const GroupoidElement& q,
                             const GroupPresentation& P) {
  if (!composable(p, q, P)) {
    throw ComposabilityError("pair not composable: " + describe(p, P) + " * " +
                             describe(q, P));
  }
  return GroupoidElement{q.base, multiply(p.arrow, q.arrow, P)};
}

GroupoidElement inv_pair(const GroupoidElement& p, const GroupPresentation& P) {
  return GroupoidElement{multiply(p.arrow, p.base, P),
                         invert_word(p.arrow, P)};
}

GroupoidOps GroupoidOps::standard() {
  GroupoidOps ops;
  ops.composable = [](const GroupoidElement& p, const GroupoidElement& q,
                      const GroupPresentation& P) {
    return cotrans::composable(p, q, P);
  };
  ops.compose = [](const GroupoidElement& p, const GroupoidElement& q,
                   const GroupPresentation& P) {
    return cotrans::compose_pair(p, q, P);
  };
  ops.inv = [](const GroupoidElement& p, const GroupPresentation& P) {
    return cotrans::inv_pair(p, P);
  };
  return ops;
}

std::vector<GroupoidElement> groupoid_sample(const GroupPresentation& P,
                                             int radius) {
  std::vector<Word> words;
  if (P.is_finite() && P.order() <= 64) {
    words = P.elements();
  } else {
    words = ball(P, radius);
  }
  std::vector<GroupoidElement> sample;
  sample.reserve(words.size() * words.size());
  for (const auto& x : words) {
    for (const auto& g : words) {
      sample.push_back(GroupoidElement{x, g});
    }
  }
  return sample;
}

Report verify_groupoid_axioms(const GroupPresentation& P,
                              const std::vector<GroupoidElement>& sample,
                              const GroupoidOps& ops,
                              const AxiomCheckConfig& config) {
  Report report;
  auto& involution = report.add("involution");
  auto& inv_comp = report.add("inv_composable");
  auto& units = report.add("units_space");
  auto& identity_left = report.add("identity_left");
  auto& identity_right = report.add("identity_right");
  auto& assoc = report.add("associativity");

  // Unary axioms.
  for (const auto& eta : sample) {
    const auto inv_eta = ops.inv(eta, P);
    const auto twice = ops.inv(inv_eta, P);
    involution.record(0.0, twice == eta,
                      "inv(inv " + describe(eta, P) + ") = " +
                          describe(twice, P));
    inv_comp.record(0.0, ops.composable(eta, inv_eta, P),
                    "(eta, inv(eta)) not composable for eta = " +
                        describe(eta, P));
    const bool is_unit_shape = eta.arrow.empty();
    bool behaves_as_unit = eta == inv_eta && ops.composable(eta, eta, P);
    if (behaves_as_unit) behaves_as_unit = ops.compose(eta, eta, P) == eta;
    units.record(0.0, is_unit_shape == behaves_as_unit,
                 "units-space mismatch at " + describe(eta, P));
  }

  // Bucket sample elements by base for fast partner lookup.
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> by_base;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    by_base[sample[i].base].push_back(i);
  }

  // Composable pairs (eta, xi): eta.base = xi.arrow * xi.base.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < sample.size(); ++j) {
    const Word key = multiply(sample[j].arrow, sample[j].base, P);
    auto it = by_base.find(key);
    if (it == by_base.end()) continue;
    for (std::size_t i : it->second) pairs.emplace_back(i, j);
  }
  if (pairs.size() > config.max_pairs) {
    Rng rng(config.seed);
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    kept.reserve(config.max_pairs);
    for (std::size_t k = 0; k < config.max_pairs; ++k) {
      kept.push_back(pairs[rng.index(pairs.size())]);
    }
    pairs = std::move(kept);
  }

  for (const auto& [i, j] : pairs) {
    const auto& eta = sample[i];
    const auto& xi = sample[j];
    const auto prod = ops.compose(eta, xi, P);
    const auto inv_eta = ops.inv(eta, P);
    const auto inv_xi = ops.inv(xi, P);
    const std::string at = describe(eta, P) + " * " + describe(xi, P);
    if (!ops.composable(inv_eta, prod, P)) {
      identity_left.record(0.0, false, "inv(eta) not composable with " + at);
    } else {
      identity_left.record(0.0, ops.compose(inv_eta, prod, P) == xi,
                           "inv(eta)*(eta*xi) != xi at " + at);
    }
    if (!ops.composable(prod, inv_xi, P)) {
      identity_right.record(0.0, false, "(eta*xi) not composable with inv(xi) at " + at);
    } else {
      identity_right.record(0.0, ops.compose(prod, inv_xi, P) == eta,
                            "(eta*xi)*inv(xi) != eta at " + at);
    }
  }

  // Associable triples: (eta, xi) and (xi, zeta) composable.
  std::size_t triples = 0;
  Rng rng(config.seed + 1);
  const double keep_all =
      pairs.empty() ? 1.0
                    : static_cast<double>(config.max_triples) /
                          (static_cast<double>(pairs.size()) * 8.0);
  for (const auto& [j, k] : pairs) {
    if (triples >= config.max_triples) break;
    const auto& xi = sample[j];
    const auto& zeta = sample[k];
    const Word key = multiply(xi.arrow, xi.base, P);
    auto it = by_base.find(key);
    if (it == by_base.end()) continue;
    for (std::size_t i : it->second) {
      if (triples >= config.max_triples) break;
      if (keep_all < 1.0 && rng.uniform(0.0, 1.0) > keep_all) continue;
      ++triples;
      const auto& eta = sample[i];
      const auto left = ops.compose(eta, xi, P);
      const auto right = ops.compose(xi, zeta, P);
      const std::string at = describe(eta, P) + ", " + describe(xi, P) + ", " +
                             describe(zeta, P);
      if (!ops.composable(left, zeta, P)) {
        assoc.record(0.0, false, "(eta*xi, zeta) not composable at " + at);
        continue;
      }
      if (!ops.composable(eta, right, P)) {
        assoc.record(0.0, false, "(eta, xi*zeta) not composable at " + at);
        continue;
      }
      assoc.record(0.0,
                   ops.compose(left, zeta, P) == ops.compose(eta, right, P),
                   "associativity fails at " + at);
    }
  }

  return report;
}

}  // namespace cotrans
