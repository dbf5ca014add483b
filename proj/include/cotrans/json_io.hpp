#pragma once

#include <json.hpp>
#include <string>

#include "cotrans/cotranslation.hpp"
#include "cotrans/difference.hpp"
#include "cotrans/evolution.hpp"
#include "cotrans/partial.hpp"
#include "cotrans/report.hpp"

namespace cotrans {

using OrderedJson = nlohmann::ordered_json;

// Presentations: {"family":"cyclic","n":3}, {"family":"dihedral","n":3},
// {"family":"infinite_dihedral"}, {"family":"free","rank":2},
// {"family":"integers"}, {"family":"free_product","left":...,"right":...}.
GroupPresentation presentation_from_json(const nlohmann::json& j);

// Spaces: {"kind":"euclidean","dim":1},
// {"kind":"labeled_euclidean","dim":2,"window":32},
// {"kind":"tree","alphabet":2,"depth":6},
// {"kind":"sequence","alphabet":3,"length":16}.
Space space_from_json(const nlohmann::json& j);

// Transforms: "identity", {"affine":{"A":...,"b":...}},
// {"rot":{"i":0,"j":1,"angle":x}}, {"copy_shift":k},
// {"label_gated":{"gate":"even"|"odd"|{"equals":k},"inner":T}},
// {"perm":{"values":[...],"position":p}},
// {"tree_portrait":{"anchor":[...],"inner":T}}, {"position_swap":n},
// {"compose":[T,...]} (first entry applied last), {"inverse":T}.
Transform transform_from_json(const nlohmann::json& j, const Space& space);
OrderedJson transform_to_json(const Transform& t);

// Cotranslations: {"gallery":name,"params":{...}} or
// {"presentation":...,"space":...,"generators":[{word:T,...},...]}.
Cotranslation cotranslation_from_json(const nlohmann::json& j);

// Sequences: {"dim":d,"kind":"constant","matrix":...},
// {"kind":"periodic","matrices":[...]}, {"kind":"random","seed":s}.
MatrixSequence sequence_from_json(const nlohmann::json& j);

// Generators: {"dim":d,"kind":"constant","matrix":...},
// {"kind":"builtin","name":"zero"|"rotation"|"sin_cos"|"diag_t"}.
GeneratorFunction generator_from_json(const nlohmann::json& j);

// Partials: {"kind":"constant_block","presentation":...,"dim":d,"rank":n},
// {"kind":"block_cocycle","blocks":[n1,n2],"seed":s} over the integers
// (a conjugated block cocycle restricted by its block projector).
PartialCotranslation partial_from_json(const nlohmann::json& j);

OrderedJson report_to_json(const Report& report);

}  // namespace cotrans
