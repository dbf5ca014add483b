#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cotrans/cotranslation.hpp"

namespace cotrans {

// Named cotranslation constructions with JSON-overridable parameters:
//   c3_affine                 C3 on R by x+1 / 2x / x/2-1
//   cyclic_multirotational    C_n on R^d by plane rotations, angle sets
//                             summing to multiples of 2*pi
//   cyclic_disjoint           C_{3n} on labeled copies of R^2, one rotation
//                             triple per copy
//   d6_labeled_copies         D6 on Z-indexed copies of R^2 via parity-gated
//                             rotations and the copy shift
//   dinf_translation_rotation D-infinity on R^2 by powers of a translation
//                             and rotations by pi/2^{n+1}
//   dinf_symmetry_rotation    D-infinity on R^2 by line symmetries and
//                             rotations
//   c2c3_prodiscrete          C2*C3 on truncated ternary sequences by
//                             position swaps and first-symbol permutations
//   f2_binary_tree            F2 on the binary tree by first-letter-swap
//                             portraits anchored at letter images
//   fn_tree                   F_n on the 2n-ary tree by portraits anchored at
//                             the base word itself
Cotranslation build_example(const std::string& name,
                            const nlohmann::json& params = nlohmann::json::object());

std::vector<std::string> example_names();

}  // namespace cotrans
