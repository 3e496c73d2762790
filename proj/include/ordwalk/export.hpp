#pragma once

#include "ordwalk/hwalks.hpp"
#include "ordwalk/walks.hpp"

#include <string>

namespace ordwalk {

// {"n":..,"root":"","nodes":{"<sigma>":{"in_sign":..,"in":[..],"out_sign":..,
// "out":"..","children":[..]} | {"in_sign":..,"in":[..],"boundary":true}}}
// Node keys appear in depth-first preorder; ordinals as grammar literals.
std::string tree_json(const WalkTree& tree);

// Two-compartment record nodes (input over output), boundary output x,
// edge style cycling with the child label.
std::string tree_dot(const WalkTree& tree);

std::string walk_json(const WalkTrace& t, long long rho2_value,
                      std::optional<long long> rho1_value);

std::string tree_ascii(const WalkTree& tree);

} // namespace ordwalk
