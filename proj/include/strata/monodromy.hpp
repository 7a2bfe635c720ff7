#pragma once

// The frame-shift group of a signature and the monodromy subgroup of each
// connected component, generated by the elementary moves: rotating a merged
// pair of singularities (pair twist), rotating a bubbled handle (handle
// twist, a shift by two), and rotating the whole surface (full turn). The
// framed component count is the subgroup index.

#include <stdexcept>
#include <string>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/components.hpp"
#include "strata/signature.hpp"

namespace strata {

// Raised for components whose hyperelliptic status is unknown: no proven
// generator set exists for them, so they are excluded from oracle paths.
struct unknown_component : std::domain_error {
    using std::domain_error::domain_error;
};

struct FrameGroup {
    Signature signature;
    GroupSpec spec;  // modulus max(|degree_i + 1|, 1) at position i
};

FrameGroup frame_group(const Signature& sig);

// deg_j at coordinate i and deg_i at coordinate j; symmetric in (i, j)
GroupElement pair_twist(const Signature& sig, int i, int j);
// 2 at coordinate i
GroupElement handle_twist(const Signature& sig, int i);
// 1 at every coordinate (simple poles excepted, where the factor is trivial)
GroupElement full_turn(const Signature& sig);

struct NamedGenerator {
    std::string name;  // "pair_twist(1,2)", "handle_twist(3)", "full_turn" (1-based)
    GroupElement value;
};

struct GeneratorSet {
    ComponentDescriptor component;
    FrameGroup group;
    std::vector<NamedGenerator> generators;
};

// The proven generator collection for the component:
//   genus 0                -> pair twists over every pair, full turn
//   hyperelliptic          -> pair twists over equal-degree pairs, handle
//                             twists at degrees occurring once, full turn
//   otherwise (poles {-1,-1}) -> handle twists and pair twists over zeroes,
//                             full turn
//   otherwise              -> handle twists everywhere, pair twists over all
//                             pairs not involving a unique pole, full turn
GeneratorSet generator_set(const ComponentDescriptor& c);

SubgroupBasis monodromy_subgroup(const ComponentDescriptor& c);

Int framed_component_count(const ComponentDescriptor& c);

// Index of the projection of the monodromy subgroup in the projected frame
// group; `marked` holds 0-based singularity indices. Empty marking gives 1.
Int partial_component_count(const ComponentDescriptor& c, const std::vector<int>& marked);

}  // namespace strata
