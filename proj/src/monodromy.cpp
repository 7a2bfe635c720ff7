#include "strata/monodromy.hpp"

#include <algorithm>
#include <map>

namespace strata {

FrameGroup frame_group(const Signature& sig) {
    std::vector<Int> moduli;
    moduli.reserve(sig.size());
    for (int h : separatrix_counts(sig)) moduli.push_back(Int(std::max(h, 1)));
    return FrameGroup{sig, GroupSpec(std::move(moduli))};
}

GroupElement pair_twist(const Signature& sig, int i, int j) {
    if (i == j) throw std::invalid_argument("pair twist needs two distinct singularities");
    if (i < 0 || j < 0 || i >= sig.size() || j >= sig.size())
        throw std::invalid_argument("singularity index out of range");
    FrameGroup fg = frame_group(sig);
    std::vector<Int> c(sig.size(), 0);
    c[i] = sig.degree(j);
    c[j] = sig.degree(i);
    return reduce(fg.spec, std::move(c));
}

GroupElement handle_twist(const Signature& sig, int i) {
    if (i < 0 || i >= sig.size()) throw std::invalid_argument("singularity index out of range");
    FrameGroup fg = frame_group(sig);
    std::vector<Int> c(sig.size(), 0);
    c[i] = 2;
    return reduce(fg.spec, std::move(c));
}

GroupElement full_turn(const Signature& sig) {
    FrameGroup fg = frame_group(sig);
    std::vector<Int> c(sig.size(), 1);
    return reduce(fg.spec, std::move(c));
}

namespace {

std::string pair_name(int i, int j) {
    return "pair_twist(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

GeneratorSet generator_set(const ComponentDescriptor& c) {
    if (c.hyperelliptic == HypFlag::Unknown)
        throw unknown_component("component has unknown hyperelliptic status; no generator set is proven for it");
    const Signature& sig = c.signature;
    const SignaturePredicates p = predicates(sig);
    GeneratorSet gs{c, frame_group(sig), {}};
    auto add_pair = [&](int i, int j) { gs.generators.push_back({pair_name(i, j), pair_twist(sig, i, j)}); };
    auto add_handle = [&](int i) {
        gs.generators.push_back({"handle_twist(" + std::to_string(i + 1) + ")", handle_twist(sig, i)});
    };

    if (c.kind == ComponentKind::Genus0) {
        for (int i = 0; i < sig.size(); ++i)
            for (int j = i + 1; j < sig.size(); ++j) add_pair(i, j);
    } else if (c.hyperelliptic_route()) {
        std::map<int, std::vector<int>> by_degree;
        for (int i = 0; i < sig.size(); ++i) by_degree[sig.degree(i)].push_back(i);
        for (int i = 0; i < sig.size(); ++i)
            for (int j = i + 1; j < sig.size(); ++j)
                if (sig.degree(i) == sig.degree(j)) add_pair(i, j);
        for (int i = 0; i < sig.size(); ++i)
            if (by_degree[sig.degree(i)].size() == 1) add_handle(i);
    } else if (p.poles_are_exactly_two_simple) {
        for (int i = 0; i < sig.size(); ++i)
            if (sig.is_zero(i)) add_handle(i);
        for (int i = 0; i < sig.size(); ++i)
            for (int j = i + 1; j < sig.size(); ++j)
                if (sig.is_zero(i) && sig.is_zero(j)) add_pair(i, j);
    } else {
        for (int i = 0; i < sig.size(); ++i) add_handle(i);
        const bool unique_pole = sig.pole_count() == 1;
        for (int i = 0; i < sig.size(); ++i)
            for (int j = i + 1; j < sig.size(); ++j)
                if (!(unique_pole && (sig.is_pole(i) || sig.is_pole(j)))) add_pair(i, j);
    }
    gs.generators.push_back({"full_turn", full_turn(sig)});
    return gs;
}

SubgroupBasis monodromy_subgroup(const ComponentDescriptor& c) {
    GeneratorSet gs = generator_set(c);
    std::vector<GroupElement> gens;
    gens.reserve(gs.generators.size());
    for (auto& g : gs.generators) gens.push_back(g.value);
    return subgroup_from_generators(gs.group.spec, gens);
}

Int framed_component_count(const ComponentDescriptor& c) {
    return monodromy_subgroup(c).index();
}

Int partial_component_count(const ComponentDescriptor& c, const std::vector<int>& marked) {
    std::vector<int> keep = marked;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int i : keep)
        if (i < 0 || i >= c.signature.size()) throw std::invalid_argument("marked index out of range");
    if (keep.empty()) return 1;
    GeneratorSet gs = generator_set(c);
    GroupSpec sub = project_spec(gs.group.spec, keep);
    std::vector<GroupElement> gens;
    gens.reserve(gs.generators.size());
    for (auto& g : gs.generators) gens.push_back(project_element(g.value, keep));
    return subgroup_from_generators(sub, gens).index();
}

}  // namespace strata
