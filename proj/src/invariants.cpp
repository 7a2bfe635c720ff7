#include "strata/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "strata/monodromy.hpp"

namespace strata {

namespace {

void require_genus0_no_simple_pole(const Signature& sig, const char* what) {
    if (sig.genus() != 0) throw std::invalid_argument(std::string(what) + " requires a genus-zero signature");
    for (int d : sig.degrees())
        if (d == -1) throw std::invalid_argument(std::string(what) + " requires a signature without simple poles");
}

}  // namespace

PairModuli PairModuli::compute(const Signature& sig) {
    require_genus0_no_simple_pole(sig, "the pair gcd table");
    PairModuli pm(sig);
    const int r = sig.size();
    pm.upper_.reserve(size_t(r) * (r - 1) / 2);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            Int g = gcd_int(Int(std::abs(sig.degree(i) + 1)), Int(std::abs(sig.degree(j) + 1)));
            for (int k = 0; k < r; ++k)
                if (k != i && k != j) g = gcd_int(g, Int(std::abs(sig.degree(k))));
            pm.upper_.push_back(g);
        }
    }
    // distinct pairs must be pairwise coprime for the count formula to hold
    for (size_t a = 0; a < pm.upper_.size(); ++a)
        for (size_t b = a + 1; b < pm.upper_.size(); ++b)
            if (gcd_int(pm.upper_[a], pm.upper_[b]) != 1)
                throw std::logic_error("pair moduli are not pairwise coprime");
    return pm;
}

const Int& PairModuli::modulus(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= size() || j >= size())
        throw std::invalid_argument("pair modulus needs two distinct singularities");
    if (i > j) std::swap(i, j);
    const int r = size();
    // offset of (i, j), i < j, in row-major upper-triangle order
    int off = i * r - i * (i + 1) / 2 + (j - i - 1);
    return upper_[off];
}

Int PairModuli::product() const {
    Int n = 1;
    for (const Int& v : upper_) n *= v;
    return n;
}

Int closed_form_count(const ComponentDescriptor& c) {
    if (c.hyperelliptic == HypFlag::Unknown)
        throw unknown_component("no closed-form count for a component of unknown hyperelliptic status");
    const Signature& sig = c.signature;
    const SignaturePredicates p = predicates(sig);

    if (c.kind == ComponentKind::Genus0) {
        if (p.has_simple_pole) return 1;
        Int n = PairModuli::compute(sig).product();
        return p.odd_degree_count <= 2 ? n : 2 * n;
    }
    if (c.hyperelliptic_route()) {
        if (!p.is_hyperelliptic_type)
            throw std::invalid_argument("hyperelliptic component in a signature that is not of hyperelliptic type");
        std::vector<int> zeroes, poles;
        for (int d : sig.degrees())
            (d > 0 ? zeroes : poles).push_back(d);
        Int count = 1;
        if (zeroes.size() == 2) count *= zeroes[0] + 1;
        if (poles.size() == 2 && poles[0] <= -2) count *= -(poles[0] + 1);
        return count;
    }
    if (p.poles_are_exactly_two_simple) {
        for (int d : sig.degrees())
            if (d > 0 && d % 2 != 0) return 2;
        return 1;
    }
    return (p.has_simple_pole || p.all_degrees_even) ? Int(1) : Int(2);
}

std::vector<Int> difference_image(const PairModuli& pm, const GroupElement& x) {
    const Signature& sig = pm.signature();
    check_conforms(frame_group(sig).spec, x);
    std::vector<Int> img;
    const int r = pm.size();
    img.reserve(size_t(r) * (r - 1) / 2);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            img.push_back(floor_mod(x.coords[j] - x.coords[i], pm.modulus(i, j)));
    return img;
}

int spin_parity_delta(const Signature& sig, const GroupElement& x) {
    check_conforms(frame_group(sig).spec, x);
    const SignaturePredicates p = predicates(sig);
    if (p.odd_degree_count == 0)
        throw std::invalid_argument("spin parity shift needs odd-degree singularities");
    Int s = 0;
    for (int i = 0; i < sig.size(); ++i)
        if (sig.degree(i) % 2 != 0) s += x.coords[i];
    return int(to_u64(floor_mod(s, 2)));
}

InvariantImage invariant_image(const PairModuli& pm, const GroupElement& x) {
    InvariantImage img;
    img.pair_part = difference_image(pm, x);
    if (predicates(pm.signature()).odd_degree_count > 0) img.spin_part = spin_parity_delta(pm.signature(), x);
    return img;
}

bool invariant_kernel_matches_monodromy(const ComponentDescriptor& c) {
    const Signature& sig = c.signature;
    require_genus0_no_simple_pole(sig, "the kernel identity");
    const PairModuli pm = PairModuli::compute(sig);
    const SignaturePredicates p = predicates(sig);
    const FrameGroup fg = frame_group(sig);
    const int r = sig.size();

    const bool with_spin = p.odd_degree_count > 2;
    std::vector<Int> target_moduli;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) target_moduli.push_back(pm.modulus(i, j));
    if (with_spin) target_moduli.push_back(2);
    GroupSpec target(std::move(target_moduli));

    IntMat map(target.rank(), r);
    int row = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            map.at(row, i) = -1;
            map.at(row, j) = 1;
            ++row;
        }
    if (with_spin)
        for (int i = 0; i < r; ++i) map.at(row, i) = (sig.degree(i) % 2 != 0) ? 1 : 0;

    SubgroupBasis kernel = homomorphism_kernel(fg.spec, target, map);
    return kernel == monodromy_subgroup(c);
}

CoordinateGcdIdentity coordinate_gcd_check(const Signature& sig, int k) {
    require_genus0_no_simple_pole(sig, "the coordinate gcd identity");
    const int r = sig.size();
    if (r < 3) throw std::invalid_argument("the coordinate gcd identity needs at least three singularities");
    if (k < 0 || k >= r) throw std::invalid_argument("singularity index out of range");

    CoordinateGcdIdentity res;
    res.gcd_value = abs(Int(sig.degree(k)) + 1);
    for (int i = 0; i < r; ++i) {
        if (i == k) continue;
        res.gcd_value = gcd_int(res.gcd_value, abs(Int(sig.degree(i)) * (Int(sig.degree(i)) + 1)));
        for (int j = i + 1; j < r; ++j)
            if (j != k)
                res.gcd_value = gcd_int(res.gcd_value, abs(2 * Int(sig.degree(i)) * Int(sig.degree(j))));
    }

    int other_odd = 0;
    for (int i = 0; i < r; ++i)
        if (i != k && sig.degree(i) % 2 != 0) ++other_odd;
    res.parity_factor = (sig.degree(k) % 2 != 0 && other_odd >= 2) ? 2 : 1;

    const PairModuli pm = PairModuli::compute(sig);
    res.pair_product = 1;
    for (int i = 0; i < r; ++i)
        if (i != k) res.pair_product *= pm.modulus(k, i);

    res.holds = (res.gcd_value == res.parity_factor * res.pair_product);
    return res;
}

OddPairing OddPairing::consecutive(const Signature& sig) {
    std::vector<int> odd;
    for (int i = 0; i < sig.size(); ++i)
        if (sig.degree(i) % 2 != 0) odd.push_back(i);
    if (odd.empty()) throw std::invalid_argument("no odd-degree singularities to pair");
    OddPairing p;
    for (size_t i = 0; i + 1 < odd.size(); i += 2) p.pairs_.emplace_back(odd[i], odd[i + 1]);
    return p;
}

int OddPairing::swap_within(int j) {
    if (j < 0 || j >= int(pairs_.size())) throw std::invalid_argument("pairing index out of range");
    std::swap(pairs_[j].first, pairs_[j].second);
    return 1;
}

int OddPairing::swap_across(int j, int k) {
    if (j < 0 || k < 0 || j >= int(pairs_.size()) || k >= int(pairs_.size()) || j == k)
        throw std::invalid_argument("pairing indices out of range");
    std::swap(pairs_[j].first, pairs_[k].first);
    return 1;
}

int spin_parity_glue(int sp_a, std::optional<int> sp_b, GlueKind kind) {
    if (sp_a != 0 && sp_a != 1) throw std::invalid_argument("spin parity must be 0 or 1");
    if (kind == GlueKind::Simple) {
        if (!sp_b) throw std::invalid_argument("simple gluing needs both spin parities");
        if (*sp_b != 0 && *sp_b != 1) throw std::invalid_argument("spin parity must be 0 or 1");
        return (sp_a + *sp_b) % 2;
    }
    return sp_a;
}

}  // namespace strata
