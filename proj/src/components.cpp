#include "strata/components.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strata {

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::Genus0: return "genus0";
        case ComponentKind::Torus: return "torus";
        case ComponentKind::Hyperelliptic: return "hyperelliptic";
        case ComponentKind::Spin: return "spin";
        case ComponentKind::Generic: return "generic";
    }
    return "?";
}

std::string to_string(HypFlag f) {
    switch (f) {
        case HypFlag::Yes: return "yes";
        case HypFlag::No: return "no";
        case HypFlag::Unknown: return "unknown";
    }
    return "?";
}

std::string ComponentDescriptor::label() const {
    switch (kind) {
        case ComponentKind::Torus: return "torus(" + std::to_string(rotation) + ")";
        case ComponentKind::Spin: return "spin(" + std::to_string(parity) + ")";
        default: return to_string(kind);
    }
}

std::vector<int> rotation_numbers(const Signature& sig) {
    if (sig.genus() != 1) throw std::invalid_argument("rotation numbers are defined for genus-one signatures only");
    int n = 0;
    for (int d : sig.degrees()) n = std::gcd(n, std::abs(d));
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    if (sig.zero_count() == 1 && sig.pole_count() == 1) divisors.pop_back();  // d = N does not occur
    return divisors;
}

namespace {

// The genus-one components known to be hyperelliptic are rot(S) = n in the
// shapes [n,n,-2n] and [2n,-n,-n]; for other hyperelliptic-type signatures
// the status of a given rotation number is left unknown.
HypFlag torus_flag(const Signature& sig, int d, const SignaturePredicates& p) {
    if (!p.is_hyperelliptic_type) return HypFlag::No;
    const auto& deg = sig.degrees();
    if (deg.size() == 3) {
        if (deg[0] == deg[1] && deg[2] == -2 * deg[0] && d == deg[0]) return HypFlag::Yes;
        if (deg[1] == deg[2] && deg[0] == -2 * deg[1] && d == -deg[1]) return HypFlag::Yes;
    }
    return HypFlag::Unknown;
}

int pole_order_sum(const Signature& sig) {
    int s = 0;
    for (int d : sig.degrees())
        if (d < 0) s -= d;
    return s;
}

}  // namespace

std::vector<ComponentDescriptor> components(const Signature& sig) {
    const SignaturePredicates p = predicates(sig);
    const int g = sig.genus();
    std::vector<ComponentDescriptor> out;

    if (g == 0) {
        out.push_back({sig, ComponentKind::Genus0, 0, -1, std::nullopt, HypFlag::No});
        return out;
    }

    if (g == 1) {
        for (int d : rotation_numbers(sig)) {
            ComponentDescriptor c{sig, ComponentKind::Torus, d, -1, std::nullopt, torus_flag(sig, d, p)};
            // even spin structure exactly when the rotation number is odd
            if (p.is_even_type) c.torus_spin = (d % 2 == 1) ? 0 : 1;
            out.push_back(std::move(c));
        }
        return out;
    }

    const int psum = pole_order_sum(sig);
    if (psum % 2 == 1) {
        // odd total pole order (necessarily >= 3): connected
        out.push_back({sig, ComponentKind::Generic, 0, -1, std::nullopt, HypFlag::No});
        return out;
    }
    if (psum == 2 && g == 2) {
        if (p.is_hyperelliptic_type) {
            out.push_back({sig, ComponentKind::Hyperelliptic, 0, -1, std::nullopt, HypFlag::Yes});
            out.push_back({sig, ComponentKind::Generic, 0, -1, std::nullopt, HypFlag::No});
        } else {
            out.push_back({sig, ComponentKind::Generic, 0, -1, std::nullopt, HypFlag::No});
        }
        return out;
    }
    if (p.is_hyperelliptic_type)
        out.push_back({sig, ComponentKind::Hyperelliptic, 0, -1, std::nullopt, HypFlag::Yes});
    if (p.is_even_type) {
        out.push_back({sig, ComponentKind::Spin, 0, 0, std::nullopt, HypFlag::No});
        out.push_back({sig, ComponentKind::Spin, 0, 1, std::nullopt, HypFlag::No});
    } else {
        out.push_back({sig, ComponentKind::Generic, 0, -1, std::nullopt, HypFlag::No});
    }
    return out;
}

int named_singularity_component_count(const Signature& sig) {
    return int(components(sig).size());
}

}  // namespace strata
