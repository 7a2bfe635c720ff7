#pragma once

// Connected components of a stratum: genus zero strata are connected, genus
// one components are labelled by rotation numbers, and in genus >= 2 the
// split is into hyperelliptic / spin-parity / generic components.

#include <optional>
#include <string>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

enum class ComponentKind { Genus0, Torus, Hyperelliptic, Spin, Generic };

enum class HypFlag { Yes, No, Unknown };

std::string to_string(ComponentKind k);
std::string to_string(HypFlag f);

struct ComponentDescriptor {
    Signature signature;
    ComponentKind kind;
    int rotation = 0;                // Torus only: the rotation number d
    int parity = -1;                 // Spin only: 0 or 1
    std::optional<int> torus_spin;   // derived label for even-type genus-one components
    HypFlag hyperelliptic = HypFlag::No;

    // hyperelliptic closed forms / generators apply
    bool hyperelliptic_route() const {
        return kind == ComponentKind::Hyperelliptic || hyperelliptic == HypFlag::Yes;
    }
    std::string label() const;  // "genus0", "torus(3)", "spin(1)", ...
};

// All positive divisors d of gcd(|n_1|,...,|n_r|), minus the gcd itself when
// the signature has exactly one zero and one pole. Requires genus 1.
std::vector<int> rotation_numbers(const Signature& sig);

// Never empty for a valid signature; deterministic order.
std::vector<ComponentDescriptor> components(const Signature& sig);

// Marking singularity names does not split components, so this is just the
// component count.
int named_singularity_component_count(const Signature& sig);

}  // namespace strata
