#pragma once

// Closed-form framed component counts, the pairwise gcd moduli N_ij that
// govern the genus-zero counts, and the pair-difference / spin-parity
// homomorphisms whose kernel must coincide with the monodromy subgroup.

#include <optional>
#include <utility>
#include <vector>

#include "strata/abelian.hpp"
#include "strata/components.hpp"
#include "strata/signature.hpp"

namespace strata {

// N_ij = gcd({|n_k|, k not in {i,j}} U {|n_i+1|, |n_j+1|}) for a genus-zero
// signature without simple poles. Distinct pairs are checked pairwise
// coprime at construction; a violation would falsify the count formula.
class PairModuli {
  public:
    static PairModuli compute(const Signature& sig);

    const Signature& signature() const { return sig_; }
    int size() const { return sig_.size(); }
    const Int& modulus(int i, int j) const;  // symmetric, i != j
    Int product() const;                     // N = prod over i < j

  private:
    explicit PairModuli(Signature sig) : sig_(std::move(sig)) {}
    Signature sig_;
    std::vector<Int> upper_;  // row-major over pairs i < j
};

// Closed-form framed component count for a component with known
// hyperelliptic status (throws unknown_component otherwise):
//   genus 0:        1 with a simple pole, else N, else 2N with > 2 odd degrees
//   hyperelliptic:  (n+1) per equal-zero pair times |p+1| per equal pair of
//                   poles of order >= 2
//   otherwise:      1 when a simple pole exists or all degrees are even
//                   (for a pair of simple poles: all zero degrees even),
//                   else 2
Int closed_form_count(const ComponentDescriptor& c);

// Image of a frame shift under the pair-difference homomorphism: coordinate
// (i,j), i<j, is (x_j - x_i) mod N_ij.
std::vector<Int> difference_image(const PairModuli& pm, const GroupElement& x);

// Parity of a frame shift over the odd-degree coordinates; defined only when
// odd-degree singularities exist.
int spin_parity_delta(const Signature& sig, const GroupElement& x);

struct InvariantImage {
    std::vector<Int> pair_part;    // element of prod_{i<j} Z/N_ij
    std::optional<int> spin_part;  // present iff odd-degree singularities exist
};

InvariantImage invariant_image(const PairModuli& pm, const GroupElement& x);

// Builds the distinguishing homomorphism (pair differences, plus the spin
// parity when more than two odd degrees exist), computes its kernel, and
// compares with the monodromy subgroup. Expected true for every genus-zero
// signature without simple poles; a false return falsifies the counts.
bool invariant_kernel_matches_monodromy(const ComponentDescriptor& c);

// The gcd identity behind the genus-zero count: the realizable shifts of a
// single coordinate k form the subgroup generated by
// eps_k * prod_{i != k} N_ki inside Z/|n_k+1|.
struct CoordinateGcdIdentity {
    Int gcd_value;      // gcd({|2 n_i n_j|} U {|n_i (n_i+1)|} U {|n_k+1|})
    int parity_factor;  // eps_k: 2 when n_k is odd with two more odd degrees, else 1
    Int pair_product;   // prod_{i != k} N_ki
    bool holds;         // gcd_value == parity_factor * pair_product
};

CoordinateGcdIdentity coordinate_gcd_check(const Signature& sig, int k);

// An ordered pairing (P_j^-, P_j^+) of the odd-degree singularities. Both
// elementary pairing moves flip the spin invariant.
class OddPairing {
  public:
    static OddPairing consecutive(const Signature& sig);  // odd indices paired in order

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    // swap P_j^- with P_j^+; returns the induced spin delta (always 1)
    int swap_within(int j);
    // swap P_j^- with P_k^-; returns the induced spin delta (always 1)
    int swap_across(int j, int k);

  private:
    std::vector<std::pair<int, int>> pairs_;
};

enum class GlueKind { Simple, Self };

// Spin parity of a glued surface: simple gluings add the two parities,
// self-gluings keep the parity unchanged.
int spin_parity_glue(int sp_a, std::optional<int> sp_b, GlueKind kind);

}  // namespace strata
