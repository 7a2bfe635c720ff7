#pragma once

// Signatures of strata of meromorphic differentials: the multiset of
// singularity degrees (zero orders positive, pole orders negated), kept in
// canonical descending order so that a singularity's identity is its
// position. Only meromorphic signatures are accepted: at least one pole,
// and not a single simple pole on its own.

#include <optional>
#include <string>
#include <vector>

namespace strata {

struct ValidationResult;
ValidationResult validate(const std::vector<int>& degrees);

class Signature {
  public:
    Signature() = default;  // empty placeholder; real signatures come from validate/parse

    const std::vector<int>& degrees() const { return degrees_; }
    int size() const { return int(degrees_.size()); }
    int degree(int i) const { return degrees_[i]; }
    int genus() const;  // (sum + 2) / 2
    int sum() const;

    int zero_count() const;
    int pole_count() const;
    bool is_zero(int i) const { return degrees_[i] > 0; }
    bool is_pole(int i) const { return degrees_[i] < 0; }
    bool is_simple_pole(int i) const { return degrees_[i] == -1; }

    bool operator==(const Signature& o) const { return degrees_ == o.degrees_; }
    bool operator<(const Signature& o) const { return degrees_ < o.degrees_; }

  private:
    friend ValidationResult validate(const std::vector<int>& degrees);
    explicit Signature(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
    std::vector<int> degrees_;
};

struct SingularityRef {
    int index;   // 0-based position in the signature
    int degree;  // matches the entry at that position
};

SingularityRef singularity(const Signature& sig, int index);

struct ValidationResult {
    std::optional<Signature> signature;
    std::vector<std::string> errors;
    bool ok() const { return signature.has_value(); }
};

// Sorts the degrees descending and checks every stratum rule; on failure the
// full list of violated rules is reported.
ValidationResult validate(const std::vector<int>& degrees);

// Grammar: ["H("] entry ("," entry)* [")"], entry := int ["^" posint].
// Whitespace is ignored; both ASCII '-' and U+2212 minus are accepted.
ValidationResult parse_signature(const std::string& text);

// Canonical text form, e.g. "2,2,-3,-3"; parse(format(s)) == s.
std::string format_signature(const Signature& sig);

struct SignaturePredicates {
    bool has_simple_pole;
    bool poles_are_exactly_two_simple;
    bool all_degrees_even;
    int odd_degree_count;
    bool is_hyperelliptic_type;  // zeroes {2n} or {n,n}, poles {-2p} or {-p,-p}
    bool is_even_type;           // zeroes all even, poles all even or {-1,-1}
};

SignaturePredicates predicates(const Signature& sig);

// Number of horizontal separatrices per singularity: |degree + 1|, which is
// zero exactly at simple poles.
std::vector<int> separatrix_counts(const Signature& sig);

// Whether the connected components of the stratum contain a surface whose
// pole at `pole` has zero residue. False exactly when the residue is forced:
// genus zero with two poles and a single zero, or when the only other pole
// is simple.
bool pole_zero_residue_possible(const Signature& sig, const SingularityRef& pole);

}  // namespace strata
