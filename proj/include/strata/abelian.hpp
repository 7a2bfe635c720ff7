#pragma once

// Exact arithmetic in finite products of cyclic groups: subgroups given by
// generators, canonical Hermite-normal-form bases, indices, kernels of
// homomorphisms, and an independent brute-force closure engine for
// cross-checking. All lattice arithmetic is arbitrary precision.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace strata {

using Int = mpz_class;

Int gcd_int(const Int& a, const Int& b);
// floor division / remainder; for b > 0 the remainder lies in [0, b)
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
bool fits_u64(const Int& v);
std::uint64_t to_u64(const Int& v);

// Thrown when a brute-force enumeration would exceed the configured bound.
struct group_too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    void swap_cols(int a, int b);
    void negate_col(int c);
    // col(dst) -= q * col(src)
    void submul_col(int dst, int src, const Int& q);

    bool col_is_zero(int c) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// In-place column-style Hermite normal form. After the call the first
// `rank` columns form a lower-triangular basis with positive diagonal
// entries and, in every pivot row, the entries left of the pivot reduced
// into [0, pivot). This form is the unique canonical basis of the column
// lattice, so equal lattices yield identical matrices. Remaining columns
// are zero. If `transform` is non-null it must be a cols x cols identity
// on entry and receives every column operation (used for kernels).
int hnf_columns(IntMat& m, IntMat* transform = nullptr);

// A finite product of cyclic groups Z/m_1 x ... x Z/m_r. A modulus of 1 is
// a legal trivial factor and is kept positionally.
class GroupSpec {
  public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<Int> moduli);

    int rank() const { return int(moduli_.size()); }
    const Int& modulus(int i) const { return moduli_[i]; }
    const std::vector<Int>& moduli() const { return moduli_; }
    Int order() const;

    bool operator==(const GroupSpec& o) const { return moduli_ == o.moduli_; }

  private:
    std::vector<Int> moduli_;
};

struct GroupElement {
    std::vector<Int> coords;  // coordinate i reduced into [0, m_i)

    bool is_zero() const;
    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
    std::string to_string() const;
};

// Reduce arbitrary integer coordinates into canonical range.
GroupElement reduce(const GroupSpec& spec, std::vector<Int> coords);
GroupElement zero_element(const GroupSpec& spec);
// 1 in coordinate i, 0 elsewhere (the zero element if m_i == 1).
GroupElement delta(const GroupSpec& spec, int i);
GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

// throws std::invalid_argument unless x has the right rank and reduced coords
void check_conforms(const GroupSpec& spec, const GroupElement& x);

// Canonical description of a subgroup H of a GroupSpec group G: the HNF
// basis of the preimage lattice of H in Z^r (which always contains the
// lattice spanned by the m_i e_i). The index [G : H] equals the basis
// determinant.
class SubgroupBasis {
  public:
    SubgroupBasis() = default;

    const GroupSpec& spec() const { return spec_; }
    const IntMat& basis() const { return basis_; }
    const Int& index() const { return index_; }
    Int subgroup_order() const;

    // lattice membership of a conforming group element
    bool contains(const GroupElement& x) const;

    bool operator==(const SubgroupBasis& o) const { return spec_ == o.spec_ && basis_ == o.basis_; }

    // row-major integer dump of the HNF basis, for debug reports
    std::string basis_dump() const { return basis_.to_string(); }

  private:
    friend SubgroupBasis subgroup_from_generators(const GroupSpec&, const std::vector<GroupElement>&);
    friend SubgroupBasis subgroup_from_lattice(const GroupSpec&, IntMat columns);

    GroupSpec spec_;
    IntMat basis_;  // rank x rank, canonical HNF
    Int index_ = 1;
};

SubgroupBasis subgroup_from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens);

// Kernel of the homomorphism x -> (sum_i map(j,i) x_i mod dst.m_j)_j.
// `map` is dst.rank() x src.rank(); it must satisfy map(j,i)*src.m_i = 0
// (mod dst.m_j) for the map to be well defined, otherwise
// std::invalid_argument is thrown.
SubgroupBasis homomorphism_kernel(const GroupSpec& src, const GroupSpec& dst, const IntMat& map);

// Keep only the listed coordinates (0-based, strictly increasing).
GroupSpec project_spec(const GroupSpec& spec, const std::vector<int>& keep);
GroupElement project_element(const GroupElement& x, const std::vector<int>& keep);

// Independent engine: full closure of <gens> by breadth-first addition.
// Requires order(G) <= bound.
class BruteForceClosure {
  public:
    static constexpr std::uint64_t kDefaultBound = 1000000;

    BruteForceClosure(const GroupSpec& spec, const std::vector<GroupElement>& gens,
                      std::uint64_t bound = kDefaultBound);

    const Int& size() const { return size_; }
    bool contains(const GroupElement& x) const;
    // all elements, sorted lexicographically by coordinates
    std::vector<GroupElement> elements() const;

  private:
    std::uint64_t rank_of(const GroupElement& x) const;

    GroupSpec spec_;
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint8_t> member_;
    Int size_ = 0;
};

std::vector<GroupElement> brute_force_closure(const GroupSpec& spec, const std::vector<GroupElement>& gens,
                                              std::uint64_t bound = BruteForceClosure::kDefaultBound);

}  // namespace strata
