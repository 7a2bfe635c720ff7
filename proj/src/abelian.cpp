#include "strata/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool fits_u64(const Int& v) {
    if (sgn(v) < 0) return false;
    return mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int& v) {
    std::uint64_t lo = mpz_get_ui(v.get_mpz_t());
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 8 * sizeof(unsigned long)) {
        Int hi = v >> 32;
        lo = (std::uint64_t(mpz_get_ui(hi.get_mpz_t())) << 32) | (lo & 0xffffffffu);
    }
    return lo;
}

// g = u*a + v*b with g >= 0
static Int xgcd(const Int& a, const Int& b, Int& u, Int& v) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void IntMat::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMat::negate_col(int c) {
    for (int i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMat::submul_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) -= q * at(i, src);
}

bool IntMat::col_is_zero(int c) const {
    for (int i = 0; i < rows_; ++i)
        if (at(i, c) != 0) return false;
    return true;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// Combine columns c0, c1 so that row i becomes (gcd, 0). The 2x2 column
// transform has determinant 1.
static void gcd_combine(IntMat& m, IntMat* u, int i, int c0, int c1) {
    const Int alpha = m.at(i, c0);
    const Int beta = m.at(i, c1);
    if (beta == 0) return;
    if (alpha == 0) {
        m.swap_cols(c0, c1);
        m.negate_col(c1);
        if (u) {
            u->swap_cols(c0, c1);
            u->negate_col(c1);
        }
        return;
    }
    Int p, q;
    Int g = xgcd(alpha, beta, p, q);
    Int a = alpha / g, b = beta / g;
    auto apply = [&](IntMat& t) {
        for (int r = 0; r < t.rows(); ++r) {
            Int x = t.at(r, c0), y = t.at(r, c1);
            t.at(r, c0) = p * x + q * y;
            t.at(r, c1) = a * y - b * x;
        }
    };
    apply(m);
    if (u) apply(*u);
}

int hnf_columns(IntMat& m, IntMat* transform) {
    const int rows = m.rows(), cols = m.cols();
    int pivot = 0;
    for (int i = 0; i < rows && pivot < cols; ++i) {
        int lead = -1;
        for (int j = pivot; j < cols; ++j)
            if (m.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        m.swap_cols(pivot, lead);
        if (transform) transform->swap_cols(pivot, lead);
        for (int j = pivot + 1; j < cols; ++j) gcd_combine(m, transform, i, pivot, j);
        if (m.at(i, pivot) < 0) {
            m.negate_col(pivot);
            if (transform) transform->negate_col(pivot);
        }
        const Int& d = m.at(i, pivot);
        for (int j = 0; j < pivot; ++j) {
            Int q = floor_div(m.at(i, j), d);
            m.submul_col(j, pivot, q);
            if (transform) transform->submul_col(j, pivot, q);
        }
        ++pivot;
    }
    return pivot;
}

GroupSpec::GroupSpec(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
    for (const Int& m : moduli_)
        if (m < 1) throw std::invalid_argument("group modulus must be >= 1");
}

Int GroupSpec::order() const {
    Int o = 1;
    for (const Int& m : moduli_) o *= m;
    return o;
}

bool GroupElement::is_zero() const {
    for (const Int& c : coords)
        if (c != 0) return false;
    return true;
}

std::string GroupElement::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].get_str();
    }
    return s + ")";
}

GroupElement reduce(const GroupSpec& spec, std::vector<Int> coords) {
    if (int(coords.size()) != spec.rank()) throw std::invalid_argument("coordinate count does not match group rank");
    for (int i = 0; i < spec.rank(); ++i) coords[i] = floor_mod(coords[i], spec.modulus(i));
    return GroupElement{std::move(coords)};
}

GroupElement zero_element(const GroupSpec& spec) {
    return GroupElement{std::vector<Int>(spec.rank(), 0)};
}

GroupElement delta(const GroupSpec& spec, int i) {
    if (i < 0 || i >= spec.rank()) throw std::invalid_argument("delta index out of range");
    GroupElement e = zero_element(spec);
    if (spec.modulus(i) > 1) e.coords[i] = 1;
    return e;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
    check_conforms(spec, a);
    check_conforms(spec, b);
    std::vector<Int> c(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) {
        c[i] = a.coords[i] + b.coords[i];
        if (c[i] >= spec.modulus(i)) c[i] -= spec.modulus(i);
    }
    return GroupElement{std::move(c)};
}

void check_conforms(const GroupSpec& spec, const GroupElement& x) {
    if (int(x.coords.size()) != spec.rank()) throw std::invalid_argument("element rank does not match group spec");
    for (int i = 0; i < spec.rank(); ++i)
        if (x.coords[i] < 0 || x.coords[i] >= spec.modulus(i))
            throw std::invalid_argument("coordinate out of range for group spec");
}

Int SubgroupBasis::subgroup_order() const {
    return spec_.order() / index_;
}

bool SubgroupBasis::contains(const GroupElement& x) const {
    check_conforms(spec_, x);
    const int r = spec_.rank();
    // solve basis * y = x over the integers by forward substitution
    std::vector<Int> rem(x.coords);
    for (int i = 0; i < r; ++i) {
        Int q = floor_div(rem[i], basis_.at(i, i));
        if (rem[i] != q * basis_.at(i, i)) return false;
        for (int k = i; k < r; ++k) rem[k] -= q * basis_.at(k, i);
    }
    return true;
}

// Canonicalize the column lattice (must contain the moduli lattice, hence
// full rank) into a SubgroupBasis.
SubgroupBasis subgroup_from_lattice(const GroupSpec& spec, IntMat columns) {
    const int r = spec.rank();
    int rank = hnf_columns(columns);
    if (rank != r) throw std::logic_error("subgroup lattice is not full rank");
    SubgroupBasis sb;
    sb.spec_ = spec;
    sb.basis_ = IntMat(r, r);
    sb.index_ = 1;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) sb.basis_.at(i, j) = columns.at(i, j);
        sb.index_ *= sb.basis_.at(i, i);
    }
    return sb;
}

SubgroupBasis subgroup_from_generators(const GroupSpec& spec, const std::vector<GroupElement>& gens) {
    const int r = spec.rank();
    for (const GroupElement& g : gens) check_conforms(spec, g);
    IntMat cols(r, int(gens.size()) + r);
    for (int j = 0; j < int(gens.size()); ++j)
        for (int i = 0; i < r; ++i) cols.at(i, j) = gens[j].coords[i];
    for (int i = 0; i < r; ++i) cols.at(i, int(gens.size()) + i) = spec.modulus(i);
    return subgroup_from_lattice(spec, std::move(cols));
}

SubgroupBasis homomorphism_kernel(const GroupSpec& src, const GroupSpec& dst, const IntMat& map) {
    const int r = src.rank(), t = dst.rank();
    if (map.rows() != t || map.cols() != r) throw std::invalid_argument("homomorphism matrix has wrong shape");
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < r; ++i)
            if (floor_mod(map.at(j, i) * src.modulus(i), dst.modulus(j)) != 0)
                throw std::invalid_argument("matrix does not define a homomorphism between the given groups");

    // Integer null space of [map | -diag(dst moduli)]; the kernel lattice in
    // Z^r is its (injective) projection to the first r coordinates.
    IntMat work(t, r + t);
    for (int j = 0; j < t; ++j) {
        for (int i = 0; i < r; ++i) work.at(j, i) = map.at(j, i);
        work.at(j, r + j) = -dst.modulus(j);
    }
    IntMat u(r + t, r + t);
    for (int k = 0; k < r + t; ++k) u.at(k, k) = 1;
    int rank = hnf_columns(work, &u);

    IntMat kernel_cols(r, r + t - rank);
    for (int j = rank; j < r + t; ++j) {
        if (!work.col_is_zero(j)) throw std::logic_error("null space extraction failed");
        for (int i = 0; i < r; ++i) kernel_cols.at(i, j - rank) = u.at(i, j);
    }
    return subgroup_from_lattice(src, std::move(kernel_cols));
}

GroupSpec project_spec(const GroupSpec& spec, const std::vector<int>& keep) {
    std::vector<Int> m;
    m.reserve(keep.size());
    for (int i : keep) {
        if (i < 0 || i >= spec.rank()) throw std::invalid_argument("projection index out of range");
        m.push_back(spec.modulus(i));
    }
    return GroupSpec(std::move(m));
}

GroupElement project_element(const GroupElement& x, const std::vector<int>& keep) {
    std::vector<Int> c;
    c.reserve(keep.size());
    for (int i : keep) {
        if (i < 0 || i >= int(x.coords.size())) throw std::invalid_argument("projection index out of range");
        c.push_back(x.coords[i]);
    }
    return GroupElement{std::move(c)};
}

BruteForceClosure::BruteForceClosure(const GroupSpec& spec, const std::vector<GroupElement>& gens,
                                     std::uint64_t bound) : spec_(spec) {
    Int order = spec.order();
    if (!fits_u64(order) || to_u64(order) > bound)
        throw group_too_large("group order exceeds brute-force bound");
    const std::uint64_t n = to_u64(order);
    const int r = spec.rank();

    moduli_.resize(r);
    strides_.resize(r);
    std::uint64_t stride = 1;
    for (int i = r - 1; i >= 0; --i) {
        moduli_[i] = to_u64(spec.modulus(i));
        strides_[i] = stride;
        stride *= moduli_[i];
    }

    std::vector<std::vector<std::uint64_t>> small_gens;
    small_gens.reserve(gens.size());
    for (const GroupElement& g : gens) {
        check_conforms(spec, g);
        std::vector<std::uint64_t> sg(r);
        for (int i = 0; i < r; ++i) sg[i] = to_u64(g.coords[i]);
        small_gens.push_back(std::move(sg));
    }

    member_.assign(n, 0);
    std::vector<std::uint64_t> queue;
    queue.reserve(1024);
    member_[0] = 1;
    queue.push_back(0);
    std::uint64_t count = 1;
    std::vector<std::uint64_t> c(r);
    while (!queue.empty()) {
        std::uint64_t cur = queue.back();
        queue.pop_back();
        std::uint64_t rest = cur;
        for (int i = 0; i < r; ++i) {
            c[i] = rest / strides_[i];
            rest %= strides_[i];
        }
        for (const auto& g : small_gens) {
            std::uint64_t nxt = 0;
            for (int i = 0; i < r; ++i) {
                std::uint64_t v = c[i] + g[i];
                if (v >= moduli_[i]) v -= moduli_[i];
                nxt += v * strides_[i];
            }
            if (!member_[nxt]) {
                member_[nxt] = 1;
                ++count;
                queue.push_back(nxt);
            }
        }
    }
    size_ = Int(static_cast<unsigned long>(count));
}

std::uint64_t BruteForceClosure::rank_of(const GroupElement& x) const {
    std::uint64_t rank = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) rank += to_u64(x.coords[i]) * strides_[i];
    return rank;
}

bool BruteForceClosure::contains(const GroupElement& x) const {
    check_conforms(spec_, x);
    return member_[rank_of(x)] != 0;
}

std::vector<GroupElement> BruteForceClosure::elements() const {
    std::vector<GroupElement> out;
    const int r = spec_.rank();
    for (std::uint64_t rank = 0; rank < member_.size(); ++rank) {
        if (!member_[rank]) continue;
        std::vector<Int> c(r);
        std::uint64_t rest = rank;
        for (int i = 0; i < r; ++i) {
            c[i] = Int(static_cast<unsigned long>(rest / strides_[i]));
            rest %= strides_[i];
        }
        out.push_back(GroupElement{std::move(c)});
    }
    return out;  // rank order is lexicographic coordinate order
}

std::vector<GroupElement> brute_force_closure(const GroupSpec& spec, const std::vector<GroupElement>& gens,
                                              std::uint64_t bound) {
    return BruteForceClosure(spec, gens, bound).elements();
}

}  // namespace strata
