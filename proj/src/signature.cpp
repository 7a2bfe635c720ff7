#include "strata/signature.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace strata {

int Signature::sum() const {
    int s = 0;
    for (int d : degrees_) s += d;
    return s;
}

int Signature::genus() const {
    return (sum() + 2) / 2;
}

int Signature::zero_count() const {
    int n = 0;
    for (int d : degrees_)
        if (d > 0) ++n;
    return n;
}

int Signature::pole_count() const {
    int n = 0;
    for (int d : degrees_)
        if (d < 0) ++n;
    return n;
}

SingularityRef singularity(const Signature& sig, int index) {
    if (index < 0 || index >= sig.size()) throw std::invalid_argument("singularity index out of range");
    return SingularityRef{index, sig.degree(index)};
}

ValidationResult validate(const std::vector<int>& degrees) {
    ValidationResult res;
    if (degrees.empty()) {
        res.errors.push_back("empty degree list");
        return res;
    }
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());

    long long sum = 0;
    bool zero_entry = false;
    int poles = 0, simple_poles = 0;
    for (int d : sorted) {
        if (d == 0) zero_entry = true;
        if (d < 0) ++poles;
        if (d == -1) ++simple_poles;
        sum += d;
    }
    if (zero_entry) res.errors.push_back("zero entry");
    if (sum % 2 != 0) res.errors.push_back("degree sum is odd");
    if (sum % 2 == 0 && sum < -2) res.errors.push_back("negative genus");
    if (poles == 0) res.errors.push_back("no pole (holomorphic signature)");
    // a lone simple pole cannot carry the required zero residue sum
    if (poles == 1 && simple_poles == 1) res.errors.push_back("sole simple pole");
    if (!res.errors.empty()) return res;
    res.signature = Signature(std::move(sorted));
    return res;
}

namespace {

// strips ASCII whitespace and turns U+2212 into '-'
std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        unsigned char c = text[i];
        if (std::isspace(c)) continue;
        if (c == 0xe2 && i + 2 < text.size() && (unsigned char)text[i + 1] == 0x88 &&
            (unsigned char)text[i + 2] == 0x92) {
            out += '-';
            i += 2;
            continue;
        }
        out += char(c);
    }
    return out;
}

bool parse_int(const std::string& s, size_t& pos, long long& out) {
    size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    size_t digits = 0;
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1000000) return false;  // degrees this large are never meaningful
        ++digits;
        ++pos;
    }
    if (digits == 0) return false;
    out = (s[start] == '-') ? -v : v;
    return true;
}

}  // namespace

ValidationResult parse_signature(const std::string& text) {
    ValidationResult res;
    std::string s = normalize(text);
    if (s.rfind("H(", 0) == 0) {
        if (s.empty() || s.back() != ')') {
            res.errors.push_back("malformed token: unmatched 'H('");
            return res;
        }
        s = s.substr(2, s.size() - 3);
    }
    if (s.empty()) {
        res.errors.push_back("empty degree list");
        return res;
    }
    std::vector<int> degrees;
    size_t pos = 0;
    while (true) {
        long long deg = 0;
        if (!parse_int(s, pos, deg)) {
            res.errors.push_back("malformed token at position " + std::to_string(pos));
            return res;
        }
        long long mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (!parse_int(s, pos, mult) || mult < 1 || mult > 64) {
                res.errors.push_back("malformed multiplicity at position " + std::to_string(pos));
                return res;
            }
        }
        for (long long k = 0; k < mult; ++k) degrees.push_back(int(deg));
        if (pos == s.size()) break;
        if (s[pos] != ',') {
            res.errors.push_back("malformed token at position " + std::to_string(pos));
            return res;
        }
        ++pos;
    }
    return validate(degrees);
}

std::string format_signature(const Signature& sig) {
    std::string out;
    for (int i = 0; i < sig.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(sig.degree(i));
    }
    return out;
}

SignaturePredicates predicates(const Signature& sig) {
    SignaturePredicates p{};
    std::vector<int> zeroes, poles;
    for (int d : sig.degrees())
        (d > 0 ? zeroes : poles).push_back(d);

    int simple_poles = 0;
    for (int d : poles)
        if (d == -1) ++simple_poles;
    p.has_simple_pole = simple_poles > 0;
    p.poles_are_exactly_two_simple = (poles.size() == 2 && simple_poles == 2);

    p.odd_degree_count = 0;
    for (int d : sig.degrees())
        if (d % 2 != 0) ++p.odd_degree_count;
    p.all_degrees_even = (p.odd_degree_count == 0);

    auto pair_or_double = [](const std::vector<int>& v, bool need_even_single) {
        if (v.size() == 1) return !need_even_single || v[0] % 2 == 0;
        if (v.size() == 2) return v[0] == v[1];
        return false;
    };
    p.is_hyperelliptic_type =
        !zeroes.empty() && pair_or_double(zeroes, true) && pair_or_double(poles, true);

    bool zeroes_even = true;
    for (int d : zeroes)
        if (d % 2 != 0) zeroes_even = false;
    bool poles_even = true;
    for (int d : poles)
        if (d % 2 != 0) poles_even = false;
    p.is_even_type = zeroes_even && (poles_even || p.poles_are_exactly_two_simple);
    return p;
}

std::vector<int> separatrix_counts(const Signature& sig) {
    std::vector<int> h(sig.size());
    for (int i = 0; i < sig.size(); ++i) h[i] = std::abs(sig.degree(i) + 1);
    return h;
}

bool pole_zero_residue_possible(const Signature& sig, const SingularityRef& pole) {
    if (pole.index < 0 || pole.index >= sig.size() || sig.degree(pole.index) != pole.degree ||
        pole.degree > -2)
        throw std::invalid_argument("reference is not a non-simple pole of the signature");
    if (sig.genus() == 0 && sig.pole_count() == 2 && sig.zero_count() == 1) return false;
    if (sig.pole_count() == 2) {
        for (int i = 0; i < sig.size(); ++i)
            if (i != pole.index && sig.is_pole(i) && sig.is_simple_pole(i)) return false;
    }
    return true;
}

}  // namespace strata
