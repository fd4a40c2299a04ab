#include "obsaudit/boolfun.hpp"

#include <algorithm>
#include <bit>

namespace obsaudit {

namespace {

// mask of bit positions j with (j & (1 << i)) == 0, for i = 0..5
constexpr uint64_t kStrideMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

uint64_t tail_mask(int n) {
    return n >= 6 ? ~uint64_t(0) : (uint64_t(1) << (uint64_t(1) << n)) - 1;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit in truth table literal");
}

}  // namespace

TruthTable::TruthTable(int n, int arity_cap) : n_(n) {
    if (n < 1 || n > arity_cap || arity_cap > kArityCap)
        throw std::invalid_argument("arity out of range [1, " +
                                    std::to_string(arity_cap) + "]");
    w_.assign(n_ >= 6 ? (uint64_t(1) << (n_ - 6)) : 1, 0);
}

TruthTable TruthTable::atom(int n, uint64_t point) {
    TruthTable t(n);
    if (point >= t.size()) throw std::invalid_argument("atom point out of range");
    t.set(point, true);
    return t;
}

TruthTable TruthTable::constant(int n, bool one) {
    TruthTable t(n);
    if (one) {
        for (auto& w : t.w_) w = ~uint64_t(0);
        if (n < 6) t.w_[0] = tail_mask(n);
    }
    return t;
}

TruthTable TruthTable::random(int n, Rng& rng) {
    TruthTable t(n);
    for (auto& w : t.w_) w = rng.next();
    if (n < 6) t.w_[0] &= tail_mask(n);
    return t;
}

uint64_t TruthTable::weight() const {
    uint64_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool TruthTable::is_zero() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

TruthTable& TruthTable::operator^=(const TruthTable& o) {
    if (n_ != o.n_) throw std::invalid_argument("arity mismatch in XOR");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::string TruthTable::to_hex() const {
    uint64_t digits = std::max<uint64_t>(1, size() / 4);
    std::string s(digits, '0');
    for (uint64_t d = 0; d < digits; ++d) {
        uint64_t nib = (w_[(d * 4) >> 6] >> ((d * 4) & 63)) & 0xf;
        s[digits - 1 - d] = "0123456789abcdef"[nib];
    }
    return s;
}

TruthTable TruthTable::from_hex(int n, const std::string& hex) {
    TruthTable t(n);
    uint64_t digits = std::max<uint64_t>(1, t.size() / 4);
    if (hex.size() != digits)
        throw std::invalid_argument("hex literal must have exactly " +
                                    std::to_string(digits) + " digits for n=" +
                                    std::to_string(n));
    for (uint64_t d = 0; d < digits; ++d) {
        uint64_t nib = uint64_t(hex_digit(hex[digits - 1 - d]));
        t.w_[(d * 4) >> 6] |= nib << ((d * 4) & 63);
    }
    if (n < 6 && (t.w_[0] & ~tail_mask(n)))
        throw std::invalid_argument("hex literal sets bits beyond 2^n");
    return t;
}

TruthTable translate(const TruthTable& f, uint64_t v) {
    if (v >= f.size()) throw std::invalid_argument("translation point out of range");
    TruthTable g = f;
    auto w = g.words();
    for (int i = 0; i < f.arity(); ++i) {
        if (!((v >> i) & 1)) continue;
        if (i < 6) {
            uint64_t m = kStrideMask[i];
            int s = 1 << i;
            for (auto& x : w) x = ((x >> s) & m) | ((x & m) << s);
        } else {
            uint64_t stride = uint64_t(1) << (i - 6);
            for (uint64_t k = 0; k < w.size(); ++k)
                if (!(k & stride)) std::swap(w[k], w[k ^ stride]);
        }
    }
    return g;
}

// The ANF (Moebius) butterfly is an involution: running it on a table gives
// monomial coefficients, running it on coefficients evaluates the polynomial.
namespace {
void moebius_inplace(std::span<uint64_t> w, int n) {
    for (int i = 0; i < std::min(n, 6); ++i) {
        uint64_t m = kStrideMask[i];
        int s = 1 << i;
        for (auto& x : w) x ^= (x & m) << s;
    }
    for (int i = 6; i < n; ++i) {
        uint64_t stride = uint64_t(1) << (i - 6);
        for (uint64_t k = 0; k < w.size(); ++k)
            if (k & stride) w[k] ^= w[k ^ stride];
    }
}
}  // namespace

AnfPoly anf_of(const TruthTable& t) {
    std::vector<uint64_t> w(t.words().begin(), t.words().end());
    moebius_inplace(w, t.arity());
    AnfPoly a;
    a.n = t.arity();
    for (uint64_t k = 0; k < w.size(); ++k) {
        uint64_t x = w[k];
        while (x) {
            int b = std::countr_zero(x);
            a.monomials.push_back((k << 6) | uint64_t(b));
            x &= x - 1;
        }
    }
    return a;
}

TruthTable table_of(const AnfPoly& a) {
    TruthTable t(a.n);
    for (uint64_t m : a.monomials) {
        if (m >= t.size()) throw std::invalid_argument("monomial mask out of range");
        t.flip(m);
    }
    moebius_inplace(t.words(), a.n);
    return t;
}

std::string AnfPoly::to_decimal_list() const {
    std::string s;
    for (size_t i = 0; i < monomials.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(monomials[i]);
    }
    return s;
}

PredicateFamily predicate_family_from_name(const std::string& name) {
    if (name == "pi1") return PredicateFamily::pi1;
    if (name == "pi2") return PredicateFamily::pi2;
    if (name == "delta") return PredicateFamily::delta;
    throw std::invalid_argument("unknown predicate family: " + name);
}

const char* predicate_family_name(PredicateFamily f) {
    switch (f) {
        case PredicateFamily::pi1: return "pi1";
        case PredicateFamily::pi2: return "pi2";
        case PredicateFamily::delta: return "delta";
    }
    return "?";
}

AnfPoly predicate_family(PredicateFamily f, int n) {
    if (n < 1 || n > kArityCap) throw std::invalid_argument("arity out of range");
    AnfPoly a;
    a.n = n;
    switch (f) {
        case PredicateFamily::pi1: {
            if (n > kAnfFamilyCap) throw cap_exceeded("pi1 materializes 2^n monomials");
            for (uint64_t m = 1; m < (uint64_t(1) << n); ++m) {
                int r = std::popcount(m) & 3;
                if (r == 1 || r == 2) a.monomials.push_back(m);
            }
            break;
        }
        case PredicateFamily::pi2: {
            if (n > kAnfFamilyCap) throw cap_exceeded("pi2 materializes 2^n points");
            // Literal evaluation of the printed double sum: the inner product
            // prod_{i in I} x_i * prod_{j not in I} (1 - x_j) is the indicator
            // [support(x) = I], so the mod-2 count over even-size I is the
            // even-weight indicator regardless of summation order.
            TruthTable t(n);
            for (uint64_t x = 0; x < t.size(); ++x)
                t.set(x, (std::popcount(x) & 1) == 0);
            return anf_of(t);
        }
        case PredicateFamily::delta: {
            for (uint64_t k = 0;; ++k) {
                uint64_t sq = (2 * k + 1) * (2 * k + 1);
                if (sq > uint64_t(n)) break;
                a.monomials.push_back(uint64_t(1) << (sq - 1));
            }
            break;
        }
    }
    std::sort(a.monomials.begin(), a.monomials.end());
    return a;
}

Lift lift_from_name(const std::string& name) {
    if (name == "zero_one") return Lift::zero_one;
    if (name == "plus_minus") return Lift::plus_minus;
    throw std::invalid_argument("unknown lift: " + name);
}

const char* lift_name(Lift l) {
    return l == Lift::zero_one ? "zero_one" : "plus_minus";
}

namespace {
void wht_inplace(std::vector<int64_t>& v) {
    for (size_t len = 1; len < v.size(); len <<= 1)
        for (size_t blk = 0; blk < v.size(); blk += 2 * len)
            for (size_t j = blk; j < blk + len; ++j) {
                int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
}
}  // namespace

WalshSpectrum walsh(const TruthTable& t, Lift lift, int cap) {
    if (t.arity() > cap) throw cap_exceeded("walsh: integer spectrum beyond cap");
    WalshSpectrum w;
    w.n = t.arity();
    w.lift = lift;
    w.coeff.resize(t.size());
    for (uint64_t x = 0; x < t.size(); ++x) {
        int v = t.get(x) ? 1 : 0;
        w.coeff[x] = lift == Lift::zero_one ? v : 1 - 2 * v;
    }
    wht_inplace(w.coeff);
    return w;
}

std::vector<int64_t> walsh_inverse_scaled(const WalshSpectrum& w) {
    std::vector<int64_t> v = w.coeff;
    wht_inplace(v);
    return v;
}

}  // namespace obsaudit
