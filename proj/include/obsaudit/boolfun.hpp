#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "obsaudit/rng.hpp"

namespace obsaudit {

inline constexpr int kArityCap = 28;       // truth table <= 32 MiB
inline constexpr int kDenseCap = 14;       // full 2^n x 2^n bit matrix <= 32 MiB
inline constexpr int kAnfFamilyCap = 20;   // pi1/pi2 materialize up to 2^n monomials

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Boolean function on {0,1}^n as a packed table of 2^n bits.
/// Bit at index x is f(x), with x read as an n-bit integer whose least
/// significant bit is the first input x1. XOR of tables is the sum in the
/// function algebra over GF(2). Values are immutable by convention once
/// built; mutators exist for construction only.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n, int arity_cap = kArityCap);

    static TruthTable atom(int n, uint64_t point);   // indicator of one point
    static TruthTable constant(int n, bool one);
    static TruthTable random(int n, Rng& rng);
    static TruthTable from_hex(int n, const std::string& hex);

    int arity() const { return n_; }
    uint64_t size() const { return uint64_t(1) << n_; }
    uint64_t num_words() const { return w_.size(); }

    bool get(uint64_t x) const { return (w_[x >> 6] >> (x & 63)) & 1; }
    void set(uint64_t x, bool v) {
        uint64_t m = uint64_t(1) << (x & 63);
        if (v) w_[x >> 6] |= m; else w_[x >> 6] &= ~m;
    }
    void flip(uint64_t x) { w_[x >> 6] ^= uint64_t(1) << (x & 63); }

    uint64_t weight() const;
    bool is_zero() const;

    TruthTable& operator^=(const TruthTable& o);
    friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
    bool operator==(const TruthTable&) const = default;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    std::string to_hex() const;    // most significant nibble first, LSB = point 0

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

/// g(x) = f(x ^ v): the translation action of the point group.
TruthTable translate(const TruthTable& f, uint64_t v);

/// Algebraic normal form: XOR of monomials prod_{i in S} x_i, one subset
/// mask per monomial (bit i-1 of the mask <-> variable x_i). Masks kept
/// sorted so equality is canonical. The empty mask is the constant 1.
struct AnfPoly {
    int n = 0;
    std::vector<uint64_t> monomials;

    bool operator==(const AnfPoly&) const = default;
    std::string to_decimal_list() const;
};

AnfPoly anf_of(const TruthTable& t);
TruthTable table_of(const AnfPoly& a);

enum class PredicateFamily { pi1, pi2, delta };
PredicateFamily predicate_family_from_name(const std::string& name);
const char* predicate_family_name(PredicateFamily f);

/// Explicit predicate families:
///   pi1   = XOR over subsets I with |I| = 1,2 (mod 4) of prod_{i in I} x_i
///   pi2   = double sum over even-size subsets of the exact-support
///           indicator products, reduced mod 2 (collapses to the even-weight
///           indicator under every reading of the summation order)
///   delta = XOR of x_{(2k+1)^2} over odd squares (2k+1)^2 <= n
AnfPoly predicate_family(PredicateFamily f, int n);

enum class Lift { zero_one, plus_minus };
Lift lift_from_name(const std::string& name);
const char* lift_name(Lift l);

/// Integer Walsh coefficients w(S) = sum_x (-1)^{<S,x>} g(x) for the chosen
/// integer lift of the table (g = f, or g = 1 - 2f).
struct WalshSpectrum {
    int n = 0;
    Lift lift = Lift::zero_one;
    std::vector<int64_t> coeff;
};

inline constexpr int kWalshCap = 24;   // 2^24 int64 = 128 MiB

WalshSpectrum walsh(const TruthTable& t, Lift lift, int cap = kWalshCap);

/// Applies the same butterfly again; returns 2^n * g.
std::vector<int64_t> walsh_inverse_scaled(const WalshSpectrum& w);

// Paper atom indexing for n = 3 style listings: p_i is the atom at point
// 2^n - i (descending point order, p_1 = the all-ones point).
inline uint64_t paper_atom_point(int n, int i) { return (uint64_t(1) << n) - uint64_t(i); }

}  // namespace obsaudit
