#pragma once

#include <cstdint>
#include <vector>

#include "obsaudit/gf2matrix.hpp"
#include "obsaudit/observer.hpp"

namespace obsaudit {

struct EchelonForm {
    Gf2Matrix rref;                    // fully reduced, zero rows dropped
    std::vector<uint64_t> pivot_cols;  // leftmost pivots, one per rref row
    uint64_t rank = 0;
};

EchelonForm reduced_echelon(Gf2Matrix a);
uint64_t rank(const Gf2Matrix& a);

struct KernelBasis {
    uint64_t dim = 0;
    uint64_t cols = 0;
    std::vector<std::vector<uint64_t>> vectors;   // packed, one per kernel dim

    bool vec_get(uint64_t i, uint64_t c) const {
        return (vectors[i][c >> 6] >> (c & 63)) & 1;
    }
};

/// Right nullspace basis with deterministic leftmost pivoting. Every vector
/// satisfies A v = 0; the free-column construction makes them independent.
KernelBasis kernel(const Gf2Matrix& a);

/// Kernel of O_n + I over the point-ascending atom basis: vector bit i is
/// the coefficient of the atom at point i, so basis vectors convert directly
/// to truth tables.
KernelBasis fixed_space(int n, int dense_cap = kDenseCap);

TruthTable table_from_kernel_vector(int n, const std::vector<uint64_t>& v);

struct KrylovResult {
    uint64_t dim = 0;
    std::vector<TruthTable> basis;   // seed, O seed, ... up to dependence
    Gf2Matrix restriction;           // O over this basis: column j = coords of O b_j
};

/// GF(2) span of {seed, O seed, O^2 seed, ...}; throws cap_exceeded if the
/// space does not close within cap vectors.
KrylovResult krylov_space(Observer o, const TruthTable& seed, uint64_t cap = 64);

/// GF(2) polynomial, coefficient bits lowest degree first, no trailing zeros
/// except the canonical zero polynomial {}.
struct Gf2Poly {
    std::vector<uint8_t> c;

    uint64_t degree() const { return c.empty() ? 0 : c.size() - 1; }
    bool operator==(const Gf2Poly&) const = default;
    std::string str() const;   // e.g. "x^2 + 1"
};

/// Integer polynomial, lowest degree first.
struct IntPoly {
    std::vector<long long> c;

    bool operator==(const IntPoly&) const = default;
    std::string str() const;
    std::string coeff_list() const;   // "c0,c1,..."
};

/// Shortest LFSR for a GF(2) sequence (Berlekamp-Massey); returns the
/// connection polynomial C with C[0] = 1.
Gf2Poly berlekamp_massey(const std::vector<uint8_t>& seq);

/// Minimal polynomial of O on the Krylov space of seed, from the scalar
/// sequences <u, O^k seed> with seeded random probes u, verified by direct
/// substitution. Throws after the retry budget is exhausted. The zero seed
/// returns the degenerate polynomial 1.
Gf2Poly minimal_polynomial(Observer o, const TruthTable& seed,
                           uint64_t probe_seed = 1, int retries = 16);

/// p(O) applied to f, Horner over GF(2).
TruthTable eval_poly_at_operator(const Gf2Poly& p, Observer o, const TruthTable& f);

/// Characteristic polynomial det(xI - A) of the 0/1 integer lift of a GF(2)
/// matrix, exact (division-free Berkowitz over wide integers).
IntPoly char_poly_lift(const Gf2Matrix& restriction);

/// Characteristic polynomial over GF(2) itself (Berkowitz again, mod 2);
/// used to cross-check every emitted integer lift.
Gf2Poly char_poly_gf2(const Gf2Matrix& a);

/// det(I - u A) for the 0/1 lift of A, as a polynomial in u. This is the
/// reversed characteristic polynomial; constant term always 1.
IntPoly det_i_minus_u(const Gf2Matrix& a);

}  // namespace obsaudit
