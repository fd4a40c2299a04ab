#pragma once

#include <cstdint>
#include <optional>

#include "obsaudit/boolfun.hpp"
#include "obsaudit/gf2matrix.hpp"

namespace obsaudit {

/// The observation operator O_n over GF(2):
///   O(f)(x) = XOR over i = 1..n of f(x with bit i flipped),
/// i.e. the hypercube neighbor-sum mod 2. Stateless; GF(2)-linear.
struct Observer {
    int n;
};

/// Word-level implementation: one masked shift-XOR pass per input bit
/// (block swap of stride 2^i), no per-point loop.
TruthTable apply(Observer o, const TruthTable& f);

/// Reference per-point loop, kept as benchmark baseline and oracle.
TruthTable apply_naive(Observer o, const TruthTable& f);

bool is_invariant(Observer o, const TruthTable& f);

enum class AtomOrder {
    paper_descending,   // column i = atom at point 2^n-1-i (p_1..p_{2^n} order)
    point_ascending,    // column i = atom at point i
};

/// Matrix of O_n over the atom basis; entry (g, f) = 1 iff atom g appears in
/// apply(atom f). paper_descending reproduces the printed worked-example
/// layout; everything else in the toolkit uses point_ascending.
Gf2Matrix matrix(Observer o, AtomOrder order = AtomOrder::paper_descending,
                 int dense_cap = kDenseCap);

struct OrbitReport {
    TruthTable seed;
    std::optional<uint64_t> period;   // empty: no cycle within max_steps
    uint64_t preperiod = 0;
    uint64_t orbit_size = 0;          // distinct elements seen (preperiod + period)
};

/// Brent cycle detection on the forward orbit f, O(f), O^2(f), ...
OrbitReport orbit(Observer o, const TruthTable& f, uint64_t max_steps);

}  // namespace obsaudit
