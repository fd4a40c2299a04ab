#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "obsaudit/boolfun.hpp"

namespace obsaudit {

/// Dense bit-packed matrix over GF(2), row-major, 64 columns per word.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(uint64_t rows, uint64_t cols);

    static Gf2Matrix identity(uint64_t n);
    static Gf2Matrix from_hex_rows(uint64_t cols, const std::vector<std::string>& rows);
    static Gf2Matrix from_bits(const std::vector<std::vector<int>>& bits);

    uint64_t rows() const { return rows_; }
    uint64_t cols() const { return cols_; }
    uint64_t words_per_row() const { return wpr_; }

    bool get(uint64_t r, uint64_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(uint64_t r, uint64_t c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        uint64_t& w = w_[r * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }
    void flip(uint64_t r, uint64_t c) { w_[r * wpr_ + (c >> 6)] ^= uint64_t(1) << (c & 63); }

    std::span<uint64_t> row(uint64_t r) { return {w_.data() + r * wpr_, wpr_}; }
    std::span<const uint64_t> row(uint64_t r) const { return {w_.data() + r * wpr_, wpr_}; }

    void xor_row(uint64_t dst, uint64_t src);   // row dst ^= row src
    void swap_rows(uint64_t a, uint64_t b);

    Gf2Matrix operator+(const Gf2Matrix& o) const;   // entrywise XOR
    bool operator==(const Gf2Matrix&) const = default;

    /// y = A * v with v packed little-endian over columns.
    std::vector<uint64_t> mul_vec(std::span<const uint64_t> v) const;

    std::vector<std::string> to_hex_rows() const;
    std::string pretty() const;   // 0/1 grid, one row per line

private:
    uint64_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace obsaudit
