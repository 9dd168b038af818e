#pragma once

// The single-qudit Clifford group in its classical representation: 2x2
// matrices over Z_d with determinant 1, acting linearly on (m, n).

#include <set>
#include <string>
#include <vector>

#include "gbslocc/gbs.hpp"

namespace gbslocc {

/// [[a1, b1], [a2, b2]] with a1*b2 - a2*b1 = 1 (mod d).
class SympMat {
   public:
    SympMat(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2, int d);

    static SympMat identity(int d) { return {1, 0, 0, 1, d}; }
    /// Fourier gate: (m, n) -> (-n, m).
    static SympMat fourier(int d) { return {0, -1, 1, 0, d}; }
    /// Phase gate: (m, n) -> (m, m + n).
    static SympMat phase(int d) { return {1, 0, 1, 1, d}; }

    int a1() const { return a1_; }
    int b1() const { return b1_; }
    int a2() const { return a2_; }
    int b2() const { return b2_; }
    int modulus() const { return d_; }
    std::string str() const;

    bool operator==(const SympMat &) const = default;
    auto operator<=>(const SympMat &) const = default;

   private:
    int a1_, b1_, a2_, b2_, d_;
};

Gpm apply(const SympMat &w, const Gpm &g);

/// Matrix product w1 * w2, so apply(compose(w1, w2), g) = apply(w1, apply(w2, g)).
SympMat compose(const SympMat &w1, const SympMat &w2);

/// All determinant-1 matrices, lexicographic in (a1, b1, a2, b2).
std::vector<SympMat> enumerate_symplectic(int d);

/// Closure of {fourier, phase} under composition.
std::set<SympMat> generated_group(int d);

/// d^3 * prod_{p | d} (1 - p^-2).
std::int64_t symplectic_group_order(int d);

}  // namespace gbslocc
