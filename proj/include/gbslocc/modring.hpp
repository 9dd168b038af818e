#pragma once

// Exact arithmetic in Z_d: gcd, inverses, linear congruences and the
// congruence n*x - m*y = 0 (mod d) that decides when two generalized
// Pauli matrices commute.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gbslocc {

/// Thrown when two values that must share a modulus do not.
class ModulusMismatch : public std::invalid_argument {
   public:
    ModulusMismatch(int lhs, int rhs);
};

void require_modulus(int d);
void require_same_modulus(int lhs, int rhs);

/// Reduces an arbitrary integer into [0, d).
constexpr int reduce(std::int64_t value, int d) {
    std::int64_t r = value % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

/// An element of Z_d, always stored normalized.
class Residue {
   public:
    Residue(std::int64_t value, int d);

    int value() const { return value_; }
    int modulus() const { return d_; }

    Residue operator+(Residue other) const;
    Residue operator-(Residue other) const;
    Residue operator*(Residue other) const;
    Residue operator-() const;

    bool operator==(const Residue &) const = default;
    auto operator<=>(const Residue &) const = default;

   private:
    int value_;
    int d_;
};

struct GcdExt {
    std::int64_t g;
    std::int64_t u;
    std::int64_t v;
};

/// Extended Euclid; g = gcd(|a|, |b|) >= 0 and u*a + v*b = g. gcd(0, 0) = 0.
GcdExt gcd_ext(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);

bool is_prime(int d);

/// Smallest prime factor of d >= 2.
int smallest_prime_factor(int d);

/// Distinct prime divisors of d in increasing order.
std::vector<int> prime_factors(int d);

/// The b with a*b = 1 (mod d), or nullopt when gcd(a, d) != 1.
std::optional<Residue> mod_inverse(Residue a);

/// All y in Z_d with a*y = b (mod d), sorted ascending.
std::vector<Residue> solve_linear_congruence(Residue a, Residue b);

/// Solution set of n*x - m*y = 0 (mod d) for a fixed (m, n).
struct SolutionSet {
    int modulus = 0;
    // Sorted lexicographically, no duplicates.
    std::vector<std::pair<int, int>> pairs;

    bool contains(int x, int y) const;
    std::size_t size() const { return pairs.size(); }
};

SolutionSet solve_weyl_congruence(Residue m, Residue n);

/// d * gcd(m, n, d); (m, n) = (0, 0) is rejected.
std::int64_t weyl_solution_count(Residue m, Residue n);

}  // namespace gbslocc
