#pragma once

// Symbol-level generalized Pauli matrices X^m Z^n and generalized Bell state
// sets. Global phases are dropped throughout: only exponent pairs matter.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gbslocc/modring.hpp"

namespace gbslocc {

/// X^m Z^n over Z_d.
struct Gpm {
    int m = 0;
    int n = 0;
    int d = 2;

    Gpm() = default;
    Gpm(std::int64_t m_, std::int64_t n_, int d_);

    bool is_identity() const { return m == 0 && n == 0; }
    std::string str() const;

    bool operator==(const Gpm &) const = default;
    auto operator<=>(const Gpm &) const = default;
};

Gpm gpm_product(const Gpm &a, const Gpm &b);
Gpm gpm_inverse(const Gpm &a);

/// e with U_a U_b = w^e U_b U_a, where w = exp(2 pi i / d).
Residue weyl_exponent(const Gpm &a, const Gpm &b);
bool commutes(const Gpm &a, const Gpm &b);

/// Every unordered pair commutes. Vacuously true for empty input.
bool is_commutative(std::span<const Gpm> elements);

class ParseError : public std::invalid_argument {
   public:
    enum class Kind { Empty, MalformedToken, OutOfRange, Duplicate };

    ParseError(Kind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

   private:
    Kind kind_;
};

/// An ordered, duplicate-free, nonempty list of GPMs sharing one modulus.
/// Represents the GBS set {(I (x) X^m Z^n)|Phi>}.
class GbsSet {
   public:
    GbsSet(int d, std::vector<Gpm> elements);

    /// Wire format "m,n;m,n;..." with whitespace ignored.
    static GbsSet parse(std::string_view text, int d);

    int modulus() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Gpm> &elements() const { return elements_; }
    const Gpm &operator[](std::size_t i) const { return elements_[i]; }
    bool contains(const Gpm &g) const;
    bool is_standard() const { return contains(Gpm(0, 0, d_)); }

    /// Same wire format as parse(), in stored order.
    std::string str() const;

    bool operator==(const GbsSet &) const = default;

   private:
    int d_;
    std::vector<Gpm> elements_;
};

/// All (m_j - m_k, n_j - n_k), j != k, deduplicated and sorted. Negation closed.
struct DiffSet {
    int d = 2;
    std::vector<Gpm> elements;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    bool contains(const Gpm &g) const;
};

DiffSet difference_set(const GbsSet &s);

/// m^{-1} n for prime d, or infinity when m = 0.
class Slope {
   public:
    static Slope infinity() { return Slope(kInf); }
    static Slope finite(int value) { return Slope(value); }

    bool is_infinite() const { return value_ == kInf; }
    int value() const;
    std::string str() const;

    bool operator==(const Slope &) const = default;
    // Finite slopes order by value; infinity sorts last.
    auto operator<=>(const Slope &) const = default;

   private:
    static constexpr int kInf = 1 << 30;
    explicit Slope(int v) : value_(v) {}
    int value_;
};

Slope slope(const Gpm &g);

/// The discriminant index set {slope(g) : g in difference_set(s)}; prime d only.
std::set<Slope> index_set(const GbsSet &s);

}  // namespace gbslocc
