#pragma once

// LU-equivalence of GBS sets at symbol level. Translating by one element
// (right multiplication by its inverse) and then conjugating by a Clifford
// operator both preserve local distinguishability; the orbit of a set under
// these moves, restricted to standard sets, is its equivalence class.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gbslocc/clifford.hpp"
#include "gbslocc/gbs.hpp"

namespace gbslocc {

/// Strictly increasing element list whose first entry is (0,0).
class CanonicalSet {
   public:
    CanonicalSet(int d, std::vector<Gpm> elements);

    int modulus() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Gpm> &elements() const { return elements_; }
    GbsSet to_gbs() const { return GbsSet(d_, elements_); }
    std::string str() const;

    bool operator==(const CanonicalSet &) const = default;
    auto operator<=>(const CanonicalSet &) const = default;

   private:
    int d_;
    std::vector<Gpm> elements_;
};

/// Subtract element `anchor` from every element and sort.
CanonicalSet anchored_translate(const GbsSet &s, std::size_t anchor);

/// Sorted form of a standard set; throws std::invalid_argument otherwise.
CanonicalSet canonical_form(const GbsSet &s);

struct OrbitReport {
    CanonicalSet representative;
    std::set<CanonicalSet> members;

    std::size_t size() const { return members.size(); }
};

/// Every anchored translate pushed through every symplectic matrix.
OrbitReport orbit(const GbsSet &n);

/// True when `s` has both some X^s and some Z^t with s, t units. Only then is
/// orbit() known to exhaust the equivalence class.
bool has_nondegenerate_xz(const GbsSet &s);

struct ClassEntry {
    std::string label;
    OrbitReport orbit;
};

struct Coverage {
    std::int64_t total_standard = 0;  // C(d^2 - 1, k - 1)
    std::int64_t covered = 0;
    std::vector<CanonicalSet> uncovered;  // sorted

    bool complete() const { return covered == total_standard; }
};

struct Classification {
    int d = 2;
    int k = 1;
    std::vector<ClassEntry> classes;
    Coverage coverage;

    /// Index of the class containing `c`, or -1.
    int class_of(const CanonicalSet &c) const;
};

/// Throws std::runtime_error when two representatives' orbits intersect.
/// Labels may be empty, in which case R1, R2, ... are used.
Classification classify(int d, int k, const std::vector<GbsSet> &representatives,
                        const std::vector<std::string> &labels = {});

/// Every standard k-subset of P(d), sorted.
std::vector<CanonicalSet> enumerate_standard_sets(int d, int k);

/// Is some anchored translate of `s` in orbit(rep)?
bool membership(const GbsSet &s, const GbsSet &rep);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace gbslocc
