#pragma once

// Decision layer: discriminant sets, the three sufficient conditions for
// local distinguishability, the admissible-gap check on y-congruences, and
// the exact deciders for d = 4 and d = 5.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbslocc/gbs.hpp"

namespace gbslocc {

/// GPMs that fail to commute with every element of the source difference set.
/// Any member T gives a one-way protocol: Alice measures an eigenbasis of T.
struct DiscriminantSet {
    int d = 2;
    std::vector<Gpm> witnesses;  // sorted

    bool empty() const { return witnesses.empty(); }
    bool contains(const Gpm &g) const;
};

DiscriminantSet discriminant_set(const GbsSet &s);

/// The difference set is pairwise commutative.
bool condition_commutative(const GbsSet &s);

/// For every difference (m, n), m or n is a unit in Z_d. Composite d only;
/// throws std::domain_error for prime d.
bool condition_invertible(const GbsSet &s);

/// Admissible set {0..d-1, inf} minus the y-values forced by
/// m_i*y + n_i = m_j*y + n_j (mod d). inf is forced iff m_i = m_j.
struct WangGap {
    int d = 2;
    std::set<Slope> admissible;
    std::set<Slope> nonadmissible;
    std::set<Slope> gap;
};

WangGap wang_gap(const GbsSet &s);

enum class Verdict { Distinguishable, Indistinguishable, Inconclusive };
enum class Mode { OneWay, FullLocc };
enum class Condition { T1C1, T1C2, T1C3, Thm2, Thm3, SmallSet, TooMany };

std::string_view to_string(Verdict v);
std::string_view to_string(Mode m);
std::string_view to_string(Condition c);
Verdict verdict_from_string(std::string_view s);
Mode mode_from_string(std::string_view s);
Condition condition_from_string(std::string_view s);

/// d = s * t, recorded when the composite-dimension condition fires.
struct FactorPair {
    int s = 0;
    int t = 0;
    bool operator==(const FactorPair &) const = default;
};

using Witness = std::variant<std::monostate, Gpm, FactorPair>;

struct DecisionReport {
    GbsSet set;
    Verdict verdict = Verdict::Inconclusive;
    Mode mode = Mode::OneWay;
    std::optional<Condition> condition;
    Witness witness;
    // Only for prime d and |S| >= 2.
    std::optional<int> index_cardinality;
    std::set<Slope> wang_gap;

    int modulus() const { return set.modulus(); }
    bool operator==(const DecisionReport &) const = default;
};

/// Dispatch order: small sets, too many sets, sufficient conditions
/// (discriminant witness, commutative differences, invertible coordinates),
/// then the exact d = 4 and d = 5 deciders.
DecisionReport decide(const GbsSet &s);

}  // namespace gbslocc
