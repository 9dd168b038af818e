#include "gbslocc/discriminator.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>

namespace gbslocc {

bool DiscriminantSet::contains(const Gpm &g) const {
    return std::binary_search(witnesses.begin(), witnesses.end(), g);
}

DiscriminantSet discriminant_set(const GbsSet &s) {
    const int d = s.modulus();
    const DiffSet deltas = difference_set(s);
    // Union of the commuting loci S(m, n) over the difference set.
    std::vector<char> excluded(static_cast<std::size_t>(d) * d, 0);
    for (const auto &g : deltas.elements) {
        for (const auto &[x, y] : solve_weyl_congruence(Residue(g.m, d), Residue(g.n, d)).pairs) {
            excluded[static_cast<std::size_t>(x) * d + y] = 1;
        }
    }
    DiscriminantSet out{d, {}};
    if (deltas.empty()) {
        return out;
    }
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            if (!excluded[static_cast<std::size_t>(x) * d + y]) {
                out.witnesses.emplace_back(x, y, d);
            }
        }
    }
    return out;
}

bool condition_commutative(const GbsSet &s) { return is_commutative(difference_set(s).elements); }

bool condition_invertible(const GbsSet &s) {
    const int d = s.modulus();
    if (is_prime(d)) {
        throw std::domain_error("the invertible-coordinate condition only applies to composite d");
    }
    for (const auto &g : difference_set(s).elements) {
        if (gcd(g.m, d) != 1 && gcd(g.n, d) != 1) {
            return false;
        }
    }
    return true;
}

WangGap wang_gap(const GbsSet &s) {
    const int d = s.modulus();
    WangGap out{d, {}, {}, {}};
    for (int y = 0; y < d; ++y) {
        out.admissible.insert(Slope::finite(y));
    }
    out.admissible.insert(Slope::infinity());

    const auto &el = s.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = i + 1; j < el.size(); ++j) {
            const Residue a(static_cast<std::int64_t>(el[i].m) - el[j].m, d);
            const Residue b(static_cast<std::int64_t>(el[j].n) - el[i].n, d);
            for (const auto &y : solve_linear_congruence(a, b)) {
                out.nonadmissible.insert(Slope::finite(y.value()));
            }
            if (a.value() == 0) {
                out.nonadmissible.insert(Slope::infinity());
            }
        }
    }
    std::set_difference(out.admissible.begin(), out.admissible.end(), out.nonadmissible.begin(),
                        out.nonadmissible.end(), std::inserter(out.gap, out.gap.end()));
    return out;
}

namespace {

constexpr std::array kVerdictNames = {"DISTINGUISHABLE", "INDISTINGUISHABLE", "INCONCLUSIVE"};
constexpr std::array kModeNames = {"ONE_WAY", "FULL_LOCC"};
constexpr std::array kConditionNames = {"T1_C1", "T1_C2", "T1_C3", "THM2", "THM3", "SMALL_SET", "TOO_MANY"};

template <typename Enum, std::size_t N>
Enum lookup(const std::array<const char *, N> &names, std::string_view s, const char *what) {
    for (std::size_t i = 0; i < N; ++i) {
        if (s == names[i]) {
            return static_cast<Enum>(i);
        }
    }
    throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(Verdict v) { return kVerdictNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Mode m) { return kModeNames[static_cast<std::size_t>(m)]; }
std::string_view to_string(Condition c) { return kConditionNames[static_cast<std::size_t>(c)]; }

Verdict verdict_from_string(std::string_view s) { return lookup<Verdict>(kVerdictNames, s, "verdict"); }
Mode mode_from_string(std::string_view s) { return lookup<Mode>(kModeNames, s, "mode"); }
Condition condition_from_string(std::string_view s) { return lookup<Condition>(kConditionNames, s, "condition"); }

DecisionReport decide(const GbsSet &s) {
    const int d = s.modulus();
    const auto k = static_cast<int>(s.size());
    DecisionReport r{s, Verdict::Inconclusive, Mode::OneWay, std::nullopt, {}, std::nullopt, {}};
    if (k >= 2) {
        r.wang_gap = wang_gap(s).gap;
        if (is_prime(d)) {
            r.index_cardinality = static_cast<int>(index_set(s).size());
        }
    }

    // Two orthogonal states are always locally distinguishable; three GBSs are for d >= 3.
    if (k <= 2 || (k == 3 && d >= 3)) {
        r.verdict = Verdict::Distinguishable;
        r.mode = Mode::FullLocc;
        r.condition = Condition::SmallSet;
        return r;
    }
    if (k >= d + 1) {
        r.verdict = Verdict::Indistinguishable;
        r.mode = Mode::FullLocc;
        r.condition = Condition::TooMany;
        return r;
    }

    const DiscriminantSet ds = discriminant_set(s);
    if (!ds.empty()) {
        r.verdict = Verdict::Distinguishable;
        r.mode = Mode::OneWay;
        r.condition = Condition::T1C1;
        r.witness = ds.witnesses.front();
        return r;
    }
    if (condition_commutative(s)) {
        r.verdict = Verdict::Distinguishable;
        r.mode = Mode::OneWay;
        r.condition = Condition::T1C2;
        return r;
    }
    if (!is_prime(d) && condition_invertible(s)) {
        const int p = smallest_prime_factor(d);
        r.verdict = Verdict::Distinguishable;
        r.mode = Mode::OneWay;
        r.condition = Condition::T1C3;
        r.witness = FactorPair{p, d / p};
        return r;
    }

    if (d == 4 && k == 4) {
        r.verdict = Verdict::Indistinguishable;
        r.mode = Mode::FullLocc;
        r.condition = Condition::Thm2;
    } else if (d == 5 && (k == 4 || k == 5)) {
        r.verdict = Verdict::Indistinguishable;
        r.mode = k == 4 ? Mode::OneWay : Mode::FullLocc;
        r.condition = Condition::Thm3;
    } else {
        r.verdict = Verdict::Inconclusive;
    }
    return r;
}

}  // namespace gbslocc
