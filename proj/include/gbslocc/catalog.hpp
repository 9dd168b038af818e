#pragma once

// Reference data: representative families of the known classifications at
// d = 4 and d = 5, the class-size counts for d = 4, the full list of locally
// indistinguishable standard 4-sets at d = 4, and worked regression cases.
//
// Fixture text format: one set per line, elements "m,n" joined by ';', lines
// starting with '#' are comments, UTF-8, trailing newline required.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbslocc/discriminator.hpp"
#include "gbslocc/equivalence.hpp"

namespace gbslocc {

enum class KnownVerdict { Dist, Indist };

struct FamilyEntry {
    std::string label;
    GbsSet set;
    KnownVerdict verdict;
    // Discriminant index cardinality, recorded for the d = 5 families.
    std::optional<int> index_cardinality;
};

struct RepresentativeFamily {
    int d = 2;
    int k = 1;
    std::vector<FamilyEntry> entries;

    std::vector<GbsSet> sets() const;
    std::vector<std::string> labels() const;
};

/// Supported: (4, 4), (5, 4), (5, 5). Throws std::out_of_range otherwise.
RepresentativeFamily representatives(int d, int k);
bool has_representatives(int d, int k);

struct CountRow {
    std::string label;
    std::int64_t count;
};

struct CountTable {
    std::string name;
    std::vector<CountRow> rows;

    std::int64_t lookup(std::string_view label) const;
    std::int64_t total() const;
};

struct SetGroup {
    std::string label;
    std::vector<CanonicalSet> rows;
};

struct SetTable {
    std::string name;
    int d = 2;
    // Leading comment lines, without the '#'.
    std::vector<std::string> preamble;
    std::vector<SetGroup> groups;

    std::size_t total() const;
    std::vector<CanonicalSet> all_rows() const;
};

/// Class sizes of the ten d = 4, k = 4 classes, in representative order.
CountTable golden_table1();

/// The 156 locally indistinguishable standard 4-sets at d = 4, by class.
SetTable golden_table2();

/// The shipped fixture text behind golden_table2(), byte for byte.
std::string_view golden_table2_fixture();

struct ExampleFixture {
    std::string name;
    GbsSet set;
    Verdict verdict;
    std::optional<Condition> condition;
    // A member the discriminant set must contain.
    std::optional<Gpm> witness_member;
    std::optional<bool> discriminant_empty;
    std::optional<bool> wang_gap_empty;
    std::optional<int> index_cardinality;
};

std::vector<ExampleFixture> example_fixtures();

/// Parses fixture text. Group headers "# class LABEL (N)" start a new group;
/// other comments are ignored.
SetTable parse_set_table(std::string_view text, int d, std::string name = {});

/// Plain list of sets from fixture text (comments ignored, order kept).
std::vector<GbsSet> parse_fixture(std::string_view text, int d);

/// Renders sets one per line with a trailing newline.
std::string format_fixture(const std::vector<CanonicalSet> &rows);

/// Inverse of parse_set_table for tables carrying group headers.
std::string format_set_table(const SetTable &table);

}  // namespace gbslocc
