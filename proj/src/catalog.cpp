#include "gbslocc/catalog.hpp"

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "embedded_data.hpp"

namespace gbslocc {

namespace {

GbsSet make_set(int d, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Gpm> el;
    for (auto [m, n] : pairs) {
        el.emplace_back(m, n, d);
    }
    return GbsSet(d, std::move(el));
}

FamilyEntry entry(std::string label, int d, std::initializer_list<std::pair<int, int>> pairs, KnownVerdict v,
                  std::optional<int> card = std::nullopt) {
    return {std::move(label), make_set(d, pairs), v, card};
}

constexpr auto D = KnownVerdict::Dist;
constexpr auto I = KnownVerdict::Indist;

// X^m Z^n is written (m, n). Labels: Gs_ab stands for the class written with
// superscript s and subscript ab.
RepresentativeFamily family_d4_k4() {
    return {4,
            4,
            {
                entry("K", 4, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}, D),
                entry("L", 4, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, D),
                entry("G1_20", 4, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}, D),
                entry("G1_31", 4, {{0, 0}, {1, 0}, {0, 1}, {3, 1}}, D),
                entry("G1_33", 4, {{0, 0}, {1, 0}, {0, 1}, {3, 3}}, D),
                entry("G2_12", 4, {{0, 0}, {1, 0}, {0, 2}, {1, 2}}, D),
                entry("G2_30", 4, {{0, 0}, {1, 0}, {0, 2}, {3, 0}}, D),
                entry("G1_12", 4, {{0, 0}, {1, 0}, {0, 1}, {1, 2}}, I),
                entry("G2_20", 4, {{0, 0}, {1, 0}, {0, 2}, {2, 0}}, I),
                entry("G2_32", 4, {{0, 0}, {1, 0}, {0, 2}, {3, 2}}, I),
            }};
}

// d = 5 classes written {I, Z, X^a, X^s Z^t} are labelled Ga_st.
RepresentativeFamily family_d5_k4() {
    return {5,
            4,
            {
                entry("H", 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}, D, 1),
                entry("K", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}}, D, 4),
                entry("L", 5, {{0, 0}, {0, 1}, {0, 2}, {2, 0}}, D, 4),
                entry("G1_11", 5, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, D, 4),
                entry("G1_12", 5, {{0, 0}, {0, 1}, {1, 0}, {1, 2}}, D, 5),
                entry("G2_21", 5, {{0, 0}, {0, 1}, {2, 0}, {2, 1}}, D, 4),
                entry("G1_44", 5, {{0, 0}, {0, 1}, {1, 0}, {4, 4}}, I, 6),
                entry("G1_22", 5, {{0, 0}, {0, 1}, {1, 0}, {2, 2}}, I, 6),
            }};
}

RepresentativeFamily family_d5_k5() {
    return {5,
            5,
            {
                entry("H1", 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}, D, 1),
                entry("H2", 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}}, D, 5),
                entry("K1", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}, D, 5),
                entry("K2", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {3, 0}}, D, 5),
                entry("K3", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {4, 0}}, I, 6),
                entry("K4", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}}, D, 5),
                entry("K5", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}}, I, 6),
                entry("K6", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 1}}, I, 6),
                entry("K7", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 2}}, I, 6),
                entry("K8", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {3, 2}}, I, 6),
                entry("K9", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {3, 3}}, I, 6),
                entry("K10", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {3, 4}}, I, 6),
                entry("K11", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {4, 1}}, I, 6),
                entry("K12", 5, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {4, 2}}, D, 4),
                entry("L1", 5, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}}, D, 5),
                entry("L2", 5, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 2}}, I, 6),
                entry("L3", 5, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {3, 1}}, I, 6),
                entry("L4", 5, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {3, 2}}, D, 4),
                entry("G1", 5, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}}, I, 6),
                entry("G2", 5, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {3, 2}}, D, 5),
                entry("G3", 5, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {4, 1}}, I, 6),
            }};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename F>
void for_each_line(std::string_view text, F &&fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        fn(text.substr(0, nl), line_no);
        if (nl == std::string_view::npos) {
            break;
        }
        text.remove_prefix(nl + 1);
    }
}

constexpr std::string_view kGroupPrefix = "# class ";

}  // namespace

std::vector<GbsSet> RepresentativeFamily::sets() const {
    std::vector<GbsSet> out;
    for (const auto &e : entries) {
        out.push_back(e.set);
    }
    return out;
}

std::vector<std::string> RepresentativeFamily::labels() const {
    std::vector<std::string> out;
    for (const auto &e : entries) {
        out.push_back(e.label);
    }
    return out;
}

bool has_representatives(int d, int k) { return (d == 4 && k == 4) || (d == 5 && (k == 4 || k == 5)); }

RepresentativeFamily representatives(int d, int k) {
    if (d == 4 && k == 4) {
        return family_d4_k4();
    }
    if (d == 5 && k == 4) {
        return family_d5_k4();
    }
    if (d == 5 && k == 5) {
        return family_d5_k5();
    }
    throw std::out_of_range("no representative family for d=" + std::to_string(d) + ", k=" + std::to_string(k));
}

std::int64_t CountTable::lookup(std::string_view label) const {
    for (const auto &r : rows) {
        if (r.label == label) {
            return r.count;
        }
    }
    throw std::out_of_range("no row labelled " + std::string(label));
}

std::int64_t CountTable::total() const {
    std::int64_t t = 0;
    for (const auto &r : rows) {
        t += r.count;
    }
    return t;
}

std::size_t SetTable::total() const {
    std::size_t t = 0;
    for (const auto &g : groups) {
        t += g.rows.size();
    }
    return t;
}

std::vector<CanonicalSet> SetTable::all_rows() const {
    std::vector<CanonicalSet> out;
    for (const auto &g : groups) {
        out.insert(out.end(), g.rows.begin(), g.rows.end());
    }
    return out;
}

CountTable golden_table1() {
    return {"standard 4-sets per class, d=4",
            {{"K", 1},
             {"L", 6},
             {"G1_20", 192},
             {"G1_31", 48},
             {"G1_33", 16},
             {"G2_12", 12},
             {"G2_30", 24},
             {"G1_12", 96},
             {"G2_20", 48},
             {"G2_32", 12}}};
}

std::string_view golden_table2_fixture() { return detail::kTable2Fixture; }

SetTable golden_table2() { return parse_set_table(golden_table2_fixture(), 4, "indistinguishable standard 4-sets, d=4"); }

SetTable parse_set_table(std::string_view text, int d, std::string name) {
    SetTable out{std::move(name), d, {}, {}};
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        if (raw.starts_with(kGroupPrefix)) {
            std::string_view rest = raw.substr(kGroupPrefix.size());
            out.groups.push_back({std::string(trim(rest.substr(0, rest.find(' ')))), {}});
            return;
        }
        if (raw.starts_with("#")) {
            if (out.groups.empty()) {
                out.preamble.emplace_back(raw.substr(1));
            }
            return;
        }
        const std::string_view line = trim(raw);
        if (line.empty()) {
            return;
        }
        if (out.groups.empty()) {
            out.groups.push_back({"", {}});
        }
        try {
            out.groups.back().rows.push_back(canonical_form(GbsSet::parse(line, d)));
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("fixture line " + std::to_string(line_no) + ": " + e.what());
        }
    });
    return out;
}

std::vector<GbsSet> parse_fixture(std::string_view text, int d) {
    std::vector<GbsSet> out;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.starts_with("#")) {
            return;
        }
        try {
            out.push_back(GbsSet::parse(line, d));
        } catch (const std::invalid_argument &e) {
            throw ParseError(ParseError::Kind::MalformedToken,
                             "fixture line " + std::to_string(line_no) + ": " + e.what());
        }
    });
    return out;
}

std::string format_fixture(const std::vector<CanonicalSet> &rows) {
    std::string out;
    for (const auto &r : rows) {
        out += r.str();
        out.push_back('\n');
    }
    return out;
}

std::string format_set_table(const SetTable &table) {
    std::ostringstream out;
    for (const auto &p : table.preamble) {
        out << '#' << p << '\n';
    }
    for (const auto &g : table.groups) {
        out << kGroupPrefix << g.label << " (" << g.rows.size() << ")\n";
        out << format_fixture(g.rows);
    }
    return out.str();
}

std::vector<ExampleFixture> example_fixtures() {
    std::vector<ExampleFixture> out;
    const auto dist = Verdict::Distinguishable;
    const auto indist = Verdict::Indistinguishable;

    // Worked examples on which the admissible-gap test is silent.
    out.push_back({"L1", make_set(6, {{0, 0}, {0, 1}, {1, 0}, {1, 4}, {5, 5}}), dist, Condition::T1C1, Gpm(2, 3, 6),
                   false, true, std::nullopt});
    out.push_back({"L2", make_set(4, {{1, 2}, {1, 0}, {3, 2}, {3, 0}}), dist, Condition::T1C2, std::nullopt, true, true,
                   std::nullopt});
    out.push_back({"L3", make_set(6, {{2, 3}, {2, 0}, {5, 3}, {5, 0}}), dist, Condition::T1C2, std::nullopt, true, true,
                   std::nullopt});
    out.push_back({"L4", make_set(4, {{1, 2}, {1, 3}, {2, 2}, {0, 1}}), dist, Condition::T1C3, std::nullopt, true, true,
                   std::nullopt});

    // d = 4 representatives with the discriminant members named in the
    // necessity argument.
    for (const auto &e : family_d4_k4().entries) {
        ExampleFixture f{"d4/" + e.label, e.set, e.verdict == D ? dist : indist, std::nullopt, std::nullopt,
                         std::nullopt, std::nullopt, std::nullopt};
        if (e.label == "G1_20" || e.label == "G1_31" || e.label == "G2_12" || e.label == "G2_30") {
            f.witness_member = Gpm(1, 1, 4);
            f.condition = Condition::T1C1;
        }
        if (e.verdict == I) {
            f.condition = Condition::Thm2;
            f.discriminant_empty = true;
        }
        out.push_back(std::move(f));
    }

    for (const auto &fam : {family_d5_k4(), family_d5_k5()}) {
        for (const auto &e : fam.entries) {
            const bool is_dist = e.verdict == D;
            out.push_back({"d5k" + std::to_string(fam.k) + "/" + e.label, e.set, is_dist ? dist : indist,
                           is_dist ? Condition::T1C1 : Condition::Thm3, std::nullopt, !is_dist, std::nullopt,
                           e.index_cardinality});
        }
    }
    return out;
}

}  // namespace gbslocc
