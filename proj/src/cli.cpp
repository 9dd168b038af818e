#include "gbslocc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "gbslocc/catalog.hpp"
#include "gbslocc/discriminator.hpp"
#include "gbslocc/equivalence.hpp"
#include "gbslocc/numerics.hpp"
#include "gbslocc/parallel.hpp"
#include "gbslocc/report.hpp"
#include "report_json.hpp"

namespace gbslocc {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
    int d = 0;
    int k = 0;
    std::string set;
    std::string file;
    std::string reps;
    bool json = false;
    bool golden = false;
    bool emit_indist = false;
    bool members = false;
    int table = 0;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_deviation(double v) {
    std::ostringstream ss;
    ss << std::scientific << std::setprecision(3) << v;
    return ss.str();
}

int cmd_check(const Options &o, std::ostream &out) {
    std::vector<GbsSet> sets;
    const bool batch = !o.file.empty();
    if (batch) {
        sets = parse_fixture(read_file(o.file), o.d);
    } else {
        sets.push_back(GbsSet::parse(o.set, o.d));
    }
    const auto reports = parallel_map<std::optional<DecisionReport>>(sets.size(), [&](std::size_t i) {
        return std::optional<DecisionReport>(decide(sets[i]));
    });
    if (o.json) {
        if (batch) {
            ojson arr = ojson::array();
            for (const auto &r : reports) {
                arr.push_back(detail::report_to_json(*r));
            }
            out << arr.dump(2) << '\n';
        } else {
            out << report_json(*reports.front()) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            out << (i > 0 ? "\n" : "") << report_text(*reports[i]);
        }
    }
    return exit_code::kOk;
}

// Each representative's decide() verdict and index cardinality against the
// catalog; for d = 4 also class sizes and the indistinguishable rows.
std::vector<std::string> golden_mismatches(const Classification &c, const RepresentativeFamily &fam) {
    std::vector<std::string> bad;
    for (const auto &e : fam.entries) {
        const auto r = decide(e.set);
        const bool dist = r.verdict == Verdict::Distinguishable;
        if (dist != (e.verdict == KnownVerdict::Dist)) {
            bad.push_back("verdict of " + e.label);
        }
        if (e.index_cardinality && r.index_cardinality != e.index_cardinality) {
            bad.push_back("index cardinality of " + e.label);
        }
    }
    if (c.d == 4 && c.k == 4) {
        const auto t1 = golden_table1();
        for (const auto &cls : c.classes) {
            if (static_cast<std::int64_t>(cls.orbit.size()) != t1.lookup(cls.label)) {
                bad.push_back("class size of " + cls.label);
            }
        }
        std::set<CanonicalSet> indist;
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
            if (fam.entries[i].verdict == KnownVerdict::Indist) {
                indist.insert(c.classes[i].orbit.members.begin(), c.classes[i].orbit.members.end());
            }
        }
        const auto rows = golden_table2().all_rows();
        if (indist != std::set<CanonicalSet>(rows.begin(), rows.end())) {
            bad.push_back("indistinguishable rows vs reference table");
        }
    }
    return bad;
}

int cmd_classify(const Options &o, std::ostream &out, std::ostream &err) {
    std::optional<RepresentativeFamily> fam;
    std::vector<GbsSet> reps;
    std::vector<std::string> labels;
    if (!o.reps.empty()) {
        reps = parse_fixture(read_file(o.reps), o.d);
    } else if (has_representatives(o.d, o.k)) {
        fam = representatives(o.d, o.k);
        reps = fam->sets();
        labels = fam->labels();
    } else {
        err << "no built-in representatives for d=" << o.d << ", k=" << o.k << "; pass --reps FILE\n";
        return exit_code::kUnsupported;
    }
    if ((o.golden || o.emit_indist) && !fam) {
        err << "--golden and --emit-indist need the built-in representatives\n";
        return exit_code::kUnsupported;
    }

    const Classification c = classify(o.d, o.k, reps, labels);
    // Class sizes are reference data only where a reference count table exists.
    const bool sizes_are_reference = o.d == 4 && o.k == 4 && fam;
    std::vector<std::string> mismatches;
    if (o.golden) {
        mismatches = golden_mismatches(c, *fam);
    }

    if (o.emit_indist) {
        SetTable t{"", o.d, {}, {}};
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
            if (fam->entries[i].verdict == KnownVerdict::Indist) {
                const auto &m = c.classes[i].orbit.members;
                t.groups.push_back({c.classes[i].label, {m.begin(), m.end()}});
            }
        }
        out << format_set_table(t);
    } else if (o.json) {
        ojson j;
        j["d"] = c.d;
        j["k"] = c.k;
        j["size_source"] = sizes_are_reference ? "reference" : "computed";
        j["classes"] = ojson::array();
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
            ojson cls;
            cls["label"] = c.classes[i].label;
            cls["representative"] = c.classes[i].orbit.representative.str();
            cls["size"] = c.classes[i].orbit.size();
            cls["verdict"] = fam ? ojson(fam->entries[i].verdict == KnownVerdict::Dist ? "DIST" : "INDIST") : nullptr;
            if (o.members) {
                cls["members"] = ojson::array();
                for (const auto &m : c.classes[i].orbit.members) {
                    cls["members"].push_back(m.str());
                }
            }
            j["classes"].push_back(cls);
        }
        j["coverage"]["total_standard"] = c.coverage.total_standard;
        j["coverage"]["covered"] = c.coverage.covered;
        j["coverage"]["uncovered"] = ojson::array();
        for (const auto &u : c.coverage.uncovered) {
            j["coverage"]["uncovered"].push_back(u.str());
        }
        if (o.golden) {
            j["golden"]["ok"] = mismatches.empty();
            j["golden"]["mismatches"] = mismatches;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "classify d=" << c.d << " k=" << c.k << " (class sizes "
            << (sizes_are_reference ? "checked against reference counts with --golden" : "computed") << ")\n";
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
            const auto &cls = c.classes[i];
            out << "  " << cls.label << "  size " << cls.orbit.size() << "  rep " << cls.orbit.representative.str();
            if (fam) {
                out << "  " << (fam->entries[i].verdict == KnownVerdict::Dist ? "DIST" : "INDIST");
            }
            out << '\n';
            if (o.members) {
                for (const auto &m : cls.orbit.members) {
                    out << "    " << m.str() << '\n';
                }
            }
        }
        out << "coverage: " << c.coverage.covered << " of " << c.coverage.total_standard << " standard sets, "
            << c.coverage.uncovered.size() << " uncovered\n";
        for (const auto &u : c.coverage.uncovered) {
            out << "  uncovered " << u.str() << '\n';
        }
        if (o.golden) {
            out << "golden: " << (mismatches.empty() ? "ok" : "MISMATCH") << '\n';
        }
    }
    for (const auto &m : mismatches) {
        err << "golden mismatch: " << m << '\n';
    }
    return mismatches.empty() ? exit_code::kOk : exit_code::kGoldenMismatch;
}

int cmd_orbit(const Options &o, std::ostream &out) {
    const GbsSet s = GbsSet::parse(o.set, o.d);
    const OrbitReport r = orbit(s);
    const bool complete = has_nondegenerate_xz(s);
    if (o.json) {
        ojson j;
        j["d"] = o.d;
        j["set"] = s.str();
        j["representative"] = r.representative.str();
        j["size"] = r.size();
        j["complete"] = complete;
        j["members"] = ojson::array();
        for (const auto &m : r.members) {
            j["members"].push_back(m.str());
        }
        out << j.dump(2) << '\n';
        return exit_code::kOk;
    }
    out << "orbit of " << s.str() << " (d=" << o.d << "): size " << r.size() << '\n';
    if (!complete) {
        out << "note: no translate contains I, X^s and Z^t with s, t invertible; the orbit is the set of\n"
               "      standard sets reachable by translation and symplectic maps and may not exhaust the class\n";
    }
    for (const auto &m : r.members) {
        out << m.str() << '\n';
    }
    return exit_code::kOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    const GbsSet s = GbsSet::parse(o.set, o.d);
    const DecisionReport r = decide(s);
    if (r.verdict != Verdict::Distinguishable) {
        err << "verdict is " << to_string(r.verdict) << "; nothing to certify\n";
        return exit_code::kNothingToCertify;
    }

    // Same order as decide(): a discriminant witness, then commuting
    // differences, then invertible coordinates. Small sets take whichever applies.
    std::string method;
    double deviation = 0.0;
    const DiscriminantSet ds = discriminant_set(s);
    if (!ds.empty()) {
        const Gpm t = std::holds_alternative<Gpm>(r.witness) ? std::get<Gpm>(r.witness) : ds.witnesses.front();
        method = "one_way_gram_check T=" + t.str();
        deviation = one_way_gram_check(s, t);
    } else if (condition_commutative(s)) {
        method = "commuting_witness";
        deviation = witness_deviation(s, commuting_witness(s));
    } else if (!is_prime(o.d) && condition_invertible(s)) {
        const int p = smallest_prime_factor(o.d);
        method = "composite_witness s=" + std::to_string(p) + " t=" + std::to_string(o.d / p);
        deviation = witness_deviation(s, composite_witness(s, p, o.d / p));
    } else {
        err << "distinguishable by " << (r.condition ? to_string(*r.condition) : "-")
            << " with no constructive certificate available\n";
        return exit_code::kNothingToCertify;
    }
    const bool ok = deviation < kVerifyTolerance;
    if (o.json) {
        ojson j;
        j["d"] = o.d;
        j["set"] = s.str();
        j["condition"] = r.condition ? ojson(to_string(*r.condition)) : nullptr;
        j["method"] = method;
        j["max_deviation"] = deviation;
        j["tolerance"] = kVerifyTolerance;
        j["certified"] = ok;
        out << j.dump(2) << '\n';
    } else {
        out << "set: " << s.str() << '\n';
        out << "method: " << method << '\n';
        out << "max_deviation: " << format_deviation(deviation) << '\n';
        out << "certified: " << (ok ? "yes" : "no") << " (tolerance " << format_deviation(kVerifyTolerance) << ")\n";
    }
    return ok ? exit_code::kOk : exit_code::kVerifyFailed;
}

int cmd_tables(const Options &o, std::ostream &out) {
    if (o.table == 0 || o.table == 1) {
        const auto t1 = golden_table1();
        out << "# " << t1.name << '\n';
        for (const auto &r : t1.rows) {
            out << r.label << ' ' << r.count << '\n';
        }
        out << "total " << t1.total() << '\n';
    }
    if (o.table == 0 || o.table == 2) {
        out << golden_table2_fixture();
    }
    return exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local distinguishability of generalized Bell state sets", "gbs-locc"};
    app.require_subcommand(1);
    Options o;

    auto *check = app.add_subcommand("check", "Decide local distinguishability of a set");
    check->add_option("-d,--dim", o.d, "Local dimension d")->required()->check(CLI::Range(2, 64));
    auto *set_opt = check->add_option("-s,--set", o.set, "Set literal, e.g. 0,0;0,1;1,0;1,2");
    auto *file_opt = check->add_option("-f,--file", o.file, "Batch file, one set per line");
    set_opt->excludes(file_opt);
    check->add_flag("--json", o.json, "JSON output");

    auto *classify_cmd = app.add_subcommand("classify", "Partition standard k-sets into equivalence classes");
    classify_cmd->add_option("-d,--dim", o.d, "Local dimension d")->required()->check(CLI::Range(2, 16));
    classify_cmd->add_option("-k,--size", o.k, "Set size")->required()->check(CLI::Range(1, 256));
    classify_cmd->add_option("--reps", o.reps, "Representatives file, one set per line");
    classify_cmd->add_flag("--golden", o.golden, "Compare with the built-in reference data");
    classify_cmd->add_flag("--emit-indist", o.emit_indist, "Print members of the indistinguishable classes");
    classify_cmd->add_flag("--members", o.members, "List class members");
    classify_cmd->add_flag("--json", o.json, "JSON output");

    auto *orbit_cmd = app.add_subcommand("orbit", "List the standard sets equivalent to a set");
    orbit_cmd->add_option("-d,--dim", o.d, "Local dimension d")->required()->check(CLI::Range(2, 16));
    orbit_cmd->add_option("-s,--set", o.set, "Set literal")->required();
    orbit_cmd->add_flag("--json", o.json, "JSON output");

    auto *verify = app.add_subcommand("verify", "Numerically certify a distinguishable verdict");
    verify->add_option("-d,--dim", o.d, "Local dimension d")->required()->check(CLI::Range(2, 64));
    verify->add_option("-s,--set", o.set, "Set literal")->required();
    verify->add_flag("--json", o.json, "JSON output");

    auto *tables = app.add_subcommand("tables", "Print the built-in reference tables");
    tables->add_option("--table", o.table, "1 or 2 (default: both)")->check(CLI::Range(1, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kOk : exit_code::kParseError;
    }

    try {
        if (*check) {
            if (o.set.empty() && o.file.empty()) {
                err << "check: one of --set or --file is required\n";
                return exit_code::kParseError;
            }
            return cmd_check(o, out);
        }
        if (*classify_cmd) {
            return cmd_classify(o, out, err);
        }
        if (*orbit_cmd) {
            return cmd_orbit(o, out);
        }
        if (*verify) {
            return cmd_verify(o, out, err);
        }
        return cmd_tables(o, out);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::kParseError;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_code::kParseError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kVerifyFailed;
    }
}

}  // namespace gbslocc
