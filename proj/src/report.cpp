#include "gbslocc/report.hpp"

#include <sstream>

#include "report_json.hpp"

namespace gbslocc {

namespace detail {

namespace {

nlohmann::ordered_json slope_json(const Slope &s) {
    if (s.is_infinite()) {
        return "inf";
    }
    return s.value();
}

Slope slope_from_json(const nlohmann::ordered_json &j) {
    if (j.is_string() && j.get<std::string>() == "inf") {
        return Slope::infinity();
    }
    if (j.is_number_integer()) {
        return Slope::finite(j.get<int>());
    }
    throw std::invalid_argument("wang_gap entries must be integers or \"inf\"");
}

}  // namespace

nlohmann::ordered_json report_to_json(const DecisionReport &r) {
    nlohmann::ordered_json j;
    j["d"] = r.modulus();
    j["set"] = r.set.str();
    j["verdict"] = to_string(r.verdict);
    j["mode"] = to_string(r.mode);
    j["condition"] = r.condition ? nlohmann::ordered_json(to_string(*r.condition)) : nullptr;
    if (const auto *g = std::get_if<Gpm>(&r.witness)) {
        j["witness"] = {g->m, g->n};
    } else if (const auto *f = std::get_if<FactorPair>(&r.witness)) {
        j["witness"] = {f->s, f->t};
    } else {
        j["witness"] = nullptr;
    }
    j["index_cardinality"] = r.index_cardinality ? nlohmann::ordered_json(*r.index_cardinality) : nullptr;
    j["wang_gap"] = nlohmann::ordered_json::array();
    for (const auto &s : r.wang_gap) {
        j["wang_gap"].push_back(slope_json(s));
    }
    return j;
}

DecisionReport report_from_json(const nlohmann::ordered_json &j) {
    try {
        const int d = j.at("d").get<int>();
        DecisionReport r{GbsSet::parse(j.at("set").get<std::string>(), d), Verdict::Inconclusive, Mode::OneWay,
                           std::nullopt, {}, std::nullopt, {}};
        r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        r.mode = mode_from_string(j.at("mode").get<std::string>());
        if (!j.at("condition").is_null()) {
            r.condition = condition_from_string(j.at("condition").get<std::string>());
        }
        const auto &w = j.at("witness");
        if (!w.is_null()) {
            const auto pair = w.get<std::vector<int>>();
            if (pair.size() != 2) {
                throw std::invalid_argument("witness must have two entries");
            }
            if (r.condition == Condition::T1C3) {
                r.witness = FactorPair{pair[0], pair[1]};
            } else {
                r.witness = Gpm(pair[0], pair[1], d);
            }
        }
        if (!j.at("index_cardinality").is_null()) {
            r.index_cardinality = j.at("index_cardinality").get<int>();
        }
        for (const auto &s : j.at("wang_gap")) {
            r.wang_gap.insert(slope_from_json(s));
        }
        return r;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
}

}  // namespace detail

std::string report_json(const DecisionReport &r, int indent) { return detail::report_to_json(r).dump(indent); }

DecisionReport parse_report_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
    return detail::report_from_json(j);
}

std::string witness_string(const Witness &w) {
    if (const auto *g = std::get_if<Gpm>(&w)) {
        return g->str();
    }
    if (const auto *f = std::get_if<FactorPair>(&w)) {
        return std::to_string(f->s) + "*" + std::to_string(f->t);
    }
    return "-";
}

std::string report_text(const DecisionReport &r) {
    std::ostringstream out;
    out << "set: " << r.set.str() << '\n';
    out << "d: " << r.modulus() << '\n';
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "mode: " << to_string(r.mode) << '\n';
    out << "condition: " << (r.condition ? std::string(to_string(*r.condition)) : "-") << '\n';
    out << "witness: " << witness_string(r.witness) << '\n';
    out << "index_cardinality: " << (r.index_cardinality ? std::to_string(*r.index_cardinality) : "-") << '\n';
    out << "wang_gap: {";
    bool first = true;
    for (const auto &s : r.wang_gap) {
        out << (first ? "" : ",") << s.str();
        first = false;
    }
    out << "}\n";
    return out.str();
}

}  // namespace gbslocc
