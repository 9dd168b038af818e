#include "gbslocc/gbs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gbslocc {

Gpm::Gpm(std::int64_t m_, std::int64_t n_, int d_) : m(0), n(0), d(d_) {
    require_modulus(d_);
    m = reduce(m_, d_);
    n = reduce(n_, d_);
}

std::string Gpm::str() const { return std::to_string(m) + "," + std::to_string(n); }

Gpm gpm_product(const Gpm &a, const Gpm &b) {
    require_same_modulus(a.d, b.d);
    return {static_cast<std::int64_t>(a.m) + b.m, static_cast<std::int64_t>(a.n) + b.n, a.d};
}

Gpm gpm_inverse(const Gpm &a) { return {-static_cast<std::int64_t>(a.m), -static_cast<std::int64_t>(a.n), a.d}; }

Residue weyl_exponent(const Gpm &a, const Gpm &b) {
    require_same_modulus(a.d, b.d);
    return {static_cast<std::int64_t>(a.n) * b.m - static_cast<std::int64_t>(a.m) * b.n, a.d};
}

bool commutes(const Gpm &a, const Gpm &b) { return weyl_exponent(a, b).value() == 0; }

bool is_commutative(std::span<const Gpm> elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (!commutes(elements[i], elements[j])) {
                return false;
            }
        }
    }
    return true;
}

GbsSet::GbsSet(int d, std::vector<Gpm> elements) : d_(d), elements_(std::move(elements)) {
    require_modulus(d);
    if (elements_.empty()) {
        throw ParseError(ParseError::Kind::Empty, "GBS set must contain at least one element");
    }
    std::vector<Gpm> seen;
    for (const auto &g : elements_) {
        require_same_modulus(d_, g.d);
        if (std::find(seen.begin(), seen.end(), g) != seen.end()) {
            throw ParseError(ParseError::Kind::Duplicate, "duplicate element (" + g.str() + ")");
        }
        seen.push_back(g);
    }
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

int parse_coordinate(std::string_view token, std::string_view element, int d) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(ParseError::Kind::MalformedToken, "malformed element '" + std::string(element) + "'");
    }
    if (value < 0 || value >= d) {
        throw ParseError(ParseError::Kind::OutOfRange, "coordinate " + std::string(token) + " in '" +
                                                           std::string(element) + "' is outside [0," +
                                                           std::to_string(d) + ")");
    }
    return value;
}

}  // namespace

GbsSet GbsSet::parse(std::string_view text, int d) {
    require_modulus(d);
    const std::string clean = strip_spaces(text);
    if (clean.empty()) {
        throw ParseError(ParseError::Kind::Empty, "empty set literal");
    }
    std::vector<Gpm> elements;
    std::string_view rest = clean;
    while (true) {
        const auto semi = rest.find(';');
        const std::string_view element = rest.substr(0, semi);
        const auto comma = element.find(',');
        if (comma == std::string_view::npos || element.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(ParseError::Kind::MalformedToken, "malformed element '" + std::string(element) + "'");
        }
        const int m = parse_coordinate(element.substr(0, comma), element, d);
        const int n = parse_coordinate(element.substr(comma + 1), element, d);
        elements.emplace_back(m, n, d);
        if (semi == std::string_view::npos) {
            break;
        }
        rest = rest.substr(semi + 1);
    }
    return GbsSet(d, std::move(elements));
}

bool GbsSet::contains(const Gpm &g) const {
    return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

std::string GbsSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) {
            out.push_back(';');
        }
        out += elements_[i].str();
    }
    return out;
}

bool DiffSet::contains(const Gpm &g) const { return std::binary_search(elements.begin(), elements.end(), g); }

DiffSet difference_set(const GbsSet &s) {
    DiffSet out{s.modulus(), {}};
    const auto &el = s.elements();
    for (std::size_t j = 0; j < el.size(); ++j) {
        for (std::size_t k = 0; k < el.size(); ++k) {
            if (j != k) {
                out.elements.push_back(gpm_product(el[j], gpm_inverse(el[k])));
            }
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
    return out;
}

int Slope::value() const {
    if (is_infinite()) {
        throw std::logic_error("infinite slope has no finite value");
    }
    return value_;
}

std::string Slope::str() const { return is_infinite() ? "inf" : std::to_string(value_); }

Slope slope(const Gpm &g) {
    if (!is_prime(g.d)) {
        throw std::domain_error("slopes are only defined for prime d, got d=" + std::to_string(g.d));
    }
    if (g.is_identity()) {
        throw std::invalid_argument("the identity has no slope");
    }
    if (g.m == 0) {
        return Slope::infinity();
    }
    const Residue inv = *mod_inverse(Residue(g.m, g.d));
    return Slope::finite((inv * Residue(g.n, g.d)).value());
}

std::set<Slope> index_set(const GbsSet &s) {
    if (!is_prime(s.modulus())) {
        throw std::domain_error("index set is only defined for prime d, got d=" + std::to_string(s.modulus()));
    }
    std::set<Slope> out;
    for (const auto &g : difference_set(s).elements) {
        out.insert(slope(g));
    }
    return out;
}

}  // namespace gbslocc
