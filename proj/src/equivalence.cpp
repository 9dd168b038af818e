#include "gbslocc/equivalence.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "gbslocc/parallel.hpp"

namespace gbslocc {

CanonicalSet::CanonicalSet(int d, std::vector<Gpm> elements) : d_(d), elements_(std::move(elements)) {
    require_modulus(d);
    if (elements_.empty() || !elements_.front().is_identity()) {
        throw std::invalid_argument("canonical set must start with (0,0)");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        require_same_modulus(d, elements_[i].d);
        if (i > 0 && !(elements_[i - 1] < elements_[i])) {
            throw std::invalid_argument("canonical set must be strictly increasing");
        }
    }
}

std::string CanonicalSet::str() const { return to_gbs().str(); }

namespace {

CanonicalSet sorted_canonical(int d, std::vector<Gpm> elements) {
    std::sort(elements.begin(), elements.end());
    return CanonicalSet(d, std::move(elements));
}

}  // namespace

CanonicalSet anchored_translate(const GbsSet &s, std::size_t anchor) {
    if (anchor >= s.size()) {
        throw std::out_of_range("anchor index " + std::to_string(anchor) + " out of range for set of size " +
                                std::to_string(s.size()));
    }
    const Gpm shift = gpm_inverse(s[anchor]);
    std::vector<Gpm> out;
    out.reserve(s.size());
    for (const auto &g : s.elements()) {
        out.push_back(gpm_product(g, shift));
    }
    return sorted_canonical(s.modulus(), std::move(out));
}

CanonicalSet canonical_form(const GbsSet &s) {
    if (!s.is_standard()) {
        throw std::invalid_argument("canonical_form needs a standard set (one containing 0,0); got " + s.str());
    }
    return sorted_canonical(s.modulus(), s.elements());
}

OrbitReport orbit(const GbsSet &n) {
    const int d = n.modulus();
    const CanonicalSet rep = anchored_translate(n, 0);
    const std::vector<SympMat> group = enumerate_symplectic(d);
    std::vector<CanonicalSet> translates;
    for (std::size_t i = 0; i < n.size(); ++i) {
        translates.push_back(anchored_translate(n, i));
    }

    OrbitReport out{n.is_standard() ? canonical_form(n) : rep, {}};
    std::vector<Gpm> image(n.size());
    for (const auto &t : translates) {
        for (const auto &w : group) {
            std::transform(t.elements().begin(), t.elements().end(), image.begin(),
                           [&](const Gpm &g) { return apply(w, g); });
            out.members.insert(sorted_canonical(d, image));
        }
    }
    return out;
}

bool has_nondegenerate_xz(const GbsSet &s) {
    const int d = s.modulus();
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool has_x = false, has_z = false;
        const CanonicalSet t = anchored_translate(s, i);
        for (const auto &g : t.elements()) {
            has_x = has_x || (g.n == 0 && gcd(g.m, d) == 1);
            has_z = has_z || (g.m == 0 && gcd(g.n, d) == 1);
        }
        if (has_x && has_z) {
            return true;
        }
    }
    return false;
}

int Classification::class_of(const CanonicalSet &c) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].orbit.members.contains(c)) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::vector<CanonicalSet> enumerate_standard_sets(int d, int k) {
    require_modulus(d);
    if (k < 1) {
        throw std::invalid_argument("set size must be >= 1");
    }
    std::vector<Gpm> pool;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            if (m != 0 || n != 0) {
                pool.emplace_back(m, n, d);
            }
        }
    }
    const int r = k - 1;
    std::vector<CanonicalSet> out;
    if (r > static_cast<int>(pool.size())) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(pool.size()), r)));
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) {
        idx[i] = i;
    }
    const int n = static_cast<int>(pool.size());
    while (true) {
        std::vector<Gpm> el = {Gpm(0, 0, d)};
        for (int i : idx) {
            el.push_back(pool[i]);
        }
        out.emplace_back(d, std::move(el));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[i];
        for (int j = i + 1; j < r; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

Classification classify(int d, int k, const std::vector<GbsSet> &representatives,
                        const std::vector<std::string> &labels) {
    if (!labels.empty() && labels.size() != representatives.size()) {
        throw std::invalid_argument("label count does not match representative count");
    }
    Classification out{d, k, {}, {}};
    for (const auto &rep : representatives) {
        if (rep.modulus() != d || static_cast<int>(rep.size()) != k) {
            throw std::invalid_argument("representative " + rep.str() + " is not a " + std::to_string(k) +
                                        "-set over d=" + std::to_string(d));
        }
    }
    auto orbits = parallel_map<std::optional<OrbitReport>>(representatives.size(),
                                                           [&](std::size_t i) { return orbit(representatives[i]); });
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        std::string label = labels.empty() ? "R" + std::to_string(i + 1) : labels[i];
        out.classes.push_back({std::move(label), std::move(*orbits[i])});
    }
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        for (std::size_t j = i + 1; j < out.classes.size(); ++j) {
            const auto &a = out.classes[i].orbit.members;
            const auto &b = out.classes[j].orbit.members;
            for (const auto &c : a) {
                if (b.contains(c)) {
                    throw std::runtime_error("orbits of " + out.classes[i].label + " and " + out.classes[j].label +
                                             " intersect at " + c.str() + "; representatives are not inequivalent");
                }
            }
        }
    }
    const auto all = enumerate_standard_sets(d, k);
    out.coverage.total_standard = static_cast<std::int64_t>(all.size());
    for (const auto &c : all) {
        if (out.class_of(c) >= 0) {
            ++out.coverage.covered;
        } else {
            out.coverage.uncovered.push_back(c);
        }
    }
    return out;
}

bool membership(const GbsSet &s, const GbsSet &rep) {
    if (s.modulus() != rep.modulus() || s.size() != rep.size()) {
        throw std::invalid_argument("membership needs sets of equal modulus and size");
    }
    const OrbitReport o = orbit(rep);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (o.members.contains(anchored_translate(s, i))) {
            return true;
        }
    }
    return false;
}

}  // namespace gbslocc
