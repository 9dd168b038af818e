#include "gbslocc/modring.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace gbslocc {

ModulusMismatch::ModulusMismatch(int lhs, int rhs)
    : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

void require_modulus(int d) {
    if (d < 2) {
        throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(d));
    }
}

void require_same_modulus(int lhs, int rhs) {
    if (lhs != rhs) {
        throw ModulusMismatch(lhs, rhs);
    }
}

Residue::Residue(std::int64_t value, int d) : value_(0), d_(d) {
    require_modulus(d);
    value_ = reduce(value, d);
}

Residue Residue::operator+(Residue other) const {
    require_same_modulus(d_, other.d_);
    return {static_cast<std::int64_t>(value_) + other.value_, d_};
}

Residue Residue::operator-(Residue other) const {
    require_same_modulus(d_, other.d_);
    return {static_cast<std::int64_t>(value_) - other.value_, d_};
}

Residue Residue::operator*(Residue other) const {
    require_same_modulus(d_, other.d_);
    return {static_cast<std::int64_t>(value_) * other.value_, d_};
}

Residue Residue::operator-() const { return {-static_cast<std::int64_t>(value_), d_}; }

GcdExt gcd_ext(std::int64_t a, std::int64_t b) {
    std::int64_t sa = a < 0 ? -1 : 1;
    std::int64_t sb = b < 0 ? -1 : 1;
    std::int64_t r0 = a * sa, r1 = b * sb;
    std::int64_t u0 = 1, u1 = 0;
    std::int64_t v0 = 0, v1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
    }
    return {r0, u0 * sa, v0 * sb};
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return gcd_ext(a, b).g; }

bool is_prime(int d) {
    if (d < 2) {
        return false;
    }
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

int smallest_prime_factor(int d) {
    require_modulus(d);
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            return p;
        }
    }
    return d;
}

std::vector<int> prime_factors(int d) {
    require_modulus(d);
    std::vector<int> out;
    int rest = d;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            out.push_back(p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        out.push_back(rest);
    }
    return out;
}

std::optional<Residue> mod_inverse(Residue a) {
    auto [g, u, v] = gcd_ext(a.value(), a.modulus());
    if (g != 1) {
        return std::nullopt;
    }
    return Residue(u, a.modulus());
}

std::vector<Residue> solve_linear_congruence(Residue a, Residue b) {
    require_same_modulus(a.modulus(), b.modulus());
    const int d = a.modulus();
    std::vector<Residue> out;
    if (a.value() == 0) {
        if (b.value() == 0) {
            for (int y = 0; y < d; ++y) {
                out.emplace_back(y, d);
            }
        }
        return out;
    }
    auto [g, u, v] = gcd_ext(a.value(), d);
    if (b.value() % g != 0) {
        return out;
    }
    // a/g * y = b/g (mod d/g) has the unique solution y0; lift by multiples of d/g.
    const std::int64_t step = d / g;
    const std::int64_t y0 = reduce(u * (b.value() / g), static_cast<int>(step));
    for (std::int64_t k = 0; k < g; ++k) {
        out.emplace_back(y0 + k * step, d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SolutionSet::contains(int x, int y) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(x, y));
}

SolutionSet solve_weyl_congruence(Residue m, Residue n) {
    require_same_modulus(m.modulus(), n.modulus());
    const int d = m.modulus();
    SolutionSet out{d, {}};
    const std::int64_t mv = m.value(), nv = n.value();

    if (mv == 0 && nv == 0) {
        out.pairs.reserve(static_cast<std::size_t>(d) * d);
        for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d; ++y) {
                out.pairs.emplace_back(x, y);
            }
        }
        return out;
    }

    if (mv == 0) {
        // x ranges over multiples of d/gcd(n, d), y is free.
        const std::int64_t g = gcd(nv, d);
        for (std::int64_t t = 0; t < g; ++t) {
            for (int k = 0; k < d; ++k) {
                out.pairs.emplace_back(reduce(d / g * t, d), k);
            }
        }
    } else if (nv == 0) {
        const std::int64_t g = gcd(mv, d);
        for (int k = 0; k < d; ++k) {
            for (std::int64_t t = 0; t < g; ++t) {
                out.pairs.emplace_back(k, reduce(d / g * t, d));
            }
        }
    } else {
        // (m/g, n/g) generates the line; d/G-shifts on each coordinate fill the rest.
        const std::int64_t g = gcd(mv, nv);
        const std::int64_t big_g = gcd(g, d);
        const std::int64_t shift = d / big_g;
        for (std::int64_t k = 0; k < shift; ++k) {
            for (std::int64_t t = 0; t < big_g; ++t) {
                for (std::int64_t tp = 0; tp < big_g; ++tp) {
                    out.pairs.emplace_back(reduce(mv / g * k + shift * t, d), reduce(nv / g * k + shift * tp, d));
                }
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
}

std::int64_t weyl_solution_count(Residue m, Residue n) {
    require_same_modulus(m.modulus(), n.modulus());
    if (m.value() == 0 && n.value() == 0) {
        throw std::invalid_argument("weyl_solution_count: (0,0) is the identity; its solution set is all of Z_d^2");
    }
    const int d = m.modulus();
    return static_cast<std::int64_t>(d) * gcd(gcd(m.value(), n.value()), d);
}

}  // namespace gbslocc
