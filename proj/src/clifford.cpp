#include "gbslocc/clifford.hpp"

#include <deque>
#include <stdexcept>

namespace gbslocc {

SympMat::SympMat(std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2, int d)
    : a1_(0), b1_(0), a2_(0), b2_(0), d_(d) {
    require_modulus(d);
    a1_ = reduce(a1, d);
    b1_ = reduce(b1, d);
    a2_ = reduce(a2, d);
    b2_ = reduce(b2, d);
    const int det = reduce(static_cast<std::int64_t>(a1_) * b2_ - static_cast<std::int64_t>(a2_) * b1_, d);
    if (det != 1 % d) {
        throw std::invalid_argument("not symplectic: det " + str() + " = " + std::to_string(det) + " (mod " +
                                    std::to_string(d) + ")");
    }
}

std::string SympMat::str() const {
    return "[" + std::to_string(a1_) + " " + std::to_string(b1_) + "; " + std::to_string(a2_) + " " +
           std::to_string(b2_) + "]";
}

Gpm apply(const SympMat &w, const Gpm &g) {
    require_same_modulus(w.modulus(), g.d);
    return {static_cast<std::int64_t>(w.a1()) * g.m + static_cast<std::int64_t>(w.b1()) * g.n,
            static_cast<std::int64_t>(w.a2()) * g.m + static_cast<std::int64_t>(w.b2()) * g.n, g.d};
}

SympMat compose(const SympMat &w1, const SympMat &w2) {
    require_same_modulus(w1.modulus(), w2.modulus());
    using I = std::int64_t;
    return {I{w1.a1()} * w2.a1() + I{w1.b1()} * w2.a2(), I{w1.a1()} * w2.b1() + I{w1.b1()} * w2.b2(),
            I{w1.a2()} * w2.a1() + I{w1.b2()} * w2.a2(), I{w1.a2()} * w2.b1() + I{w1.b2()} * w2.b2(),
            w1.modulus()};
}

std::vector<SympMat> enumerate_symplectic(int d) {
    require_modulus(d);
    std::vector<SympMat> out;
    out.reserve(static_cast<std::size_t>(symplectic_group_order(d)));
    for (int a1 = 0; a1 < d; ++a1) {
        for (int b1 = 0; b1 < d; ++b1) {
            for (int a2 = 0; a2 < d; ++a2) {
                for (int b2 = 0; b2 < d; ++b2) {
                    if (reduce(static_cast<std::int64_t>(a1) * b2 - static_cast<std::int64_t>(a2) * b1, d) == 1) {
                        out.emplace_back(a1, b1, a2, b2, d);
                    }
                }
            }
        }
    }
    return out;
}

std::set<SympMat> generated_group(int d) {
    const std::vector<SympMat> gens = {SympMat::fourier(d), SympMat::phase(d)};
    std::set<SympMat> seen = {SympMat::identity(d)};
    std::deque<SympMat> frontier = {SympMat::identity(d)};
    while (!frontier.empty()) {
        const SympMat w = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            SympMat next = compose(g, w);
            if (seen.insert(next).second) {
                frontier.push_back(next);
            }
        }
    }
    return seen;
}

std::int64_t symplectic_group_order(int d) {
    require_modulus(d);
    // d^3 prod (1 - 1/p^2) = d * prod over p^k || d of p^(2k-2) (p^2 - 1)
    std::int64_t order = d;
    int rest = d;
    for (int p : prime_factors(d)) {
        std::int64_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        order *= pk / p * (pk / p) * (static_cast<std::int64_t>(p) * p - 1);
    }
    return order;
}

}  // namespace gbslocc
