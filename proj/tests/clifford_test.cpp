#include "gbslocc/clifford.hpp"

#include <map>

#include "gtest/gtest.h"

using namespace gbslocc;

TEST(clifford, rejects_non_symplectic) {
    EXPECT_THROW(SympMat(1, 0, 0, 2, 5), std::invalid_argument);
    EXPECT_THROW(SympMat(2, 0, 0, 2, 4), std::invalid_argument);
    EXPECT_NO_THROW(SympMat(2, 0, 0, 3, 5));
}

TEST(clifford, generators_act_as_documented) {
    const int d = 7;
    const Gpm g(2, 5, d);
    EXPECT_EQ(apply(SympMat::fourier(d), g), Gpm(-5, 2, d));
    EXPECT_EQ(apply(SympMat::phase(d), g), Gpm(2, 7, d));
    EXPECT_EQ(apply(SympMat::identity(d), g), g);
}

TEST(clifford, counts_match_brute_force) {
    // Determinant tally over all d^4 matrices.
    for (int d = 2; d <= 12; ++d) {
        std::map<int, std::int64_t> by_det;
        for (int a = 0; a < d * d * d * d; ++a) {
            const int a1 = a % d, b1 = a / d % d, a2 = a / d / d % d, b2 = a / d / d / d;
            ++by_det[reduce(static_cast<std::int64_t>(a1) * b2 - static_cast<std::int64_t>(a2) * b1, d)];
        }
        const auto all = enumerate_symplectic(d);
        EXPECT_EQ(static_cast<std::int64_t>(all.size()), by_det[1]) << d;
        EXPECT_EQ(symplectic_group_order(d), by_det[1]) << d;
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    }
}

TEST(clifford, known_orders) {
    const std::vector<std::int64_t> expected = {6, 24, 48, 120, 144, 336, 384, 648, 720, 1320, 1152};
    for (int d = 2; d <= 12; ++d) {
        EXPECT_EQ(symplectic_group_order(d), expected[d - 2]) << d;
    }
}

TEST(clifford, group_axioms) {
    for (int d : {2, 3, 4, 6}) {
        const auto all = enumerate_symplectic(d);
        const std::set<SympMat> members(all.begin(), all.end());
        for (const auto &x : all) {
            bool has_inverse = false;
            for (const auto &y : all) {
                EXPECT_TRUE(members.contains(compose(x, y)));
                has_inverse = has_inverse || compose(x, y) == SympMat::identity(d);
            }
            EXPECT_TRUE(has_inverse) << x.str();
        }
    }
}

TEST(clifford, compose_is_application_order) {
    const int d = 5;
    const auto all = enumerate_symplectic(d);
    for (std::size_t i = 0; i < all.size(); i += 7) {
        for (std::size_t j = 0; j < all.size(); j += 11) {
            for (int c = 0; c < d * d; ++c) {
                const Gpm g(c / d, c % d, d);
                EXPECT_EQ(apply(compose(all[i], all[j]), g), apply(all[i], apply(all[j], g)));
            }
        }
    }
}

TEST(clifford, preserves_weyl_exponent) {
    for (int d : {3, 4, 6}) {
        for (const auto &w : enumerate_symplectic(d)) {
            for (int a = 0; a < d * d; a += 2) {
                for (int b = 1; b < d * d; b += 3) {
                    const Gpm x(a / d, a % d, d), y(b / d, b % d, d);
                    EXPECT_EQ(weyl_exponent(apply(w, x), apply(w, y)), weyl_exponent(x, y));
                }
            }
        }
    }
}

TEST(clifford, generated_equals_enumerated) {
    for (int d = 2; d <= 6; ++d) {
        const auto all = enumerate_symplectic(d);
        EXPECT_EQ(generated_group(d), std::set<SympMat>(all.begin(), all.end())) << d;
    }
}
