#include "gbslocc/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "gbslocc/catalog.hpp"
#include "gbslocc/discriminator.hpp"

using namespace gbslocc;

namespace {

double max_commutator(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return (a.entries() * b.entries() - b.entries() * a.entries()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(numerics, gpm_matrix_layout) {
    const auto u = gpm_matrix(Gpm(1, 2, 3)).entries();
    // X Z^2 |c> = w^{2c} |c+1>
    for (int c = 0; c < 3; ++c) {
        EXPECT_LT(std::abs(u((c + 1) % 3, c) - root_of_unity(3, 2 * c)), 1e-12);
    }
    EXPECT_THROW(gpm_matrix(Gpm(1, 1, 65)), std::invalid_argument);
}

TEST(numerics, rejects_bad_inputs) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
    EXPECT_THROW(UnitaryMatrix{m}, std::invalid_argument);
    EXPECT_THROW(StateVector(Eigen::VectorXcd::Ones(2)), std::invalid_argument);
    EXPECT_THROW(simultaneous_diagonalizer({gpm_matrix(Gpm(1, 0, 3)), gpm_matrix(Gpm(0, 1, 3))}, 3),
                 std::invalid_argument);
}

TEST(numerics, weyl_relation_all_pairs) {
    for (int d = 2; d <= 6; ++d) {
        for (int a = 0; a < d * d; ++a) {
            for (int b = 0; b < d * d; ++b) {
                const Gpm x(a / d, a % d, d), y(b / d, b % d, d);
                EXPECT_LT(weyl_relation_check(x, y), kVerifyTolerance) << x.str() << " " << y.str();
            }
        }
    }
}

TEST(numerics, weyl_phase_read_off_matrices) {
    // Recover the phase from a nonzero entry of U_a U_b (U_b U_a)^-1.
    for (int d = 2; d <= 6; ++d) {
        for (int a = 0; a < d * d; ++a) {
            for (int b = 0; b < d * d; ++b) {
                const Gpm x(a / d, a % d, d), y(b / d, b % d, d);
                const auto ux = gpm_matrix(x).entries(), uy = gpm_matrix(y).entries();
                const Eigen::MatrixXcd ratio = ux * uy * (uy * ux).adjoint();
                EXPECT_LT(std::abs(ratio(0, 0) - root_of_unity(d, weyl_exponent(x, y).value())), kVerifyTolerance);
            }
        }
    }
}

TEST(numerics, traces) {
    for (int d = 2; d <= 12; ++d) {
        for (int c = 0; c < d * d; ++c) {
            const Gpm g(c / d, c % d, d);
            const Complex expected = g.is_identity() ? Complex(d, 0) : Complex(0, 0);
            EXPECT_LT(std::abs(trace_check(g) - expected), 1e-10) << g.str();
        }
    }
}

TEST(numerics, eigensystem_residuals) {
    for (int d = 2; d <= 8; ++d) {
        for (int c = 1; c < d * d; ++c) {
            const auto u = gpm_matrix(Gpm(c / d, c % d, d));
            const auto pairs = eigensystem(u);
            ASSERT_EQ(pairs.size(), static_cast<std::size_t>(d));
            Eigen::MatrixXcd q(d, d);
            for (int j = 0; j < d; ++j) {
                const auto &v = pairs[j].vector.amplitudes();
                EXPECT_LT((u.entries() * v - pairs[j].value * v).norm(), kEigenResidualTolerance);
                q.col(j) = v;
            }
            EXPECT_LT((q.adjoint() * q - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-8);
        }
    }
}

TEST(numerics, simultaneous_diagonalizer_residual) {
    // Commuting families: powers of one GPM, and the X^s, Z^t pair used for composite d.
    std::vector<std::vector<UnitaryMatrix>> families;
    families.push_back({gpm_matrix(Gpm(1, 2, 5)), gpm_matrix(Gpm(2, 4, 5)), gpm_matrix(Gpm(3, 1, 5))});
    families.push_back({gpm_matrix(Gpm(2, 0, 6)), gpm_matrix(Gpm(0, 3, 6))});
    families.push_back({gpm_matrix(Gpm(0, 2, 4)), gpm_matrix(Gpm(2, 0, 4)), gpm_matrix(Gpm(2, 2, 4))});
    families.push_back({gpm_matrix(Gpm(3, 0, 12)), gpm_matrix(Gpm(0, 4, 12)), gpm_matrix(Gpm(6, 4, 12))});
    for (const auto &fam : families) {
        const int d = fam.front().dim();
        const Eigen::MatrixXcd q = simultaneous_diagonalizer(fam, d);
        EXPECT_LT((q.adjoint() * q - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-8);
        for (const auto &a : fam) {
            Eigen::MatrixXcd m = q.adjoint() * a.entries() * q;
            m.diagonal().setZero();
            EXPECT_LT(m.cwiseAbs().maxCoeff(), kEigenResidualTolerance) << d;
        }
    }
}

TEST(numerics, random_sample_certificates) {
    std::mt19937_64 rng(77);
    int c1 = 0, c2 = 0, c3 = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % d);
        std::vector<int> cells(d * d);
        std::iota(cells.begin(), cells.end(), 0);
        std::shuffle(cells.begin(), cells.end(), rng);
        std::vector<Gpm> el;
        for (int i = 0; i < k; ++i) {
            el.emplace_back(cells[i] / d, cells[i] % d, d);
        }
        const GbsSet s(d, el);
        // Every applicable certificate, not only the one decide() reports.
        const auto ds = discriminant_set(s);
        if (!ds.empty()) {
            ++c1;
            EXPECT_LT(one_way_gram_check(s, ds.witnesses.front()), kVerifyTolerance) << s.str();
            EXPECT_LT(one_way_gram_check(s, ds.witnesses.back()), kVerifyTolerance) << s.str();
        }
        if (condition_commutative(s)) {
            ++c2;
            EXPECT_LT(witness_deviation(s, commuting_witness(s)), kVerifyTolerance) << s.str();
        }
        if (!is_prime(d) && condition_invertible(s)) {
            ++c3;
            EXPECT_LT(witness_deviation(s, composite_witness(s)), kVerifyTolerance) << s.str();
        }
    }
    EXPECT_GT(c1, 0);
    EXPECT_GT(c2, 0);
    EXPECT_GT(c3, 0);
}

TEST(numerics, discriminant_witnesses_certify) {
    std::mt19937_64 rng(2);
    for (const auto &ex : example_fixtures()) {
        const auto ds = discriminant_set(ex.set);
        for (const auto &t : ds.witnesses) {
            EXPECT_LT(verify_lemma1(t, difference_set(ex.set)), kVerifyTolerance) << ex.name << " " << t.str();
            EXPECT_LT(one_way_gram_check(ex.set, t), kVerifyTolerance) << ex.name << " " << t.str();
        }
    }
    const auto s = GbsSet::parse("0,0;1,0;0,1;1,2", 4);
    EXPECT_THROW(one_way_gram_check(s, Gpm(1, 0, 4)), std::invalid_argument);
    EXPECT_THROW(verify_lemma1(Gpm(2, 0, 4), difference_set(s)), std::invalid_argument);
}

TEST(numerics, non_witness_fails_gram_check) {
    // A measurement basis that does not come from the discriminant set leaves
    // some pair of Bob states overlapping.
    double worst = 0.0;
    for (const auto &p : eigensystem(gpm_matrix(Gpm(1, 1, 5)))) {
        const auto &v = p.vector.amplitudes();
        const Eigen::VectorXcd a = gpm_matrix(Gpm(0, 0, 5)).entries() * v;
        const Eigen::VectorXcd b = gpm_matrix(Gpm(1, 1, 5)).entries() * v;
        worst = std::max(worst, std::abs(a.dot(b)));
    }
    EXPECT_GT(worst, 0.5);
}

TEST(numerics, commuting_and_composite_witnesses) {
    for (const auto &ex : example_fixtures()) {
        if (!ex.condition || ex.name == "L3") {
            continue;
        }
        SCOPED_TRACE(ex.name);
        if (*ex.condition == Condition::T1C2) {
            const auto psi = commuting_witness(ex.set);
            EXPECT_LT(witness_deviation(ex.set, psi), kVerifyTolerance);
        } else if (*ex.condition == Condition::T1C3) {
            const auto psi = composite_witness(ex.set);
            EXPECT_LT(witness_deviation(ex.set, psi), kVerifyTolerance);
        }
    }
    const auto l4 = GbsSet::parse("0,0;1,0;0,1;1,2", 4);
    EXPECT_THROW(commuting_witness(l4), std::invalid_argument);
    EXPECT_THROW(composite_witness(GbsSet::parse("0,0;1,1", 5)), std::invalid_argument);
    EXPECT_THROW(composite_witness(GbsSet::parse("0,0;1,1", 6), 2, 2), std::invalid_argument);
}

TEST(numerics, witness_deviation_rejects_wrong_dimension) {
    const auto s = GbsSet::parse("0,0;1,1", 4);
    EXPECT_THROW(witness_deviation(s, StateVector(Eigen::VectorXcd::Unit(3, 0))), std::invalid_argument);
}

TEST(numerics, third_example_has_zero_expectation_basis) {
    // Z_6 = Z_2 x Z_3 by CRT; the difference set of L3 acts only on the Z_2
    // factor, so states maximally entangled across the split work.
    const int d = 6;
    const auto l3 = GbsSet::parse("2,3;2,0;5,3;5,0", d);
    auto crt = [](int a, int b) { return (3 * a + 4 * b) % 6; };  // a mod 2, b mod 3
    EXPECT_GT(max_commutator(gpm_matrix(Gpm(0, 3, d)), gpm_matrix(Gpm(3, 0, d))), 1.0);
    Eigen::MatrixXcd basis(d, d);
    int col = 0;
    for (int b = 0; b < 3; ++b) {
        for (double sign : {1.0, -1.0}) {
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
            v(crt(0, b)) = 1.0 / std::sqrt(2.0);
            v(crt(1, (b + 1) % 3)) = sign / std::sqrt(2.0);
            const StateVector psi(v);
            EXPECT_LT(witness_deviation(l3, psi), kVerifyTolerance) << b << " " << sign;
            basis.col(col++) = v;
        }
    }
    EXPECT_LT((basis.adjoint() * basis - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
}
