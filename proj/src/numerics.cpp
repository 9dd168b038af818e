#include "gbslocc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gbslocc/discriminator.hpp"

namespace gbslocc {

namespace {

constexpr int kMaxDenseDim = 64;
constexpr int kMaxAttempts = 8;
// Eigenvalues of the random Hermitian combination closer than this are
// treated as one cluster and refined.
constexpr double kClusterGap = 1e-6;

double max_abs(const Eigen::MatrixXcd &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_off_diagonal(const Eigen::MatrixXcd &m) {
    double out = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (r != c) {
                out = std::max(out, std::abs(m(r, c)));
            }
        }
    }
    return out;
}

// Hermitian and anti-Hermitian parts of a normal matrix; they commute with it.
Eigen::MatrixXcd hermitian_part(const Eigen::MatrixXcd &u) { return (u + u.adjoint()) / 2.0; }
Eigen::MatrixXcd skew_part(const Eigen::MatrixXcd &u) { return (u - u.adjoint()) / Complex(0.0, 2.0); }

// Joint eigenbasis of commuting normal matrices: diagonalize a random real
// combination of their Hermitian parts, then re-split degenerate clusters with
// fresh combinations restricted to each cluster.
Eigen::MatrixXcd joint_basis(const std::vector<Eigen::MatrixXcd> &family, int dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> coeff(0.5, 1.5);
    auto random_combination = [&]() {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto &a : family) {
            m += coeff(rng) * hermitian_part(a) + coeff(rng) * skew_part(a);
        }
        return m;
    };

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(random_combination());
    if (solver.info() != Eigen::Success) {
        throw NumericsError("Hermitian eigensolver failed to converge");
    }
    Eigen::MatrixXcd q = solver.eigenvectors();
    const Eigen::VectorXd values = solver.eigenvalues();

    Eigen::Index start = 0;
    while (start < dim) {
        Eigen::Index end = start + 1;
        while (end < dim && values(end) - values(end - 1) < kClusterGap) {
            ++end;
        }
        const Eigen::Index width = end - start;
        if (width > 1) {
            const Eigen::MatrixXcd block = q.middleCols(start, width);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> inner(block.adjoint() * random_combination() * block);
            if (inner.info() != Eigen::Success) {
                throw NumericsError("Hermitian eigensolver failed to converge in a degenerate cluster");
            }
            q.middleCols(start, width) = block * inner.eigenvectors();
        }
        start = end;
    }
    return q;
}

double diagonalization_residual(const std::vector<Eigen::MatrixXcd> &family, const Eigen::MatrixXcd &q) {
    double worst = 0.0;
    for (const auto &a : family) {
        worst = std::max(worst, max_off_diagonal(q.adjoint() * a * q));
    }
    return worst;
}

void require_dense_dim(int d) {
    if (d > kMaxDenseDim) {
        throw std::invalid_argument("dense numerics limited to d <= " + std::to_string(kMaxDenseDim));
    }
}

std::vector<Eigen::MatrixXcd> difference_matrices(const GbsSet &s) {
    std::vector<Eigen::MatrixXcd> out;
    for (const auto &g : difference_set(s).elements) {
        out.push_back(gpm_matrix(g).entries());
    }
    return out;
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw std::invalid_argument("unitary matrix must be square and nonempty");
    }
    const auto n = entries_.rows();
    const double dev = max_abs(entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(n, n));
    if (dev > kVerifyTolerance) {
        throw std::invalid_argument("matrix is not unitary (deviation " + std::to_string(dev) + ")");
    }
}

StateVector::StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0 || std::abs(amplitudes_.norm() - 1.0) > kVerifyTolerance) {
        throw std::invalid_argument("state vector must have unit norm");
    }
}

Complex root_of_unity(int d, std::int64_t k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(k, d)) / d;
    return {std::cos(angle), std::sin(angle)};
}

UnitaryMatrix gpm_matrix(const Gpm &g) {
    require_dense_dim(g.d);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(g.d, g.d);
    for (int c = 0; c < g.d; ++c) {
        u(reduce(static_cast<std::int64_t>(c) + g.m, g.d), c) = root_of_unity(g.d, static_cast<std::int64_t>(g.n) * c);
    }
    return UnitaryMatrix(std::move(u));
}

double weyl_relation_check(const Gpm &a, const Gpm &b) {
    const int e = weyl_exponent(a, b).value();
    const Eigen::MatrixXcd ua = gpm_matrix(a).entries();
    const Eigen::MatrixXcd ub = gpm_matrix(b).entries();
    return max_abs(ua * ub - root_of_unity(a.d, e) * (ub * ua));
}

std::vector<EigenPair> eigensystem(const UnitaryMatrix &u) {
    const auto &m = u.entries();
    const int dim = u.dim();
    std::mt19937_64 rng(kDiagonalizerSeed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const Eigen::MatrixXcd q = joint_basis({m}, dim, rng);
        std::vector<EigenPair> out;
        bool ok = true;
        for (int j = 0; j < dim && ok; ++j) {
            const Eigen::VectorXcd v = q.col(j);
            const Complex lambda = v.dot(m * v);
            ok = (m * v - lambda * v).norm() < kEigenResidualTolerance;
            out.push_back({lambda, StateVector(v.normalized())});
        }
        if (ok) {
            return out;
        }
    }
    throw NumericsError("eigensystem: residual above tolerance after " + std::to_string(kMaxAttempts) + " attempts");
}

Eigen::MatrixXcd simultaneous_diagonalizer(const std::vector<UnitaryMatrix> &family, int dim) {
    std::vector<Eigen::MatrixXcd> mats;
    for (const auto &u : family) {
        if (u.dim() != dim) {
            throw std::invalid_argument("family members must share dimension");
        }
        mats.push_back(u.entries());
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            if (max_abs(mats[i] * mats[j] - mats[j] * mats[i]) > kVerifyTolerance) {
                throw std::invalid_argument("family is not commutative");
            }
        }
    }
    if (mats.empty()) {
        return Eigen::MatrixXcd::Identity(dim, dim);
    }
    std::mt19937_64 rng(kDiagonalizerSeed);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Eigen::MatrixXcd q = joint_basis(mats, dim, rng);
        if (diagonalization_residual(mats, q) < kEigenResidualTolerance) {
            return q;
        }
    }
    throw NumericsError("simultaneous diagonalization residual above tolerance");
}

double verify_lemma1(const Gpm &t, const DiffSet &deltas) {
    for (const auto &u : deltas.elements) {
        if (commutes(t, u)) {
            throw std::invalid_argument("witness (" + t.str() + ") commutes with difference (" + u.str() + ")");
        }
    }
    double worst = 0.0;
    const auto pairs = eigensystem(gpm_matrix(t));
    for (const auto &u : deltas.elements) {
        const auto m = gpm_matrix(u).entries();
        for (const auto &p : pairs) {
            const auto &v = p.vector.amplitudes();
            worst = std::max(worst, std::abs(v.dot(m * v)));
        }
    }
    return worst;
}

double one_way_gram_check(const GbsSet &s, const Gpm &t) {
    require_same_modulus(s.modulus(), t.d);
    for (const auto &u : difference_set(s).elements) {
        if (commutes(t, u)) {
            throw std::invalid_argument("(" + t.str() + ") is not in the discriminant set: commutes with (" +
                                        u.str() + ")");
        }
    }
    std::vector<Eigen::MatrixXcd> bob;
    for (const auto &g : s.elements()) {
        bob.push_back(gpm_matrix(g).entries());
    }
    double worst = 0.0;
    for (const auto &p : eigensystem(gpm_matrix(t))) {
        const auto &v = p.vector.amplitudes();
        Eigen::MatrixXcd states(s.modulus(), static_cast<Eigen::Index>(bob.size()));
        for (std::size_t i = 0; i < bob.size(); ++i) {
            states.col(static_cast<Eigen::Index>(i)) = bob[i] * v;
        }
        worst = std::max(worst, max_off_diagonal(states.adjoint() * states));
    }
    return worst;
}

StateVector commuting_witness(const GbsSet &s) {
    if (!condition_commutative(s)) {
        throw std::invalid_argument("difference set of " + s.str() + " is not commutative");
    }
    const int d = s.modulus();
    require_dense_dim(d);
    std::vector<UnitaryMatrix> family;
    for (const auto &g : difference_set(s).elements) {
        family.push_back(gpm_matrix(g));
    }
    const Eigen::MatrixXcd q = simultaneous_diagonalizer(family, d);
    const Eigen::VectorXcd beta = Eigen::VectorXcd::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
    return StateVector((q * beta).normalized());
}

StateVector composite_witness(const GbsSet &s, int s_factor, int t_factor) {
    const int d = s.modulus();
    if (s_factor < 2 || t_factor < 2 || s_factor * t_factor != d) {
        throw std::invalid_argument("invalid factorization " + std::to_string(s_factor) + "*" +
                                    std::to_string(t_factor) + " of d=" + std::to_string(d));
    }
    if (!condition_invertible(s)) {
        throw std::invalid_argument("some difference of " + s.str() + " has no invertible coordinate");
    }
    const Eigen::MatrixXcd q =
        simultaneous_diagonalizer({gpm_matrix(Gpm(s_factor, 0, d)), gpm_matrix(Gpm(0, t_factor, d))}, d);
    return StateVector(q.col(0).normalized());
}

StateVector composite_witness(const GbsSet &s) {
    const int d = s.modulus();
    if (is_prime(d)) {
        throw std::invalid_argument("prime d=" + std::to_string(d) + " has no nontrivial factorization");
    }
    const int p = smallest_prime_factor(d);
    return composite_witness(s, p, d / p);
}

double witness_deviation(const GbsSet &s, const StateVector &psi) {
    if (psi.dim() != s.modulus()) {
        throw std::invalid_argument("witness dimension does not match d");
    }
    const auto &v = psi.amplitudes();
    double worst = 0.0;
    for (const auto &a : difference_matrices(s)) {
        worst = std::max(worst, std::abs(v.dot(a * v)));
    }
    return worst;
}

Complex trace_check(const Gpm &g) { return gpm_matrix(g).entries().trace(); }

}  // namespace gbslocc
