#pragma once

// Dense complex verification of the symbolic results: GPM matrices, Weyl
// relations, eigenbases, and the measurement-level certificates behind each
// sufficient condition. Everything stays at dimension d; the maximally
// entangled state is handled through (I (x) U)|Phi> = (U^T (x) I)|Phi>.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "gbslocc/gbs.hpp"

namespace gbslocc {

using Complex = std::complex<double>;

inline constexpr double kVerifyTolerance = 1e-9;
inline constexpr double kEigenResidualTolerance = 1e-8;
inline constexpr std::uint64_t kDiagonalizerSeed = 0x9b5d3c2a17e4f601ULL;

class NumericsError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Square complex matrix checked unitary to 1e-9 on construction.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(Eigen::MatrixXcd entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd &entries() const { return entries_; }

   private:
    Eigen::MatrixXcd entries_;
};

/// Unit-norm complex vector.
class StateVector {
   public:
    explicit StateVector(Eigen::VectorXcd amplitudes);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Eigen::VectorXcd &amplitudes() const { return amplitudes_; }

   private:
    Eigen::VectorXcd amplitudes_;
};

struct EigenPair {
    Complex value;
    StateVector vector;
};

/// exp(2 pi i k / d).
Complex root_of_unity(int d, std::int64_t k);

/// Entry (r, c) is w^{n c} when r = c + m (mod d), else 0.
UnitaryMatrix gpm_matrix(const Gpm &g);

/// max |U_a U_b - w^e U_b U_a| with e = weyl_exponent(a, b).
double weyl_relation_check(const Gpm &a, const Gpm &b);

/// d orthonormal eigenpairs. Throws NumericsError if a residual exceeds 1e-8.
std::vector<EigenPair> eigensystem(const UnitaryMatrix &u);

/// Unitary Q whose columns jointly diagonalize a commuting family of unitaries.
/// Throws std::invalid_argument if the family does not commute and
/// NumericsError if the residual is above 1e-8.
Eigen::MatrixXcd simultaneous_diagonalizer(const std::vector<UnitaryMatrix> &family, int dim);

/// max over eigenvectors v of T and U in deltas of |<v|U|v>|.
/// Throws std::invalid_argument if T commutes with some element of deltas.
double verify_lemma1(const Gpm &t, const DiffSet &deltas);

/// Bob's states U_i v for each eigenvector v of T; max |off-diagonal Gram entry|.
/// Throws std::invalid_argument unless T fails to commute with every difference.
double one_way_gram_check(const GbsSet &s, const Gpm &t);

/// alpha = Q beta, beta uniform, Q a joint diagonalizer of the difference set.
/// Throws std::invalid_argument for a non-commutative difference set.
StateVector commuting_witness(const GbsSet &s);

/// Common eigenvector of X^s and Z^t; d = s * t with s, t >= 2.
StateVector composite_witness(const GbsSet &s, int s_factor, int t_factor);
StateVector composite_witness(const GbsSet &s);

/// max over A in the difference set of |<psi|A|psi>|.
double witness_deviation(const GbsSet &s, const StateVector &psi);

Complex trace_check(const Gpm &g);

}  // namespace gbslocc
