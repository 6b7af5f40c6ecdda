#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "xkerr/params.hpp"

namespace xkerr {

using Matrix3cd = Eigen::Matrix3cd;
using Matrix3d = Eigen::Matrix3d;

/// Block-bidiagonal coefficient matrices of the truncated Langevin system in
/// the basis ordering {m, d, d+} within each block.
struct BlockSystem {
    Eigen::MatrixXd M;         ///< (3L)x(3L), A on the diagonal blocks, B on the superdiagonal
    Eigen::MatrixXd GammaMat;  ///< (3L)x(3L) diagonal decay matrix, blockdiag(G_1..G_L)
    Matrix3d A;                ///< in-block coupling partition
    Matrix3d B;                ///< block-raising partition, diag(0, -beta, beta)
    std::vector<Matrix3d> G;   ///< G_l = gamma_l * I, size L
    int L = 0;

    /// iM - GammaMat, the drift of the normalized system.
    Eigen::MatrixXcd drift() const;
};

/// Builds the block system for L >= 2.
BlockSystem build_blocks(const NormalizedParams& np);

/// Transformation maps that decouple the leading six rows of the drift.
struct ReductionMaps {
    Matrix3cd U;
    Matrix3cd V;
    Eigen::MatrixXcd P;  ///< 9x9 unimodular, identity with U, V in the third block column
    Eigen::MatrixXcd Q;  ///< (3L)x(3L), P embedded in the top-left corner

    Eigen::MatrixXcd P_inverse() const;  ///< explicit inverse (negated U, V)
    Eigen::MatrixXcd Q_inverse() const;
};

/// Closed-form V. Requires lambda != 0 and lambda * (4 alpha^2 - lambda^2 - 1) != 0;
/// throws SingularTransformError otherwise.
Matrix3cd solve_V_closed(const NormalizedParams& np);

/// Solves the two coupled decoupling equations
///   i(AU - UA + BV) - G1 U + U G3 = 0
///   i(AV - VA + B)  - G2 V + V G3 = 0
/// as one flattened 18x18 complex linear system and assembles P, Q.
/// Throws DegenerateDecayError when the system is singular.
ReductionMaps solve_UV_general(const BlockSystem& bs);

/// Numerical verification of the finite reduction.
struct ReductionReport {
    int L = 0;
    double decoupling_residual = 0.0;   ///< max |T(r,c)| over rows 1..6, columns 7..3L
    double block_residual = 0.0;        ///< top-left 6x6 of T vs [[iA-G1, iB], [0, iA-G2]]
    double unimodularity_residual = 0.0;  ///< |det(P) - 1|
    double inverse_residual = 0.0;        ///< max |P P^-1 - I| with the explicit inverse
    double eigenvalue_residual = 0.0;     ///< matched eigenvalue drift under the similarity
    double sylvester_residual = 0.0;      ///< max residual of the two decoupling equations
    bool decoupled = false;               ///< decoupling_residual < tolerance
    bool block_match = false;             ///< block_residual < tolerance
    bool passed = false;                  ///< all checks below their tolerances
    std::string format() const;           ///< structured multi-line text
};

/// Residual tolerance against which the reduction is declared exact.
inline constexpr double kReductionTol = 1e-10;

/// Computes T = Q^-1 (iM - Gamma) Q and reports the decoupling residuals.
/// For L > 3 only the first six rows are asserted; residuals for the remaining
/// columns are still reported.
ReductionReport verify_reduction(const BlockSystem& bs, const ReductionMaps& rm);

/// Reduction of the first block alone, valid when the pump is treated
/// classically. V solves i(AV - VA + B) - G1 V + V G2 = 0 and P is the 6x6
/// unimodular map with V in the upper-right block.
struct ClassicalPumpReduction {
    Matrix3cd V;
    Eigen::MatrixXcd P;                ///< 6x6
    double decoupling_residual = 0.0;  ///< top-right 3x3 block of the transformed drift
    bool decoupled = false;
};

ClassicalPumpReduction classical_pump_V(const NormalizedParams& np);

}  // namespace xkerr
