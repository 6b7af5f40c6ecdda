#pragma once

#include <vector>

namespace xkerr {

/// CODATA value of the reduced Planck constant [J s].
inline constexpr double kHbar = 1.054571817e-34;

/// Physical rates of the driven two-mode system. All frequencies and rates are
/// angular [rad/s]; conversions from ordinary frequencies (x 2*pi) happen at
/// ingestion, never here.
struct SystemParams {
    double omega = 0.0;   ///< pump mode angular frequency
    double Omega = 0.0;   ///< probe mode angular frequency
    double g = 0.0;       ///< cross-Kerr rate
    double f = 0.0;       ///< parametric amplification rate
    double kappa = 0.0;   ///< pump loss rate
    double Gamma = 0.0;   ///< probe loss rate
    double eta = 0.0;     ///< coupling efficiency, in [0, 1]
    double P_op = 0.0;    ///< input optical power [W]

    /// Throws InvalidParameterError unless all rates are strictly positive,
    /// eta is in [0, 1] and P_op is nonnegative.
    void validate() const;
};

/// Builds SystemParams from quality factors: kappa = omega / Q_pump,
/// Gamma = Omega / Q_probe.
SystemParams params_from_quality_factors(double omega, double Omega, double g, double f,
                                         double Q_pump, double Q_probe, double eta,
                                         double P_op);

/// Dimensionless parameter set. gamma[l-1] holds the normalized loss rate of
/// block l, gamma_l = [Gamma + (l-1) kappa] / (2 Omega).
struct NormalizedParams {
    double alpha = 0.0;          ///< f / Omega
    double beta = 0.0;           ///< g / Omega
    double lambda = 0.0;         ///< kappa / (2 Omega)
    double xi = 0.0;             ///< normalized photon input rate
    std::vector<double> gamma;   ///< block loss ladder, size L
    int L = 0;                   ///< truncation order

    double gamma1() const { return gamma.front(); }
};

/// Default truncation order: three blocks, the smallest order for which the
/// finite reduction of the block system can be exercised.
inline constexpr int kDefaultTruncationOrder = 3;

/// Converts physical parameters to the dimensionless set at truncation order L.
NormalizedParams normalize(const SystemParams& p, int L = kDefaultTruncationOrder);

/// Assembles a NormalizedParams directly from dimensionless values with xi = 0.
/// Useful for desk exploration where only ratios matter.
NormalizedParams make_normalized(double alpha, double beta, double lambda, double gamma1,
                                 int L = kDefaultTruncationOrder);

}  // namespace xkerr
