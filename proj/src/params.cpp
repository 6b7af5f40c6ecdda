#include "xkerr/params.hpp"

#include <cmath>
#include <string>

#include "xkerr/errors.hpp"

namespace xkerr {

void SystemParams::validate() const {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw InvalidParameterError(std::string(name) + " must be strictly positive");
        }
    };
    require_positive(omega, "omega");
    require_positive(Omega, "Omega");
    require_positive(g, "g");
    require_positive(f, "f");
    require_positive(kappa, "kappa");
    require_positive(Gamma, "Gamma");
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidParameterError("eta must lie in [0, 1]");
    }
    if (!(P_op >= 0.0) || !std::isfinite(P_op)) {
        throw InvalidParameterError("P_op must be nonnegative");
    }
}

SystemParams params_from_quality_factors(double omega, double Omega, double g, double f,
                                         double Q_pump, double Q_probe, double eta,
                                         double P_op) {
    if (!(Q_pump > 0.0) || !(Q_probe > 0.0)) {
        throw InvalidParameterError("quality factors must be strictly positive");
    }
    SystemParams p{omega, Omega, g, f, omega / Q_pump, Omega / Q_probe, eta, P_op};
    p.validate();
    return p;
}

NormalizedParams normalize(const SystemParams& p, int L) {
    p.validate();
    if (L < 1) throw InvalidParameterError("truncation order L must be >= 1");

    NormalizedParams np;
    np.alpha = p.f / p.Omega;
    np.beta = p.g / p.Omega;
    np.lambda = p.kappa / (2.0 * p.Omega);
    np.L = L;
    np.gamma.resize(static_cast<std::size_t>(L));
    for (int l = 1; l <= L; ++l) {
        np.gamma[static_cast<std::size_t>(l - 1)] =
            (p.Gamma + (l - 1) * p.kappa) / (2.0 * p.Omega);
    }
    np.xi = std::sqrt(p.kappa * p.eta * p.P_op / (kHbar * p.omega)) / (2.0 * p.Omega);
    return np;
}

NormalizedParams make_normalized(double alpha, double beta, double lambda, double gamma1,
                                 int L) {
    if (L < 1) throw InvalidParameterError("truncation order L must be >= 1");
    if (!(gamma1 > 0.0)) throw InvalidParameterError("gamma1 must be strictly positive");
    if (lambda < 0.0) throw InvalidParameterError("lambda must be nonnegative");
    NormalizedParams np;
    np.alpha = alpha;
    np.beta = beta;
    np.lambda = lambda;
    np.xi = 0.0;
    np.L = L;
    np.gamma.resize(static_cast<std::size_t>(L));
    for (int l = 0; l < L; ++l) np.gamma[static_cast<std::size_t>(l)] = gamma1 + l * lambda;
    return np;
}

}  // namespace xkerr
