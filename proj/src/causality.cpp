#include "shockprof/causality.hpp"

#include <algorithm>
#include <cmath>

namespace shockprof {

std::string_view to_string(CausalityClass c) {
    switch (c) {
        case CausalityClass::acausal_nonreal: return "acausal-nonreal";
        case CausalityClass::acausal_superluminal: return "acausal-superluminal";
        case CausalityClass::strictly_causal: return "strictly-causal";
        case CausalityClass::sharply_causal: return "sharply-causal";
    }
    return "unknown";
}

double dispersion_polynomial(double s, const DissipationParams& p) {
    const double et = p.eta_tilde();
    const double mu = p.mu();
    const double nu = p.nu();
    return (9.0 * mu * nu * s - 3.0 * mu * (3.0 * et + 2.0 * nu)) * s - nu * (et - mu);
}

DispersionRoots dispersion_roots(const DissipationParams& p) {
    const double et = p.eta_tilde();
    const double mu = p.mu();
    const double nu = p.nu();
    const double a = 9.0 * mu * nu;
    const double b = -3.0 * mu * (3.0 * et + 2.0 * nu);
    const double c = nu * (mu - et);

    DispersionRoots out;
    out.discriminant = et * (81.0 * mu * mu * et + 36.0 * mu * nu * (3.0 * mu + nu));
    if (out.discriminant >= 0.0) {
        // b < 0, so -b + sqrt(disc) has no cancellation.
        const double q = 0.5 * (-b + std::sqrt(out.discriminant));
        const double big = q / a;
        const double small = c / q;
        out.sigma_squared = {std::complex<double>(std::min(big, small)),
                             std::complex<double>(std::max(big, small))};
        out.real = true;
    } else {
        const double re = -b / (2.0 * a);
        const double im = std::sqrt(-out.discriminant) / (2.0 * a);
        out.sigma_squared = {std::complex<double>(re, -im), std::complex<double>(re, im)};
        out.real = false;
    }
    return out;
}

double pi_at_one(const DissipationParams& p) {
    return 4.0 * p.mu() * p.nu() - (9.0 * p.mu() + p.nu()) * p.eta_tilde();
}

CausalityReport classify_causality(const DissipationParams& p, double tol) {
    const DispersionRoots roots = dispersion_roots(p);
    CausalityReport rep;
    rep.sigma_squared = roots.sigma_squared;
    rep.pi_at_one = pi_at_one(p);
    rep.discriminant = roots.discriminant;
    rep.nu_star = p.nu_star();

    const double lo = rep.sigma2_min();
    const double hi = rep.sigma2_max();
    if (!roots.real || lo < -tol) {
        rep.classification = CausalityClass::acausal_nonreal;
    } else if (std::abs(hi - 1.0) <= tol) {
        rep.classification = CausalityClass::sharply_causal;
    } else if (hi < 1.0) {
        rep.classification = CausalityClass::strictly_causal;
    } else {
        rep.classification = CausalityClass::acausal_superluminal;
    }

    const bool mu_ok = p.mu() >= p.eta_tilde();
    if (rep.nu_star) {
        const double ns = *rep.nu_star;
        rep.inequality_general = mu_ok && p.nu() <= ns;
        rep.inequality_strict = mu_ok && p.nu() < ns;
        rep.inequality_sharp = mu_ok && std::abs(p.nu() - ns) <= tol * ns;
    }
    const bool causal_by_roots = rep.classification == CausalityClass::strictly_causal ||
                                 rep.classification == CausalityClass::sharply_causal;
    rep.inequality_disagrees = causal_by_roots != rep.inequality_general;
    return rep;
}

}  // namespace shockprof
