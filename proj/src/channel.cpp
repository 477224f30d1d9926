#include "fsorelay/channel.hpp"

#include <cmath>

#include "fsorelay/specfun.hpp"

namespace fso::channel {

const char* to_string(LinkKind kind) {
    switch (kind) {
        case LinkKind::GU: return "GU";
        case LinkKind::UU: return "UU";
        default: return "UG";
    }
}

double rytov_variance(double distance, double cn2, double wavelength) {
    if (!(distance >= 0.0)) throw DomainError("rytov_variance: distance must be >= 0");
    const double k = 2.0 * M_PI / wavelength;
    return 1.23 * cn2 * std::pow(k, 7.0 / 6.0) * std::pow(distance, 11.0 / 6.0);
}

void turbulence_params(double rytov2, double& alpha, double& beta) {
    if (!(rytov2 > 0.0)) throw DomainError("turbulence_params: sigma_R^2 must be > 0");
    const double s125 = std::pow(rytov2, 12.0 / 5.0);
    alpha = 1.0 / std::expm1(0.49 * rytov2 / std::pow(1.0 + 1.11 * s125, 7.0 / 6.0));
    beta = 1.0 / std::expm1(0.51 * rytov2 / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
}

double atmospheric_loss(double distance, double attenuation) {
    if (!(distance >= 0.0)) throw DomainError("atmospheric_loss: distance must be >= 0");
    return std::exp(-distance * attenuation);
}

double displacement_variance(LinkKind kind, double distance, const SystemConfig& config) {
    const double pu2 = config.sigma_p_u * config.sigma_p_u;
    const double pg2 = config.sigma_p_g * config.sigma_p_g;
    const double za2 = distance * distance * config.sigma_angle_u * config.sigma_angle_u;
    switch (kind) {
        case LinkKind::GU: return pu2 + pg2;
        case LinkKind::UU: return 2.0 * pu2 + za2;
        default: return pu2 + pg2 + za2;
    }
}

void pointing_params(double aperture_radius, double beam_width, double sigma_s2,
                     bool exact_beam_width, double& v, double& bigA, double& w_zeq2,
                     double& zeta2) {
    if (!(aperture_radius > 0.0 && beam_width > 0.0 && sigma_s2 > 0.0))
        throw DomainError("pointing_params: inputs must be > 0");
    v = std::sqrt(M_PI) * aperture_radius / (std::sqrt(2.0) * beam_width);
    const double erf_v = specfun::erf(v);
    bigA = erf_v * erf_v;
    w_zeq2 = exact_beam_width
                 ? beam_width * beam_width * std::sqrt(M_PI) * erf_v /
                       (2.0 * v * std::exp(-v * v))
                 : beam_width * beam_width + 3.0 / (2.0 * std::sqrt(2.0));
    zeta2 = w_zeq2 / (4.0 * sigma_s2);
}

double aoa_interruption_prob(double fov, double sigma_angle, int m) {
    if (!(fov >= 0.0)) throw DomainError("aoa_interruption_prob: fov must be >= 0");
    return std::exp(-fov * fov / (2.0 * m * sigma_angle * sigma_angle));
}

double noise_variance(double fov, double noise_coeff) {
    return noise_coeff * fov * fov;
}

double gain_threshold(double fov, double p_t, double responsivity, double noise_coeff,
                      double snr_threshold) {
    if (!(p_t > 0.0)) throw DomainError("gain_threshold: transmit power must be > 0");
    return fov / (responsivity * p_t) * std::sqrt(snr_threshold * noise_coeff / 2.0);
}

LinkDerived derive_link(const LinkSpec& spec, const SystemConfig& config, double p_t) {
    if (!(spec.distance > 0.0)) throw DomainError("derive_link: distance must be > 0");
    if (!(spec.beam_width > 0.0)) throw DomainError("derive_link: beam_width must be > 0");
    if (!(spec.fov > 0.0)) throw DomainError("derive_link: fov must be > 0");

    LinkDerived d{};
    d.kind = spec.kind;
    d.distance = spec.distance;
    d.beam_width = spec.beam_width;
    d.fov = spec.fov;
    d.sigma_angle = config.sigma_angle_u;
    d.rytov2 = spec.rytov_override
                   ? *spec.rytov_override
                   : rytov_variance(spec.distance, config.cn2, config.wavelength);
    turbulence_params(d.rytov2, d.alpha, d.beta);
    d.h_loss = atmospheric_loss(spec.distance, config.attenuation);
    d.sigma_s2 = displacement_variance(spec.kind, spec.distance, config);
    pointing_params(config.aperture_radius, spec.beam_width, d.sigma_s2,
                    config.exact_beam_width, d.v, d.bigA, d.w_zeq2, d.zeta2);
    d.m = spec.kind == LinkKind::UU ? 2 : 1;
    d.sigma_n2 = noise_variance(spec.fov, config.noise_coeff);
    d.h_th = gain_threshold(spec.fov, p_t, config.responsivity, config.noise_coeff,
                            config.snr_threshold);
    d.p_t = p_t;
    d.ultra_strong_turbulence = d.beta <= 1.0;
    return d;
}

}  // namespace fso::channel
