#ifndef FSORELAY_CHANNEL_HPP
#define FSORELAY_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <optional>

#include "fsorelay/errors.hpp"

namespace fso::channel {

/// Global physical constants and hardware parameters. Defaults are the
/// baseline hovering-UAV FSO setup; all quantities in SI units (meters,
/// radians, watts). Attenuation is stored per meter (converted from the
/// conventional km^-1 at the input boundary).
struct SystemConfig {
    double wavelength = 1550e-9;       ///< lambda [m]
    double cn2 = 5e-14;                ///< refractive-index structure parameter [m^-2/3]
    double responsivity = 0.9;         ///< optoelectronic conversion factor R
    double attenuation = 1e-3;         ///< Phi [m^-1] (1 km^-1 default)
    double noise_coeff = 1e-9;         ///< Lambda [W^2 rad^-2], sigma_n^2 = Lambda * fov^2
    double sigma_p_u = 0.1;            ///< UAV position deviation std [m]
    double sigma_p_g = 0.1;            ///< ground transceiver position deviation std [m]
    double sigma_angle_u = 1.2e-3;     ///< UAV orientation deviation std [rad]
    double aperture_radius = 0.05;     ///< receiver lens radius r_a [m]
    double snr_threshold = 10.0;       ///< Upsilon_th, linear ratio (10 dB default)
    bool exact_beam_width = false;     ///< use the exact equivalent-beam-width formula
};

enum class LinkKind : std::uint8_t { GU, UU, UG };

const char* to_string(LinkKind kind);

/// Per-link inputs: hop geometry and the adjustable receiver parameters.
struct LinkSpec {
    LinkKind kind = LinkKind::UU;
    double distance = 250.0;       ///< Z [m]
    double beam_width = 2.0;       ///< w_z at the receiver plane [m]
    double fov = 8e-3;             ///< receiver field of view half-angle [rad]
    std::optional<double> rytov_override;  ///< force sigma_R^2 instead of deriving from Z
};

/// Everything the outage expressions need, derived once per link.
struct LinkDerived {
    LinkKind kind;
    double distance;
    double beam_width;
    double fov;
    double sigma_angle;    ///< orientation deviation std used for this link [rad]
    double rytov2;         ///< sigma_R^2
    double alpha;          ///< large-scale turbulence parameter
    double beta;           ///< small-scale turbulence parameter
    double h_loss;         ///< atmospheric loss h^(l), in (0, 1]
    double sigma_s2;       ///< total displacement variance [m^2]
    double v;              ///< sqrt(pi) r_a / (sqrt(2) w_z)
    double bigA;           ///< fraction of collected power at zero displacement
    double w_zeq2;         ///< squared equivalent beam width [m^2]
    double zeta2;          ///< w_zeq^2 / (4 sigma_s^2)
    int m;                 ///< AoA Rayleigh factor: 1 for GU/UG, 2 for UU
    double sigma_n2;       ///< receiver noise variance [W^2]
    double h_th;           ///< outage gain threshold at the supplied P_t
    double p_t;            ///< per-link transmit power used for h_th [W]
    bool ultra_strong_turbulence;  ///< beta <= 1: outside the regime the
                                   ///< asymptotic expressions assume
};

/// sigma_R^2 = 1.23 Cn2 k^(7/6) Z^(11/6), k = 2 pi / lambda.
double rytov_variance(double distance, double cn2, double wavelength);

/// Gamma-Gamma (alpha, beta) from the Rytov variance.
void turbulence_params(double rytov2, double& alpha, double& beta);

/// Beers-Lambert loss exp(-Z Phi); attenuation in m^-1.
double atmospheric_loss(double distance, double attenuation);

/// Total radial displacement variance by link kind [m^2].
double displacement_variance(LinkKind kind, double distance, const SystemConfig& config);

/// Pointing-error geometry: v, A = erf(v)^2, squared equivalent beam width
/// and zeta^2 = w_zeq^2 / (4 sigma_s^2).
void pointing_params(double aperture_radius, double beam_width, double sigma_s2,
                     bool exact_beam_width, double& v, double& bigA, double& w_zeq2,
                     double& zeta2);

/// Probability that the angle of arrival exceeds the FoV: exp(-fov^2/(2 m sigma^2)).
double aoa_interruption_prob(double fov, double sigma_angle, int m);

/// sigma_n^2 = Lambda * fov^2.
double noise_variance(double fov, double noise_coeff);

/// Gain threshold h_th = (fov / (R P_t)) sqrt(Upsilon_th Lambda / 2).
double gain_threshold(double fov, double p_t, double responsivity, double noise_coeff,
                      double snr_threshold);

/// All derived quantities for one link at per-link transmit power p_t [W].
LinkDerived derive_link(const LinkSpec& spec, const SystemConfig& config, double p_t);

/// Convenience: dBm -> watts.
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

}  // namespace fso::channel

#endif
