// Free-space cascaded channel tx -> element -> rx and the derived gain/SNR
// metrics. There is no direct tx-rx path, no fading, and no element loss: the
// surface is an ideal phase shifter.
//
// For element n at e_n with phase theta_n, wavenumber k = 2*pi/lambda:
//
//   h = sum_n a(d_tx,n) * a(d_rx,n) * exp(i * (theta_n - k*(d_tx,n + d_rx,n)))
//
// with per-link free-space amplitude a(d) = lambda / (4*pi*d). Summation is
// always in element-index order so results are bit-reproducible.

#ifndef NEARFOCUS_CHANNEL_HPP
#define NEARFOCUS_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "nearfocus/geometry.hpp"

namespace nearfocus {

using ComplexAmplitude = std::complex<double>;

enum class Quantization { continuous, binary };

/// Per-element phase configuration, each value in [0, 2*pi). A binary-tagged
/// profile only holds 0 or pi.
class PhaseProfile {
  public:
    PhaseProfile(std::vector<double> phases, Quantization tag)
        : phases_(std::move(phases)), tag_(tag) {
        detail::require(!phases_.empty(), "PhaseProfile: empty");
        for (double p : phases_) {
            detail::require(std::isfinite(p) && p >= 0.0 && p < two_pi,
                            "PhaseProfile: phases must lie in [0, 2*pi)");
            if (tag_ == Quantization::binary)
                detail::require(p == 0.0 || p == pi, "PhaseProfile: binary profile must use {0, pi}");
        }
    }

    std::size_t size() const { return phases_.size(); }
    double operator[](std::size_t i) const { return phases_[i]; }
    const std::vector<double>& phases() const { return phases_; }
    Quantization quantization() const { return tag_; }

  private:
    std::vector<double> phases_;
    Quantization tag_;
};

namespace detail {

inline void check_channel_args(const Scene& scene, const PhaseProfile& profile, const Point3& rx) {
    require_domain(profile.size() == static_cast<std::size_t>(scene.panel.element_count()),
                   "channel: profile length does not match panel");
    require_domain(rx.finite() && rx.y > 0.0, "channel: rx must lie strictly on the +y side");
}

inline double elem_dist(double px, double pz, const Point3& p) {
    const double dx = p.x - px, dy = p.y, dz = p.z - pz;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace detail

/// Cascaded channel coefficient h (see header comment).
inline ComplexAmplitude cascaded_channel(const Scene& scene, const PhaseProfile& profile,
                                         const Point3& rx) {
    detail::check_channel_args(scene, profile, rx);
    const double k = scene.wavenumber();
    const double amp_scale = scene.wavelength() / (4.0 * pi);
    double re = 0.0, im = 0.0;
    detail::for_each_element(scene.panel, [&](int n, double x, double z) {
        const double d_tx = detail::elem_dist(x, z, scene.tx_position);
        const double d_rx = detail::elem_dist(x, z, rx);
        detail::require_domain(d_rx > 0.0, "cascaded_channel: rx coincides with an element");
        const double a = (amp_scale / d_tx) * (amp_scale / d_rx);
        const double ph = profile[static_cast<std::size_t>(n)] - k * (d_tx + d_rx);
        re += a * std::cos(ph);
        im += a * std::sin(ph);
    });
    return {re, im};
}

/// Phase-alignment gain |sum_n exp(i*(theta_n - k*(d_tx,n + d_rx,n)))| with
/// unit element amplitudes; ranges over [0, N].
inline double array_gain(const Scene& scene, const PhaseProfile& profile, const Point3& rx) {
    detail::check_channel_args(scene, profile, rx);
    const double k = scene.wavenumber();
    double re = 0.0, im = 0.0;
    detail::for_each_element(scene.panel, [&](int n, double x, double z) {
        const double d_tx = detail::elem_dist(x, z, scene.tx_position);
        const double d_rx = detail::elem_dist(x, z, rx);
        detail::require_domain(d_rx > 0.0, "array_gain: rx coincides with an element");
        const double ph = profile[static_cast<std::size_t>(n)] - k * (d_tx + d_rx);
        re += std::cos(ph);
        im += std::sin(ph);
    });
    return std::sqrt(re * re + im * im);
}

inline double snr_linear(const Scene& scene, const PhaseProfile& profile, const Point3& rx) {
    const double mag = std::abs(cascaded_channel(scene, profile, rx));
    return scene.tx_power_w * mag * mag / scene.noise_power_w;
}

/// 10*log10( P * |h|^2 / noise ).
inline double snr_db(const Scene& scene, const PhaseProfile& profile, const Point3& rx) {
    return 10.0 * std::log10(snr_linear(scene, profile, rx));
}

}  // namespace nearfocus

#endif  // NEARFOCUS_CHANNEL_HPP
