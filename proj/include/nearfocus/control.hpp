// Phase-profile construction: beamfocusing (exact spherical-wave distances),
// beamforming (first-order plane-wave expansion, angles only), and binary
// quantization.

#ifndef NEARFOCUS_CONTROL_HPP
#define NEARFOCUS_CONTROL_HPP

#include <cmath>
#include <vector>

#include "nearfocus/channel.hpp"
#include "nearfocus/geometry.hpp"

namespace nearfocus {

/// What a codeword steers at: a far-field direction (beamforming) or a
/// spatial point (beamfocusing).
struct SteeringTarget {
    enum class Kind { direction, point };

    Kind kind;
    Point3 value;

    static SteeringTarget toward(const Point3& unit_direction) {
        detail::require(std::abs(unit_direction.norm() - 1.0) <= 1e-12,
                        "SteeringTarget: direction must have unit norm");
        return {Kind::direction, unit_direction};
    }

    static SteeringTarget at(const Point3& point) {
        detail::require(point.finite() && point.y > 0.0,
                        "SteeringTarget: point must lie strictly on the +y side");
        return {Kind::point, point};
    }
};

/// theta_n = k * (|tx - e_n| + |target - e_n|) mod 2*pi. Aligns every
/// element's path phase at `target`, so the array gain there equals N.
inline PhaseProfile beamfocus_profile(const Scene& scene, const Point3& target) {
    detail::require_domain(target.finite() && target.y > 0.0,
                           "beamfocus_profile: target must lie strictly on the +y side");
    const double k = scene.wavenumber();
    std::vector<double> phases(static_cast<std::size_t>(scene.panel.element_count()));
    detail::for_each_element(scene.panel, [&](int n, double x, double z) {
        const double d_tx = detail::elem_dist(x, z, scene.tx_position);
        const double d_t = detail::elem_dist(x, z, target);
        detail::require_domain(d_t > 0.0, "beamfocus_profile: target coincides with an element");
        phases[static_cast<std::size_t>(n)] = mod_two_pi(k * (d_tx + d_t));
    });
    return {std::move(phases), Quantization::continuous};
}

/// theta_n = -k * <r_n, u_tx + direction> mod 2*pi, the first-order
/// plane-wave expansion of the beamfocus phase with constant terms dropped.
/// Both links are approximated; the transmitter enters only through its
/// direction u_tx from the panel center.
inline PhaseProfile beamform_profile(const Scene& scene, const Point3& direction) {
    detail::require_domain(std::abs(direction.norm() - 1.0) <= 1e-12,
                           "beamform_profile: direction must have unit norm");
    detail::require_domain(direction.y > 0.0, "beamform_profile: direction must point to +y");
    const double k = scene.wavenumber();
    const double tx_norm = scene.tx_position.norm();
    const Point3 u_tx = (1.0 / tx_norm) * scene.tx_position;
    const Point3 s = u_tx + direction;
    std::vector<double> phases(static_cast<std::size_t>(scene.panel.element_count()));
    detail::for_each_element(scene.panel, [&](int n, double x, double z) {
        phases[static_cast<std::size_t>(n)] = mod_two_pi(-k * (x * s.x + z * s.z));
    });
    return {std::move(phases), Quantization::continuous};
}

inline PhaseProfile steering_profile(const Scene& scene, const SteeringTarget& target) {
    return target.kind == SteeringTarget::Kind::direction ? beamform_profile(scene, target.value)
                                                          : beamfocus_profile(scene, target.value);
}

/// Rounds each phase to the nearest of {0, pi} under circular distance.
/// Ties (exactly pi/2 or 3*pi/2) round to 0. Only levels == 2 is supported.
/// Idempotent: binary input passes through unchanged.
inline PhaseProfile quantize(const PhaseProfile& profile, int levels) {
    detail::require_domain(levels == 2, "quantize: only binary (levels == 2) is supported");
    std::vector<double> phases(profile.size());
    for (std::size_t n = 0; n < profile.size(); ++n) {
        const double p = profile[n];
        phases[n] = (p > pi / 2.0 && p < 3.0 * pi / 2.0) ? pi : 0.0;
    }
    return {std::move(phases), Quantization::binary};
}

}  // namespace nearfocus

#endif  // NEARFOCUS_CONTROL_HPP
