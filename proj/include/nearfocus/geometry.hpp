// Geometry and coordinate conventions shared by every other header.
//
// Conventions (used throughout the library):
//   * Right-handed Cartesian coordinates, lengths in meters.
//   * The reflecting panel lies in the x-z plane, centered on the origin,
//     with its boresight along +y. Everything it serves lives at y > 0.
//   * Azimuth is measured in the x-y plane from the +y boresight, positive
//     toward +x. Elevation tilts out of that plane toward +z.

#ifndef NEARFOCUS_GEOMETRY_HPP
#define NEARFOCUS_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearfocus {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

inline void require_domain(bool cond, const std::string& what) {
    if (!cond) throw std::domain_error(what);
}

}  // namespace detail

inline double deg_to_rad(double deg) { return deg * (pi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / pi); }

/// Nudges an angle (by at most a couple of ulps) onto a value that survives
/// radians -> degrees -> radians conversion unchanged. File formats store
/// angles in degrees; angles canonicalized this way serialize bit-exactly.
inline double canonical_angle(double rad) {
    for (int i = 0; i < 8; ++i) {
        const double r2 = deg_to_rad(rad_to_deg(rad));
        if (r2 == rad) break;
        rad = r2;
    }
    return rad;
}

/// Wraps an angle into [0, 2*pi).
inline double mod_two_pi(double x) {
    double m = std::fmod(x, two_pi);
    if (m < 0.0) m += two_pi;
    if (m >= two_pi) m -= two_pi;
    return m;
}

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
    friend bool operator==(const Point3&, const Point3&) = default;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

/// Rectangular grid of reflecting elements in the x-z plane, centered on the
/// origin. `spacing` is the center-to-center pitch in meters.
struct IrsPanel {
    int rows;
    int cols;
    double spacing;

    IrsPanel(int rows_, int cols_, double spacing_) : rows(rows_), cols(cols_), spacing(spacing_) {
        detail::require(rows >= 1, "IrsPanel: rows must be >= 1");
        detail::require(cols >= 1, "IrsPanel: cols must be >= 1");
        detail::require(std::isfinite(spacing) && spacing > 0.0, "IrsPanel: spacing must be > 0");
    }

    int element_count() const { return rows * cols; }

    static constexpr Point3 center() { return {0.0, 0.0, 0.0}; }

    /// Corner-to-corner extent of the element grid.
    double aperture_diagonal() const {
        const double dr = rows - 1, dc = cols - 1;
        return std::sqrt(dr * dr + dc * dc) * spacing;
    }
};

/// Element centers in row-major order: index = row * cols + col. The column
/// index increases x, the row index decreases z (row 0 is the top row), and
/// the grid is symmetric about the panel center.
inline std::vector<Point3> element_positions(const IrsPanel& panel) {
    std::vector<Point3> pts;
    pts.reserve(static_cast<size_t>(panel.element_count()));
    const double half = panel.spacing / 2.0;
    for (int r = 0; r < panel.rows; ++r) {
        const double z = static_cast<double>((panel.rows - 1) - 2 * r) * half;
        for (int c = 0; c < panel.cols; ++c) {
            const double x = static_cast<double>(2 * c - (panel.cols - 1)) * half;
            pts.push_back({x, 0.0, z});
        }
    }
    return pts;
}

namespace detail {

/// Streams element centers in the same order as element_positions() without
/// allocating. fn(index, x, z) is called once per element.
template <typename Fn>
inline void for_each_element(const IrsPanel& panel, Fn&& fn) {
    const double half = panel.spacing / 2.0;
    int idx = 0;
    for (int r = 0; r < panel.rows; ++r) {
        const double z = static_cast<double>((panel.rows - 1) - 2 * r) * half;
        for (int c = 0; c < panel.cols; ++c, ++idx) {
            const double x = static_cast<double>(2 * c - (panel.cols - 1)) * half;
            fn(idx, x, z);
        }
    }
}

}  // namespace detail

/// Physical setup: panel, carrier, transmitter, and power levels.
struct Scene {
    IrsPanel panel;
    double carrier_frequency_hz;
    Point3 tx_position;
    double tx_power_w;
    double noise_power_w;

    Scene(IrsPanel panel_, double carrier_frequency_hz_, Point3 tx_position_, double tx_power_w_,
          double noise_power_w_)
        : panel(panel_),
          carrier_frequency_hz(carrier_frequency_hz_),
          tx_position(tx_position_),
          tx_power_w(tx_power_w_),
          noise_power_w(noise_power_w_) {
        detail::require(std::isfinite(carrier_frequency_hz) && carrier_frequency_hz > 0.0,
                        "Scene: carrier frequency must be > 0");
        detail::require(tx_position.finite() && tx_position.y > 0.0,
                        "Scene: tx must lie strictly on the +y side of the panel");
        detail::require(std::isfinite(tx_power_w) && tx_power_w > 0.0, "Scene: tx power must be > 0");
        detail::require(std::isfinite(noise_power_w) && noise_power_w > 0.0,
                        "Scene: noise power must be > 0");
    }

    double wavelength() const { return speed_of_light / carrier_frequency_hz; }
    double wavenumber() const { return two_pi / wavelength(); }
};

/// Angular/radial slab served by a codebook: azimuths in
/// (-pi/2, pi/2), distances from the panel center, at one fixed elevation.
struct CoverageRegion {
    double azimuth_min;
    double azimuth_max;
    double distance_min;
    double distance_max;
    double elevation = 0.0;

    /// Angles are canonicalized with canonical_angle() so regions serialize
    /// (in degrees) and reload bit-exactly.
    CoverageRegion(double azimuth_min_, double azimuth_max_, double distance_min_, double distance_max_,
                   double elevation_ = 0.0)
        : azimuth_min(canonical_angle(azimuth_min_)),
          azimuth_max(canonical_angle(azimuth_max_)),
          distance_min(distance_min_),
          distance_max(distance_max_),
          elevation(canonical_angle(elevation_)) {
        detail::require(-pi / 2.0 < azimuth_min && azimuth_min < azimuth_max && azimuth_max < pi / 2.0,
                        "CoverageRegion: need -pi/2 < azimuth_min < azimuth_max < pi/2");
        detail::require(0.0 < distance_min && distance_min < distance_max &&
                            std::isfinite(distance_max),
                        "CoverageRegion: need 0 < distance_min < distance_max");
        detail::require(std::isfinite(elevation) && std::abs(elevation) < pi / 2.0,
                        "CoverageRegion: need |elevation| < pi/2");
    }

    double azimuth_span() const { return azimuth_max - azimuth_min; }
    double distance_span() const { return distance_max - distance_min; }

    bool contains(double azimuth, double distance) const {
        return azimuth >= azimuth_min && azimuth <= azimuth_max && distance >= distance_min &&
               distance <= distance_max;
    }
};

/// Polar-to-Cartesian conversion in the library's convention (no bounds
/// checks): azimuth from +y toward +x, elevation toward +z.
inline Point3 polar_point(double azimuth, double dist, double elevation = 0.0) {
    const double ce = std::cos(elevation);
    return {dist * ce * std::sin(azimuth), dist * ce * std::cos(azimuth), dist * std::sin(elevation)};
}

/// Cartesian point at the given in-region polar coordinates (distance from
/// the panel center, in the plane of region.elevation). Bounds are inclusive.
inline Point3 region_point(const CoverageRegion& region, double azimuth, double dist) {
    detail::require_domain(azimuth >= region.azimuth_min && azimuth <= region.azimuth_max,
                           "region_point: azimuth outside region");
    detail::require_domain(dist >= region.distance_min && dist <= region.distance_max,
                           "region_point: distance outside region");
    return polar_point(azimuth, dist, region.elevation);
}

/// Conventional near-/far-field boundary 2*D^2/lambda with D the panel's
/// aperture diagonal. Undefined for a single element (no aperture).
inline double fraunhofer_distance(const IrsPanel& panel, double wavelength) {
    detail::require_domain(panel.element_count() > 1,
                           "fraunhofer_distance: single-element panel has no aperture");
    detail::require_domain(wavelength > 0.0, "fraunhofer_distance: wavelength must be > 0");
    const double d = panel.aperture_diagonal();
    return 2.0 * d * d / wavelength;
}

}  // namespace nearfocus

#endif  // NEARFOCUS_GEOMETRY_HPP
