#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tomoroute/settings.hpp"
#include "tomoroute/tour.hpp"

namespace tomoroute {

/// Square transition-cost matrix between settings. Entries are non-negative
/// with a zero diagonal; `symmetric` is a guarantee, not an observation: it is
/// set only by constructions that produce exactly mirrored entries.
struct CostMatrix {
    int n = 0;
    Unit unit = Unit::degrees;
    bool symmetric = true;
    std::vector<double> w; // row-major, n*n

    static CostMatrix zero(int n, Unit unit, bool symmetric) {
        if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
        CostMatrix c;
        c.n = n;
        c.unit = unit;
        c.symmetric = symmetric;
        c.w.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        return c;
    }

    double at(int i, int j) const {
        return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
    double& at(int i, int j) {
        return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }

    /// Entrywise scan; used when the flag cannot be trusted (imported data).
    bool scan_symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
};

/// Motorized rotation mount: converts angular cost to time.
struct MountModel {
    double speed_deg_per_s = 10.0;
};

/// Resistive phase-shifter heater: dissipating `power_per_2pi` watts holds a
/// 2*pi phase, reached after `settle_time_per_2pi` seconds.
struct HeaterModel {
    double power_per_2pi = 0.5;
    double settle_time_per_2pi = 1.0;
};

/// Which steady-state power is attributed to a transition's settling interval.
/// The linear-ramp assumption admits several readings; `destination` is the
/// default, `average` models power ramping linearly between the two levels.
enum class HeatPower { destination, source, average };

inline const char* heat_power_name(HeatPower p) {
    switch (p) {
    case HeatPower::destination: return "destination";
    case HeatPower::source: return "source";
    case HeatPower::average: return "average";
    }
    return "?";
}

/// Transition cost = the largest angle (or phase) any single actuator travels,
/// as a plain absolute difference of the stored signed values. Mounts travel
/// the nominal arc; there is no modular shortcut.
inline CostMatrix max_angle_matrix(const SettingsSet& s) {
    if (s.settings.empty()) throw std::invalid_argument("settings set is empty");
    if (s.unit != Unit::degrees && s.unit != Unit::radians)
        throw std::invalid_argument("max_angle_matrix expects angular settings");
    const int n = s.size();
    CostMatrix c = CostMatrix::zero(n, s.unit, true);
    const std::size_t arity = s.settings.front().controls.size();
    for (int i = 0; i < n; ++i) {
        const double* a = s.settings[static_cast<std::size_t>(i)].controls.data();
        for (int j = i + 1; j < n; ++j) {
            const double* b = s.settings[static_cast<std::size_t>(j)].controls.data();
            double m = 0.0;
            for (std::size_t k = 0; k < arity; ++k) {
                const double d = std::fabs(a[k] - b[k]);
                if (d > m) m = d;
            }
            c.at(i, j) = m;
            c.at(j, i) = m;
        }
    }
    return c;
}

namespace detail {

inline double wrap_phase(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double y = std::fmod(x, two_pi);
    if (y < 0.0) y += two_pi;
    return y;
}

} // namespace detail

/// Heat transferred during one transition: the steady power of all heaters
/// (per `attribution`) times the settling time of the heater with the largest
/// phase change. Settling time uses the signed stored phases; steady power
/// wraps phases into [0, 2*pi) since power cannot be negative. Generally
/// asymmetric.
inline CostMatrix heat_matrix(const SettingsSet& s, const HeaterModel& m,
                              HeatPower attribution = HeatPower::destination) {
    if (s.settings.empty()) throw std::invalid_argument("settings set is empty");
    if (s.unit != Unit::radians)
        throw std::invalid_argument("heat_matrix expects phase settings in radians");
    if (!(m.power_per_2pi > 0.0) || !(m.settle_time_per_2pi > 0.0))
        throw std::invalid_argument("heater model constants must be positive");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int n = s.size();
    const std::size_t arity = s.settings.front().controls.size();

    std::vector<double> steady_power(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double p = 0.0;
        for (double v : s.settings[static_cast<std::size_t>(i)].controls)
            p += m.power_per_2pi * detail::wrap_phase(v) / two_pi;
        steady_power[static_cast<std::size_t>(i)] = p;
    }

    CostMatrix c = CostMatrix::zero(n, Unit::joules, false);
    for (int i = 0; i < n; ++i) {
        const double* a = s.settings[static_cast<std::size_t>(i)].controls.data();
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double* b = s.settings[static_cast<std::size_t>(j)].controls.data();
            double dmax = 0.0;
            for (std::size_t k = 0; k < arity; ++k) {
                const double d = std::fabs(a[k] - b[k]);
                if (d > dmax) dmax = d;
            }
            const double settle = m.settle_time_per_2pi * dmax / two_pi;
            double power = 0.0;
            switch (attribution) {
            case HeatPower::destination: power = steady_power[static_cast<std::size_t>(j)]; break;
            case HeatPower::source: power = steady_power[static_cast<std::size_t>(i)]; break;
            case HeatPower::average:
                power = 0.5 * (steady_power[static_cast<std::size_t>(i)] +
                               steady_power[static_cast<std::size_t>(j)]);
                break;
            }
            c.at(i, j) = power * settle;
        }
    }
    return c;
}

/// Total cost of the cyclic tour, including the closing transition from the
/// last setting back to the first.
inline double cycle_cost(const CostMatrix& c, const Tour& t) {
    if (t.size() != c.n) throw std::invalid_argument("tour length does not match matrix size");
    if (!t.is_permutation()) throw std::invalid_argument("tour is not a permutation");
    const int n = t.size();
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += c.at(t.order[static_cast<std::size_t>(i)],
                                              t.order[static_cast<std::size_t>((i + 1) % n)]);
    return total;
}

/// Angular cost (degrees) to wall time under a constant-speed rotation mount.
inline double to_temporal(double angular_cost_deg, const MountModel& m) {
    if (!(m.speed_deg_per_s > 0.0)) throw std::invalid_argument("mount speed must be positive");
    if (angular_cost_deg < 0.0) throw std::invalid_argument("angular cost must be >= 0");
    return angular_cost_deg / m.speed_deg_per_s;
}

/// Seconds per unit of matrix cost, for attaching wall-time figures to
/// speedup reports.
inline double temporal_scale(const MountModel& m) {
    if (!(m.speed_deg_per_s > 0.0)) throw std::invalid_argument("mount speed must be positive");
    return 1.0 / m.speed_deg_per_s;
}

inline double temporal_scale(const HeaterModel& m) {
    if (!(m.settle_time_per_2pi > 0.0)) throw std::invalid_argument("settle time must be positive");
    return m.settle_time_per_2pi / (2.0 * std::numbers::pi);
}

} // namespace tomoroute
