#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tomoroute/errors.hpp"
#include "tomoroute/rng.hpp"

namespace tomoroute {

enum class Unit { degrees, radians, seconds, joules };

inline const char* unit_name(Unit u) {
    switch (u) {
    case Unit::degrees: return "degrees";
    case Unit::radians: return "radians";
    case Unit::seconds: return "seconds";
    case Unit::joules: return "joules";
    }
    return "?";
}

inline Unit unit_from_name(std::string_view name) {
    if (name == "degrees" || name == "deg") return Unit::degrees;
    if (name == "radians" || name == "rad") return Unit::radians;
    if (name == "seconds" || name == "s") return Unit::seconds;
    if (name == "joules" || name == "J") return Unit::joules;
    throw std::invalid_argument("unknown unit: " + std::string(name));
}

enum class Scheme { six_state, three_base, path_encoded, random, custom, product };

inline const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::six_state: return "six_state";
    case Scheme::three_base: return "three_base";
    case Scheme::path_encoded: return "path_encoded";
    case Scheme::random: return "random";
    case Scheme::custom: return "custom";
    case Scheme::product: return "product";
    }
    return "?";
}

inline Scheme scheme_from_name(std::string_view name) {
    if (name == "six_state" || name == "six-state") return Scheme::six_state;
    if (name == "three_base" || name == "three-base") return Scheme::three_base;
    if (name == "path_encoded" || name == "path") return Scheme::path_encoded;
    if (name == "random") return Scheme::random;
    if (name == "custom") return Scheme::custom;
    if (name == "product") return Scheme::product;
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

/// One projector/preparation: a label plus the control values of every
/// physical actuator that realizes it (two per qubit: HWP then QWP for
/// polarization, theta then phi for a path interferometer).
struct MeasurementSetting {
    std::string label;
    std::vector<double> controls;
};

/// An ordered collection of settings. The index order *is* the conventional
/// measurement order and serves as the baseline for every speedup figure.
struct SettingsSet {
    Scheme scheme = Scheme::custom;
    int n_qubits = 1;
    Unit unit = Unit::degrees;
    std::vector<MeasurementSetting> settings;

    int size() const { return static_cast<int>(settings.size()); }
    const MeasurementSetting& operator[](int i) const { return settings[static_cast<std::size_t>(i)]; }
};

namespace detail {

inline void validate_settings_set(const SettingsSet& s) {
    if (s.settings.empty()) throw std::invalid_argument("settings set is empty");
    if (s.n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    const std::size_t arity = s.settings.front().controls.size();
    std::unordered_set<std::string_view> labels;
    labels.reserve(s.settings.size());
    for (const auto& m : s.settings) {
        if (m.controls.size() != arity)
            throw std::invalid_argument("settings disagree on the number of controls");
        for (double v : m.controls)
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite control value");
        if (!labels.insert(m.label).second)
            throw std::invalid_argument("duplicate setting label: " + m.label);
    }
}

/// Cartesian product with `a` as the slow (outer) index.
inline SettingsSet product_impl(const SettingsSet& a, const SettingsSet& b,
                                const char* separator, Scheme scheme) {
    if (a.unit != b.unit)
        throw std::invalid_argument("cannot combine settings with different units");
    SettingsSet out;
    out.scheme = scheme;
    out.n_qubits = a.n_qubits + b.n_qubits;
    out.unit = a.unit;
    out.settings.reserve(a.settings.size() * b.settings.size());
    for (const auto& sa : a.settings) {
        for (const auto& sb : b.settings) {
            MeasurementSetting m;
            m.label = sa.label + separator + sb.label;
            m.controls = sa.controls;
            m.controls.insert(m.controls.end(), sb.controls.begin(), sb.controls.end());
            out.settings.push_back(std::move(m));
        }
    }
    validate_settings_set(out);
    return out;
}

inline SettingsSet expand_qubits(SettingsSet one_qubit, int n, Scheme scheme) {
    if (n < 1) throw std::invalid_argument("number of qubits must be >= 1");
    SettingsSet out = one_qubit;
    out.scheme = scheme;
    for (int k = 1; k < n; ++k) out = product_impl(out, one_qubit, "", scheme);
    return out;
}

} // namespace detail

/// Six-state polarization analyzer settings for n qubits: the H, V, D, A, R, L
/// projections per qubit, expanded as a Cartesian product with the last qubit
/// varying fastest. Angles in degrees, HWP before QWP.
inline SettingsSet six_state_settings(int n) {
    SettingsSet one;
    one.scheme = Scheme::six_state;
    one.n_qubits = 1;
    one.unit = Unit::degrees;
    one.settings = {
        {"H", {0.0, 0.0}},  {"V", {45.0, 0.0}}, {"D", {22.5, 0.0}},
        {"A", {-22.5, 0.0}}, {"R", {0.0, 45.0}}, {"L", {0.0, -45.0}},
    };
    return detail::expand_qubits(std::move(one), n, Scheme::six_state);
}

/// Two-detector variant: only the measurement basis is set, with the wave
/// plate orientations of the H, D and R projections.
inline SettingsSet three_base_settings(int n) {
    SettingsSet one;
    one.scheme = Scheme::three_base;
    one.n_qubits = 1;
    one.unit = Unit::degrees;
    one.settings = {
        {"Z", {0.0, 0.0}},
        {"X", {22.5, 0.0}},
        {"Y", {0.0, 45.0}},
    };
    return detail::expand_qubits(std::move(one), n, Scheme::three_base);
}

/// On-chip path-encoded analyzer settings: heater phases (theta, phi) per
/// qubit in radians, stored signed exactly as configured.
inline SettingsSet path_encoded_settings(int n) {
    constexpr double pi = std::numbers::pi;
    SettingsSet one;
    one.scheme = Scheme::path_encoded;
    one.n_qubits = 1;
    one.unit = Unit::radians;
    one.settings = {
        {"0", {0.0, 0.0}},        {"1", {pi, 0.0}},
        {"+", {pi / 2, 0.0}},     {"-", {-pi / 2, 0.0}},
        {"i", {pi / 2, pi / 2}},  {"-i", {pi / 2, -pi / 2}},
    };
    return detail::expand_qubits(std::move(one), n, Scheme::path_encoded);
}

struct AngleRange {
    double lo = 0.0;
    double hi = 180.0;
};

/// p^n settings with every wave-plate angle drawn independently and uniformly
/// from `range` (half-open). Identical (n, p, seed, range) give bit-identical
/// output.
inline SettingsSet random_settings(int n, int p, std::uint64_t seed, AngleRange range = {}) {
    if (n < 1) throw std::invalid_argument("number of qubits must be >= 1");
    if (p < 2) throw std::invalid_argument("settings per qubit must be >= 2");
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo < range.hi))
        throw std::invalid_argument("empty or inverted angle range");

    std::size_t count = 1;
    for (int k = 0; k < n; ++k) count *= static_cast<std::size_t>(p);

    SplitMix64 rng(seed);
    SettingsSet out;
    out.scheme = Scheme::random;
    out.n_qubits = n;
    out.unit = Unit::degrees;
    out.settings.reserve(count);
    const std::size_t actuators = 2 * static_cast<std::size_t>(n);
    for (std::size_t k = 0; k < count; ++k) {
        MeasurementSetting m;
        m.label = "r" + std::to_string(k);
        m.controls.resize(actuators);
        for (auto& v : m.controls) v = range.lo + (range.hi - range.lo) * rng.next_double();
        out.settings.push_back(std::move(m));
    }
    detail::validate_settings_set(out);
    return out;
}

/// Grid product of two settings sets: `a` is the outer (slow) index, control
/// vectors are concatenated, labels joined with a product sign. This is how
/// process-tomography instances (preparation grid x analysis grid) are built.
inline SettingsSet product_settings(const SettingsSet& a, const SettingsSet& b) {
    return detail::product_impl(a, b, "⊗", Scheme::product);
}

/// User-supplied control table (e.g. parsed from CSV). Validates label
/// uniqueness and a consistent control arity. `n_qubits` is informational for
/// custom hardware; by default it is inferred from the arity assuming two
/// actuators per qubit.
inline SettingsSet custom_settings(std::vector<MeasurementSetting> settings, Unit unit,
                                   int n_qubits = 0) {
    SettingsSet out;
    out.scheme = Scheme::custom;
    out.unit = unit;
    out.settings = std::move(settings);
    if (n_qubits > 0) {
        out.n_qubits = n_qubits;
    } else {
        const std::size_t arity = out.settings.empty() ? 0 : out.settings.front().controls.size();
        out.n_qubits = arity >= 2 ? static_cast<int>(arity / 2) : 1;
    }
    detail::validate_settings_set(out);
    return out;
}

} // namespace tomoroute
