#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"

namespace exergas {

/// One temperature segment of a heat-capacity polynomial:
///   cp/Ru = c0 + c1*T + c2*T^2 + c3*T^3 + c4*T^4
/// with b1, b2 the integration constants of the enthalpy and entropy
/// integrals. Enthalpy includes the formation enthalpy, entropy is absolute.
struct PolySegment {
    double T_low = 0.0;   ///< K, inclusive
    double T_high = 0.0;  ///< K, inclusive
    double c[5] = {0, 0, 0, 0, 0};
    double b1 = 0.0;
    double b2 = 0.0;

    bool contains(double T) const { return T >= T_low && T <= T_high; }

    double cp_over_Ru(double T) const {
        return c[0] + T * (c[1] + T * (c[2] + T * (c[3] + T * c[4])));
    }

    // Term grouping below matches the dataset generator exactly so the
    // anchored standard-state values reproduce to the last bit.
    double h_over_Ru(double T) const {  // K (h in J/mol once multiplied by Ru)
        return c[0] * T + c[1] / 2.0 * T * T + c[2] / 3.0 * T * T * T +
               c[3] / 4.0 * T * T * T * T + c[4] / 5.0 * T * T * T * T * T + b1;
    }

    double s_over_Ru(double T) const {
        return c[0] * std::log(T) + c[1] * T + c[2] / 2.0 * T * T +
               c[3] / 3.0 * T * T * T + c[4] / 4.0 * T * T * T * T + b2;
    }
};

/// A pure species: identity, elemental makeup, standard-state data and its
/// piecewise property polynomials, as parsed from the species data file.
struct SpeciesRecord {
    std::string name;
    std::string formula;                    ///< e.g. "CO2", "CH4"
    std::map<std::string, int> elements;    ///< parsed formula, element -> count
    double molar_mass = 0.0;                ///< kg/kmol
    double h_f0 = 0.0;                      ///< formation enthalpy at 298.15 K, kJ/mol
    double ex_ch0 = 0.0;                    ///< standard chemical exergy, kJ/mol
    std::vector<PolySegment> segments;      ///< sorted, contiguous in T

    double T_min() const { return segments.front().T_low; }
    double T_max() const { return segments.back().T_high; }

    const PolySegment& segment_at(double T) const {
        for (const auto& s : segments)
            if (s.contains(T)) return s;
        throw OutOfRangeError("species '" + name + "': temperature " + std::to_string(T) +
                              " K outside tabulated range [" + std::to_string(T_min()) +
                              ", " + std::to_string(T_max()) + "] K");
    }

    int element_count(const std::string& el) const {
        auto it = elements.find(el);
        return it == elements.end() ? 0 : it->second;
    }
};

/// Molar heat capacity at constant pressure, J/(mol K).
inline double cp_molar(const SpeciesRecord& sp, double T) {
    return kGasConstant * sp.segment_at(T).cp_over_Ru(T);
}

/// Molar enthalpy including the formation enthalpy, kJ/mol, so that
/// h(298.15 K) equals the species' standard formation enthalpy.
inline double enthalpy_molar(const SpeciesRecord& sp, double T) {
    return kGasConstant * sp.segment_at(T).h_over_Ru(T) / 1000.0;
}

/// Absolute molar entropy, J/(mol K), of the pure species at temperature T
/// and partial pressure p_partial (kPa):  s = s0(T) - Ru ln(p_partial/P0).
inline double entropy_molar(const SpeciesRecord& sp, double T, double p_partial,
                            const ReferenceEnvironment& env = {}) {
    if (!(p_partial > 0.0))
        throw InvalidInputError("entropy_molar: partial pressure must be positive");
    return kGasConstant * sp.segment_at(T).s_over_Ru(T) -
           kGasConstant * std::log(p_partial / env.P0);
}

/// Standard-pressure absolute entropy s0(T), J/(mol K).
inline double entropy_std(const SpeciesRecord& sp, double T) {
    return kGasConstant * sp.segment_at(T).s_over_Ru(T);
}

/// Molar Gibbs function at standard pressure, g0 = h - T*s0, kJ/mol.
inline double gibbs_molar(const SpeciesRecord& sp, double T) {
    return enthalpy_molar(sp, T) - T * entropy_std(sp, T) / 1000.0;
}

/// Temperature-corrected standard chemical exergy of a pure species, kJ/mol:
///   ex(T) = (T0/T) * ex_ch0 - h_f0 * (T - T0) / T
/// Reduces to ex_ch0 at T = T0. Exposed for reporting; the stream accounting
/// uses the mixture-form chemical exergy instead (see exergy.hpp).
inline double chemical_exergy_at_T(const SpeciesRecord& sp, double T,
                                   const ReferenceEnvironment& env = {}) {
    if (!(T > 0.0))
        throw InvalidInputError("chemical_exergy_at_T: temperature must be positive");
    return (env.T0 / T) * sp.ex_ch0 - sp.h_f0 * (T - env.T0) / T;
}

}  // namespace exergas
