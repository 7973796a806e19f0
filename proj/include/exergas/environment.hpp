#pragma once

#include <map>
#include <string>

#include "exergas/errors.hpp"

namespace exergas {

/// Universal gas constant used throughout, J/(mol K).
inline constexpr double kGasConstant = 8.314;

/// Standard reference temperature, K, at which the bundled chemical
/// exergies and formation properties are tabulated.
inline constexpr double kStandardT0 = 298.15;

/// Standard reference pressure, kPa (1 atm).
inline constexpr double kStandardP0 = 101.325;

/// Latent heat of vaporization of water near 25 C, MJ/kg. Used by the
/// heating-value correlations (kept separate from the formation-enthalpy
/// difference on purpose: the correlations are defined with this constant).
inline constexpr double kWaterHfg = 2.442;

inline constexpr double celsius_to_kelvin(double c) { return c + 273.15; }
inline constexpr double kelvin_to_celsius(double k) { return k - 273.15; }

/// Standard atomic masses, kg/kmol.
inline double atomic_mass(const std::string& element) {
    static const std::map<std::string, double> table = {
        {"C", 12.011}, {"H", 1.008}, {"O", 15.999}, {"N", 14.007},
        {"S", 32.06},  {"Cl", 35.45},
    };
    auto it = table.find(element);
    if (it == table.end())
        throw InvalidInputError("unknown element '" + element + "'");
    return it->second;
}

/// Molar masses of the reaction bookkeeping species, kg/kmol.
inline constexpr double kMolarMassH2O = 18.015;  // 2*1.008 + 15.999
inline constexpr double kMolarMassO2 = 31.998;
inline constexpr double kMolarMassN2 = 28.014;

/// Dead state + ambient air model all exergy accounting refers to.
struct ReferenceEnvironment {
    double T0 = kStandardT0;    ///< dead-state temperature, K
    double P0 = kStandardP0;    ///< dead-state pressure, kPa
    double air_O2 = 0.21;       ///< ambient air mole fraction O2
    double air_N2 = 0.79;       ///< ambient air mole fraction N2

    ReferenceEnvironment() = default;
    ReferenceEnvironment(double t0, double p0) : T0(t0), P0(p0) { validate(); }

    void validate() const {
        if (!(T0 > 200.0 && T0 < 400.0))
            throw InvalidInputError("reference temperature must lie in (200, 400) K");
        if (!(P0 > 1.0 && P0 < 1000.0))
            throw InvalidInputError("reference pressure must lie in (1, 1000) kPa");
        if (!(air_O2 > 0.0 && air_N2 > 0.0) || air_O2 + air_N2 > 1.0 + 1e-12)
            throw InvalidInputError("air mole fractions must be positive and sum to <= 1");
    }

    /// Ru * T0 in kJ/mol, the mixing-term prefactor of chemical exergy.
    double RuT0_kJ() const { return kGasConstant * T0 / 1000.0; }
};

}  // namespace exergas
