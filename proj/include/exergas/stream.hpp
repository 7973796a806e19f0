#pragma once

#include <cmath>
#include <map>
#include <string>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/fuel.hpp"

namespace exergas {

/// A flowing ideal-gas mixture: state (T, P), total molar flow and mole
/// fractions. Fractions must be non-negative and sum to 1 within 1e-9.
struct GasStream {
    double T = kStandardT0;      ///< K
    double P = kStandardP0;      ///< kPa
    double molar_flow = 0.0;     ///< kmol/s
    std::map<std::string, double> z;  ///< mole fraction by species name

    void validate() const {
        if (!(T > 0.0)) throw InvalidInputError("gas stream: temperature must be positive");
        if (!(P > 0.0)) throw InvalidInputError("gas stream: pressure must be positive");
        if (molar_flow < 0.0) throw InvalidInputError("gas stream: negative molar flow");
        double sum = 0.0;
        for (const auto& [name, zi] : z) {
            if (zi < -1e-15)
                throw InvalidInputError("gas stream: negative fraction for " + name);
            sum += zi;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw InvalidInputError("gas stream: mole fractions sum to " + std::to_string(sum));
    }

    /// Molar flow of one species, kmol/s.
    double flow_of(const std::string& name) const {
        auto it = z.find(name);
        return it == z.end() ? 0.0 : it->second * molar_flow;
    }
};

/// Ambient air drawn at the environment state: 21% O2 / 79% N2 by default,
/// sized by its oxygen molar flow (kmol O2/s).
inline GasStream make_air_stream(double o2_molar_flow, const ReferenceEnvironment& env = {}) {
    if (o2_molar_flow < 0.0)
        throw InvalidInputError("air stream: negative O2 flow");
    GasStream s;
    s.T = env.T0;
    s.P = env.P0;
    s.molar_flow = o2_molar_flow / env.air_O2;
    s.z = {{"O2", env.air_O2}, {"N2", env.air_N2}};
    s.validate();
    return s;
}

/// Enthalpy flow of a gas stream, kW (formation enthalpies included).
inline double enthalpy_rate(const GasStream& s, const SpeciesDb& db) {
    double H = 0.0;
    for (const auto& [name, zi] : s.z)
        if (zi > 0.0) H += s.molar_flow * zi * enthalpy_molar(db.at(name), s.T) * 1000.0;
    return H;
}

/// Entropy flow of a gas stream, kW/K, each species at its partial pressure.
inline double entropy_rate(const GasStream& s, const SpeciesDb& db,
                           const ReferenceEnvironment& env = {}) {
    double S = 0.0;
    for (const auto& [name, zi] : s.z)
        if (zi > 0.0)
            S += s.molar_flow * zi * entropy_molar(db.at(name), s.T, zi * s.P, env);
    return S;
}

/// Elemental molar flows carried by a gas stream, kmol of atoms per second.
inline std::map<std::string, double> element_flows(const GasStream& s, const SpeciesDb& db) {
    std::map<std::string, double> out;
    for (const auto& [name, zi] : s.z) {
        if (zi <= 0.0) continue;
        for (const auto& [el, count] : db.at(name).elements)
            out[el] += s.molar_flow * zi * count;
    }
    return out;
}

/// A liquid-water stream (kmol/s) at (T, P).
struct WaterStream {
    double T = kStandardT0;   ///< K
    double P = kStandardP0;   ///< kPa
    double molar_flow = 0.0;  ///< kmol/s

    void validate() const {
        if (!(T > 0.0)) throw InvalidInputError("water stream: temperature must be positive");
        if (!(P > 0.0)) throw InvalidInputError("water stream: pressure must be positive");
        if (molar_flow < 0.0) throw InvalidInputError("water stream: negative molar flow");
    }
};

/// The fed solid fuel with its accompanying moisture, entering at T.
struct FuelStream {
    BiomassFuel fuel;
    double moisture_w = 0.0;  ///< kg water per kg dry fuel
    double T = kStandardT0;   ///< K

    void validate() const {
        fuel.validate();
        if (moisture_w < 0.0) throw InvalidInputError("fuel stream: negative moisture loading");
        if (!(T > 0.0)) throw InvalidInputError("fuel stream: temperature must be positive");
    }

    /// Moisture molar flow, kmol/s.
    double moisture_molar_flow() const {
        return fuel.mass_flow * moisture_w / kMolarMassH2O;
    }
};

}  // namespace exergas
