#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/fuel.hpp"
#include "exergas/gasifier.hpp"
#include "exergas/species_db.hpp"
#include "exergas/stream.hpp"

namespace exergas {

/// Physical (thermomechanical) exergy of a gas stream, kW: the work
/// potential of bringing it from (T, P) to the environment state at frozen
/// composition. Exactly zero when the stream is already at (T0, P0).
inline double physical_exergy(const GasStream& s, const SpeciesDb& db,
                              const ReferenceEnvironment& env = {}) {
    s.validate();
    double ex = 0.0;
    for (const auto& [name, zi] : s.z) {
        if (zi <= 0.0) continue;
        const SpeciesRecord& sp = db.at(name);
        double dh = enthalpy_molar(sp, s.T) - enthalpy_molar(sp, env.T0);  // kJ/mol
        double ds = entropy_molar(sp, s.T, zi * s.P, env) -
                    entropy_molar(sp, env.T0, zi * env.P0, env);  // J/(mol K)
        ex += s.molar_flow * zi * (dh - env.T0 * ds / 1000.0) * 1000.0;
    }
    return ex;
}

/// Chemical exergy of a gas mixture per mole of mixture, kJ/mol:
///   sum z_i ex0_i  +  Ru T0 sum z_i ln z_i
inline double chemical_exergy_mixture(const std::map<std::string, double>& z,
                                      const SpeciesDb& db,
                                      const ReferenceEnvironment& env = {}) {
    double ex = 0.0;
    for (const auto& [name, zi] : z) {
        if (zi < -1e-15) throw InvalidInputError("negative mole fraction for " + name);
        if (zi <= 0.0) continue;
        ex += zi * (db.chemical_exergy_ref(name, env) + env.RuT0_kJ() * std::log(zi));
    }
    return ex;
}

/// Chemical exergy flow of a gas stream, kW.
inline double chemical_exergy_rate(const GasStream& s, const SpeciesDb& db,
                                   const ReferenceEnvironment& env = {}) {
    s.validate();
    return s.molar_flow * chemical_exergy_mixture(s.z, db, env) * 1000.0;
}

/// Physical + chemical exergy flow of a gas stream, kW.
struct StreamExergy {
    double physical_kW = 0.0;
    double chemical_kW = 0.0;
    double total_kW = 0.0;
};

inline StreamExergy stream_exergy(const GasStream& s, const SpeciesDb& db,
                                  const ReferenceEnvironment& env = {}) {
    StreamExergy r;
    r.physical_kW = physical_exergy(s, db, env);
    r.chemical_kW = chemical_exergy_rate(s, db, env);
    r.total_kW = r.physical_kW + r.chemical_kW;
    return r;
}

/// Widely used shortcut for inlet-air exergy, kW per the O2 molar flow:
///   Ex_a = n_O2 [ ex0_O2 + 3.76 ex0_N2 + Ru T0 (ln z_O2 + ln z_N2) ]
/// with z the ambient fractions. Note the mixing term carries unit weights,
/// so this overstates the stream-accounting value; it is provided for
/// comparison and reported alongside it in the analysis summary.
inline double air_exergy_simplified(double o2_molar_flow, const SpeciesDb& db,
                                    const ReferenceEnvironment& env = {}) {
    if (o2_molar_flow < 0.0) throw InvalidInputError("negative O2 flow");
    double per_o2 = db.chemical_exergy_ref("O2", env) +
                    3.76 * db.chemical_exergy_ref("N2", env) +
                    env.RuT0_kJ() * (std::log(env.air_O2) + std::log(env.air_N2));
    return o2_molar_flow * per_o2 * 1000.0;
}

/// Exergy carried by heat Q crossing a boundary at temperature T_b, kW.
/// Signed like Q itself: heat lost to the surroundings carries exergy away.
inline double heat_exergy(double Q_kW, double T_boundary, const ReferenceEnvironment& env = {}) {
    if (!(T_boundary > 0.0)) throw InvalidInputError("boundary temperature must be positive");
    return (1.0 - env.T0 / T_boundary) * Q_kW;
}

/// Second-law balance of the gasifier. Destruction is evaluated two ways --
/// as the exergy in/out deficit and as T0 times the entropy generation --
/// and the relative mismatch between the routes is recorded; they agree to
/// floating-point accuracy when the balance is assembled consistently.
struct BalanceReport {
    double Ex_fuel_kW = 0.0;
    double Ex_air_kW = 0.0;
    double Ex_heat_kW = 0.0;  ///< signed; negative when heat is lost
    double Ex_gas_kW = 0.0;
    double Ex_in_kW = 0.0;    ///< fuel + air + heat (signed)
    double Ex_out_kW = 0.0;   ///< product gas
    double Ex_destroyed_kW = 0.0;
    double psi = 0.0;         ///< Ex_out / Ex_in
    double Q_kW = 0.0;
    double H_in_kW = 0.0;
    double H_out_kW = 0.0;
    std::optional<double> S_gen_kW_per_K;
    std::optional<double> gouy_stodola_residual;  ///< relative route mismatch
};

namespace detail {

inline void finish_balance(BalanceReport& b) {
    b.Ex_in_kW = b.Ex_fuel_kW + b.Ex_air_kW + b.Ex_heat_kW;
    b.Ex_out_kW = b.Ex_gas_kW;
    b.Ex_destroyed_kW = b.Ex_in_kW - b.Ex_out_kW;
    if (!(b.Ex_in_kW > 0.0))
        throw InvalidInputError("exergy balance: total input must be positive");
    if (b.Ex_destroyed_kW < -1e-9 * b.Ex_in_kW)
        throw ModelInconsistencyError("exergy balance produced negative destruction");
    b.psi = b.Ex_out_kW / b.Ex_in_kW;
}

}  // namespace detail

/// Assemble a balance from already-computed stream exergies, kW.
inline BalanceReport gasifier_exergy_balance(double fuel_ex_kW, double air_ex_kW,
                                             double heat_ex_kW, double product_ex_kW) {
    BalanceReport b;
    b.Ex_fuel_kW = fuel_ex_kW;
    b.Ex_air_kW = air_ex_kW;
    b.Ex_heat_kW = heat_ex_kW;
    b.Ex_gas_kW = product_ex_kW;
    detail::finish_balance(b);
    return b;
}

/// Full balance from the streams themselves. Computes the first-law heat
/// duty, both destruction routes and the entropy generation; throws
/// ModelInconsistencyError if the routes disagree beyond 1e-6 relative or
/// if destruction comes out negative.
inline BalanceReport gasifier_exergy_balance(const FuelStream& feed, const GasStream& air,
                                             const GasStream& gas, const SpeciesDb& db,
                                             const ReferenceEnvironment& env = {}) {
    feed.validate();
    air.validate();
    gas.validate();
    if (std::abs(feed.T - env.T0) > 1e-6 || std::abs(air.T - env.T0) > 1e-6)
        throw InvalidInputError("feed and air are modeled as entering at the ambient temperature");

    // Elemental closure between inlets and the product gas (C, H, O, N).
    UltimateAnalysis dry = convert_basis(feed.fuel.ultimate, feed.fuel.proximate, Basis::Dry);
    FuelElementalMoles fm = elemental_moles(dry);
    double nw = feed.moisture_molar_flow();
    std::map<std::string, double> in_atoms = {
        {"C", fm.c * feed.fuel.mass_flow},
        {"H", fm.h * feed.fuel.mass_flow + 2.0 * nw},
        {"O", fm.o * feed.fuel.mass_flow + nw},
        {"N", fm.n * feed.fuel.mass_flow},
    };
    for (const auto& [el, flow] : element_flows(air, db)) in_atoms[el] += flow;
    std::map<std::string, double> out_atoms = element_flows(gas, db);
    for (const auto& [el, in_flow] : in_atoms) {
        double out_flow = out_atoms.count(el) ? out_atoms.at(el) : 0.0;
        double scale = std::max({std::abs(in_flow), std::abs(out_flow), 1e-30});
        if (std::abs(in_flow - out_flow) > 1e-8 * scale)
            throw ModelInconsistencyError("element " + el +
                                          " does not balance between inlets and product gas");
    }

    EnergyBalance eb = gasifier_energy_balance(feed, air, gas, db);
    FuelExergy fx = fuel_chemical_exergy(feed.fuel, db, env, feed.moisture_w);

    BalanceReport b;
    b.Ex_fuel_kW = fx.rate_kW;
    b.Ex_air_kW = stream_exergy(air, db, env).total_kW;
    b.Ex_gas_kW = stream_exergy(gas, db, env).total_kW;
    b.Q_kW = eb.Q_kW;
    b.Ex_heat_kW = heat_exergy(eb.Q_kW, gas.T, env);
    b.H_in_kW = eb.H_fuel_kW + eb.H_air_kW;
    b.H_out_kW = eb.H_gas_kW;
    detail::finish_balance(b);

    // Entropy route. The solid fuel has no tabulated entropy; it is assigned
    // the unique value that makes its exergy, enthalpy and elemental content
    // mutually consistent (standard practice for correlation-based fuel
    // exergies), which keeps the two destruction routes algebraically equal.
    std::map<std::string, double> mu = db.element_potentials(env);
    auto lambda_of = [&](const std::map<std::string, double>& atoms) {
        double L = 0.0;
        for (const auto& [el, flow] : atoms) L += flow * mu.at(el) * 1000.0;  // kW
        return L;
    };
    double lambda_fuel = lambda_of(in_atoms) - lambda_of(element_flows(air, db));
    double S_fuel = (eb.H_fuel_kW - fx.rate_kW - lambda_fuel) / env.T0;
    double S_air = entropy_rate(air, db, env);
    double S_gas = entropy_rate(gas, db, env);
    double S_gen = S_gas - S_air - S_fuel - eb.Q_kW / gas.T;
    b.S_gen_kW_per_K = S_gen;

    double route_entropy = env.T0 * S_gen;
    double scale = std::max(std::abs(b.Ex_destroyed_kW), 1e-30);
    double residual = std::abs(b.Ex_destroyed_kW - route_entropy) / scale;
    b.gouy_stodola_residual = residual;
    if (residual > 1e-6)
        throw ModelInconsistencyError(
            "destruction routes disagree: in/out deficit vs T0 * entropy generation");
    return b;
}

/// First-law conversion efficiency: useful energy over energy input.
inline double energy_efficiency(double useful_kW, double input_kW) {
    if (!(input_kW > 0.0)) throw InvalidInputError("energy input must be positive");
    if (useful_kW < 0.0) throw InvalidInputError("useful energy cannot be negative");
    return useful_kW / input_kW;
}

/// Second-law efficiency of a closed balance: Ex_out / Ex_in, identically
/// 1 - destruction / input.
inline double exergy_efficiency(const BalanceReport& b) {
    return b.psi;
}

/// Sensible heat recoverable by cooling the product gas to the stack
/// temperature at fixed composition, with the exergy of that heat evaluated
/// at the entropic mean temperature T_m = dH/dS of the cooling path.
struct HeatRecovery {
    double Q_kW = 0.0;
    double dS_kW_per_K = 0.0;  ///< entropy given up by the gas
    double T_mean_K = 0.0;
    double exergy_kW = 0.0;
};

inline HeatRecovery stack_heat_recovery(const GasStream& gas, double T_stack,
                                        const SpeciesDb& db,
                                        const ReferenceEnvironment& env = {}) {
    gas.validate();
    if (!(T_stack > 0.0)) throw InvalidInputError("stack temperature must be positive");
    HeatRecovery r;
    r.T_mean_K = gas.T;
    if (gas.T <= T_stack) return r;  // nothing to recover
    double dH = 0.0, dS = 0.0;
    for (const auto& [name, zi] : gas.z) {
        if (zi <= 0.0) continue;
        const SpeciesRecord& sp = db.at(name);
        dH += gas.molar_flow * zi *
              (enthalpy_molar(sp, gas.T) - enthalpy_molar(sp, T_stack)) * 1000.0;
        dS += gas.molar_flow * zi * (entropy_std(sp, gas.T) - entropy_std(sp, T_stack));
    }
    r.Q_kW = dH;
    r.dS_kW_per_K = dS;
    r.T_mean_K = dS > 0.0 ? dH / dS : gas.T;
    r.exergy_kW = heat_exergy(r.Q_kW, r.T_mean_K, env);
    return r;
}

}  // namespace exergas
