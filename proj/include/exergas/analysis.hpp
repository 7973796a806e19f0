#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/exergy.hpp"
#include "exergas/fuel.hpp"
#include "exergas/gasifier.hpp"
#include "exergas/species_db.hpp"
#include "exergas/stream.hpp"

namespace exergas {

/// Everything needed to evaluate one operating point.
struct AnalysisOptions {
    BiomassFuel fuel = builtin_fuel("oak_wood");
    GasifierSpec spec{};
    ReferenceEnvironment env{};
    /// Moisture fed with the fuel, kg per kg dry. Defaults to the fuel's
    /// inherent (proximate) moisture; overrides the value in `spec`.
    std::optional<double> moisture_w;
    double stack_T = 428.15;  ///< K, gas temperature after heat recovery
    bool include_recovered_heat = true;  ///< count recovered heat in eta
};

/// Overall mass accounting, kg/s. Everything that is not C, H, O or N in the
/// dry fuel (ash, sulfur, chlorine, analysis rounding) is lumped into an
/// inert residue, split 80/20 between fly and bottom fractions.
struct MassBalance {
    double fuel_dry_kg_s = 0.0;
    double moisture_kg_s = 0.0;
    double air_kg_s = 0.0;
    double gas_kg_s = 0.0;
    double inert_kg_s = 0.0;
    double fly_fraction_kg_s = 0.0;
    double bottom_fraction_kg_s = 0.0;
    double closure_residual = 0.0;  ///< (in - out) / in
};

/// Complete record of one evaluated operating point.
struct RunResult {
    GasifierSpec spec;  ///< with the moisture actually used
    ReferenceEnvironment env;
    ReactionInputs inputs;
    EquilibriumSolution equilibrium;
    GasStream air;
    GasStream gas;
    EnergyBalance energy;
    BalanceReport balance;
    HeatRecovery recovery;
    FuelExergy fuel_exergy;
    MassBalance mass;
    double gas_lhv_MJ_per_kmol = 0.0;
    double gas_chemical_power_kW = 0.0;  ///< molar flow times gas LHV
    double fuel_energy_kW = 0.0;         ///< as-fired LHV rate of the feed
    double eta = 0.0;                    ///< first-law efficiency
    double psi = 0.0;                    ///< second-law efficiency
    double fuel_ex_over_lhv_dry = 0.0;
    double fuel_ex_over_hhv_dry = 0.0;
    double air_exergy_simplified_kW = 0.0;
    double air_exergy_gap_kW = 0.0;  ///< simplified minus stream-accounting value
    std::vector<std::string> notes;
};

namespace detail {

inline std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

inline MassBalance mass_balance(const BiomassFuel& fuel, double w, const GasStream& air,
                                const GasStream& gas, const SpeciesDb& db) {
    MassBalance mb;
    mb.fuel_dry_kg_s = fuel.mass_flow;
    mb.moisture_kg_s = fuel.mass_flow * w;
    for (const auto& [name, zi] : air.z)
        mb.air_kg_s += air.molar_flow * zi * db.at(name).molar_mass;
    for (const auto& [name, zi] : gas.z)
        mb.gas_kg_s += gas.molar_flow * zi * db.at(name).molar_mass;
    UltimateAnalysis dry = convert_basis(fuel.ultimate, fuel.proximate, Basis::Dry);
    double chon = (dry.C + dry.H + dry.O + dry.N) / 100.0;
    mb.inert_kg_s = fuel.mass_flow * (1.0 - chon);
    mb.fly_fraction_kg_s = 0.80 * mb.inert_kg_s;
    mb.bottom_fraction_kg_s = 0.20 * mb.inert_kg_s;
    double in = mb.fuel_dry_kg_s + mb.moisture_kg_s + mb.air_kg_s;
    double out = mb.gas_kg_s + mb.inert_kg_s;
    mb.closure_residual = (in - out) / in;
    return mb;
}

}  // namespace detail

/// Evaluate one operating point end to end: equilibrium composition, first-
/// and second-law balances, stack heat recovery, efficiencies and the mass
/// ledger. Throws ConvergenceError if the composition solve fails and
/// InvalidInputError for out-of-range inputs.
inline RunResult run_analysis(const AnalysisOptions& opt, const SpeciesDb& db) {
    RunResult r;
    r.env = opt.env;
    r.spec = opt.spec;
    r.spec.moisture_w = opt.moisture_w.value_or(opt.fuel.moisture_per_kg_dry());
    r.spec.validate();
    opt.fuel.validate();
    if (!(opt.stack_T > 0.0))
        throw InvalidInputError("stack temperature must be positive");

    r.inputs = make_reaction_inputs(opt.fuel, r.spec);
    r.equilibrium = solve_producer_gas(r.inputs, r.spec.T_gasifier, r.spec.P, db);
    r.gas = r.equilibrium.to_stream(r.inputs.carbon_flow, r.spec.T_gasifier, r.spec.P);
    r.air = reaction_air_stream(r.inputs, r.env);
    FuelStream feed{opt.fuel, r.spec.moisture_w, r.env.T0};

    r.energy = gasifier_energy_balance(feed, r.air, r.gas, db);
    r.balance = gasifier_exergy_balance(feed, r.air, r.gas, db, r.env);
    r.fuel_exergy = fuel_chemical_exergy(opt.fuel, db, r.env, r.spec.moisture_w);
    r.recovery = stack_heat_recovery(r.gas, opt.stack_T, db, r.env);
    r.mass = detail::mass_balance(opt.fuel, r.spec.moisture_w, r.air, r.gas, db);

    r.gas_lhv_MJ_per_kmol = producer_gas_lhv(r.gas, db);
    r.gas_chemical_power_kW = r.gas.molar_flow * r.gas_lhv_MJ_per_kmol * 1000.0;
    double lhv_as_fired = r.fuel_exergy.lhv_dry - kWaterHfg * r.spec.moisture_w;  // MJ/kg dry
    r.fuel_energy_kW = opt.fuel.mass_flow * lhv_as_fired * 1000.0;
    double useful = r.gas_chemical_power_kW +
                    (opt.include_recovered_heat ? r.recovery.Q_kW : 0.0);
    r.eta = energy_efficiency(useful, r.fuel_energy_kW);
    r.psi = exergy_efficiency(r.balance);
    r.fuel_ex_over_lhv_dry = r.fuel_exergy.beta;
    r.fuel_ex_over_hhv_dry = r.fuel_exergy.beta * r.fuel_exergy.lhv_dry / r.fuel_exergy.hhv_dry;
    r.air_exergy_simplified_kW = air_exergy_simplified(r.inputs.o2_flow, db, r.env);
    r.air_exergy_gap_kW = r.air_exergy_simplified_kW - r.balance.Ex_air_kW;

    if (r.fuel_exergy.beta_outside_fitted_range)
        r.notes.push_back("fuel O/C mass ratio exceeds the exergy correlation's fitted range "
                          "(O/C <= 0.667); the value is an extrapolation");
    if (auto note = hhv_plausibility_note(r.fuel_exergy.hhv_dry))
        r.notes.push_back(*note);
    if (r.energy.Q_kW < 0.0) {
        double measured = -r.energy.Q_kW / r.fuel_energy_kW;
        r.notes.push_back("energy balance heat loss is " + detail::fmt("%.2f", 100.0 * measured) +
                          "% of the fuel LHV input (declared allowance " +
                          detail::fmt("%.2f", 100.0 * r.spec.heat_loss_fraction) + "%)");
    } else if (r.energy.Q_kW > 0.0) {
        r.notes.push_back("the specified operating point requires a heat input of " +
                          detail::fmt("%.1f", r.energy.Q_kW) + " kW to hold its temperature");
    }
    r.notes.push_back("simplified inlet-air exergy form gives " +
                      detail::fmt("%.3f", r.air_exergy_simplified_kW) + " kW vs " +
                      detail::fmt("%.3f", r.balance.Ex_air_kW) +
                      " kW from stream accounting; the balance uses the latter");
    if (!opt.include_recovered_heat && r.recovery.Q_kW > 0.0)
        r.notes.push_back("recoverable stack heat of " + detail::fmt("%.1f", r.recovery.Q_kW) +
                          " kW is excluded from the first-law efficiency");
    return r;
}

}  // namespace exergas
