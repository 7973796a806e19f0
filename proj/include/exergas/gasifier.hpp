#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/fuel.hpp"
#include "exergas/species_db.hpp"
#include "exergas/stream.hpp"

namespace exergas {

/// Operating point of the downdraft gasifier. The reaction temperature is an
/// input (the unit is externally characterized); the heat exchanged with the
/// surroundings follows from the energy balance. `heat_loss_fraction` is the
/// *declared* loss used for reporting cross-checks, not a model input.
struct GasifierSpec {
    double equivalence_ratio = 0.35;   ///< actual / stoichiometric oxygen
    double T_gasifier = 1073.15;       ///< K
    double P = kStandardP0;            ///< kPa
    double moisture_w = 0.0;           ///< kg water per kg dry fuel
    double heat_loss_fraction = 0.015; ///< of fuel LHV input, for reporting

    void validate() const {
        if (!(equivalence_ratio > 0.0 && equivalence_ratio < 1.0))
            throw InvalidInputError("equivalence ratio must lie in (0, 1)");
        if (!(T_gasifier >= 600.0 && T_gasifier <= 1600.0))
            throw InvalidInputError("gasifier temperature must lie in [600, 1600] K");
        if (!(P > 0.0))
            throw InvalidInputError("gasifier pressure must be positive");
        if (moisture_w < 0.0 || moisture_w > 5.0)
            throw InvalidInputError("moisture loading must lie in [0, 5] kg/kg dry");
        if (heat_loss_fraction < 0.0 || heat_loss_fraction > 0.05)
            throw InvalidInputError("declared heat loss must lie in [0, 0.05]");
    }
};

/// Oxygen demand for complete combustion, kmol O2 per kg dry fuel.
inline double stoichiometric_oxygen(const FuelElementalMoles& m) {
    return m.c + m.h / 4.0 - m.o / 2.0;
}

/// Global-reaction quantities normalized per kmol of fuel carbon:
///   CH_x O_y N_zn + w H2O + m (O2 + 3.76 N2)  ->  products
struct ReactionInputs {
    double x = 0.0;   ///< H atoms per C
    double y = 0.0;   ///< O atoms per C
    double zn = 0.0;  ///< N atoms per C
    double w = 0.0;   ///< moisture, mol H2O per mol C
    double m = 0.0;   ///< air oxygen, mol O2 per mol C
    double carbon_flow = 0.0;  ///< kmol C / s fed with the dry fuel
    double o2_flow = 0.0;      ///< kmol O2 / s in the air
    double n2_flow = 0.0;      ///< kmol N2 / s in the air (= 3.76 * o2_flow)
};

inline ReactionInputs make_reaction_inputs(const BiomassFuel& fuel, const GasifierSpec& spec) {
    fuel.validate();
    spec.validate();
    UltimateAnalysis dry = convert_basis(fuel.ultimate, fuel.proximate, Basis::Dry);
    FuelElementalMoles mol = elemental_moles(dry);
    if (!(mol.c > 0.0))
        throw InvalidInputError("fuel has no carbon; the reaction model does not apply");
    ReactionInputs r;
    r.x = mol.h / mol.c;
    r.y = mol.o / mol.c;
    r.zn = mol.n / mol.c;
    r.w = (spec.moisture_w / kMolarMassH2O) / mol.c;
    r.m = spec.equivalence_ratio * stoichiometric_oxygen(mol) / mol.c;
    r.carbon_flow = mol.c * fuel.mass_flow;
    r.o2_flow = r.m * r.carbon_flow;
    r.n2_flow = 3.76 * r.o2_flow;
    return r;
}

/// Air stream matching the reaction stoichiometry (N2/O2 = 3.76 exactly),
/// drawn at the ambient state. The slight difference from the 21/79 ambient
/// split keeps the nitrogen balance of the global reaction closed.
inline GasStream reaction_air_stream(const ReactionInputs& in,
                                     const ReferenceEnvironment& env = {}) {
    GasStream s;
    s.T = env.T0;
    s.P = env.P0;
    s.molar_flow = in.o2_flow + in.n2_flow;
    if (s.molar_flow > 0.0)
        s.z = {{"O2", in.o2_flow / s.molar_flow}, {"N2", in.n2_flow / s.molar_flow}};
    else
        s.z = {{"O2", 1.0 / 4.76}, {"N2", 3.76 / 4.76}};
    s.validate();
    return s;
}

enum class Reaction { WaterGasShift, Methanation };

/// Equilibrium constant from standard Gibbs energies:  ln K = -dG(T)/(Ru T).
/// WaterGasShift:  CO + H2O <-> CO2 + H2
/// Methanation:    C(s) + 2 H2 <-> CH4   (unit carbon activity)
inline double equilibrium_constant(Reaction rxn, double T, const SpeciesDb& db) {
    double dG;  // kJ/mol
    if (rxn == Reaction::WaterGasShift) {
        dG = gibbs_molar(db.at("CO2"), T) + gibbs_molar(db.at("H2"), T) -
             gibbs_molar(db.at("CO"), T) - gibbs_molar(db.at("H2O"), T);
    } else {
        dG = gibbs_molar(db.at("CH4"), T) - 2.0 * gibbs_molar(db.at("H2"), T) -
             gibbs_molar(db.at("C_gr"), T);
    }
    return std::exp(-dG * 1000.0 / (kGasConstant * T));
}

namespace detail {

/// Solve A x = b for a 5x5 system by Gaussian elimination with partial
/// pivoting. A and b are destroyed.
inline std::array<double, 5> solve5(std::array<std::array<double, 5>, 5>& A,
                                    std::array<double, 5>& b) {
    constexpr int n = 5;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (std::abs(A[piv][col]) < 1e-300)
            throw ConvergenceError("singular Jacobian in equilibrium solve", 0.0, 0);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = A[r][col] / A[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::array<double, 5> x{};
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return x;
}

}  // namespace detail

/// Converged product distribution, normalized per kmol of fuel carbon.
struct EquilibriumSolution {
    static constexpr std::array<const char*, 6> kSpecies = {"H2", "CO", "CO2",
                                                            "H2O", "CH4", "N2"};
    std::array<double, 6> moles{};  ///< per kmol C, in kSpecies order
    double total_moles = 0.0;       ///< per kmol C
    std::map<std::string, double> mole_fractions;
    int iterations = 0;
    double residual_norm = 0.0;

    double fraction(const std::string& name) const {
        auto it = mole_fractions.find(name);
        return it == mole_fractions.end() ? 0.0 : it->second;
    }

    /// Materialize the product gas as a stream at (T, P) for a given fuel
    /// carbon feed rate (kmol C/s).
    GasStream to_stream(double carbon_flow, double T, double P) const {
        GasStream s;
        s.T = T;
        s.P = P;
        s.molar_flow = total_moles * carbon_flow;
        s.z = mole_fractions;
        s.validate();
        return s;
    }
};

/// Solve the product composition of the global gasification reaction at
/// temperature T and pressure P. Two equilibria close the element balances:
/// water-gas shift and heterogeneous methane formation over solid carbon.
/// A damped Newton iteration drives the five residuals below 1e-10.
inline EquilibriumSolution solve_producer_gas(const ReactionInputs& in, double T, double P,
                                              const SpeciesDb& db) {
    if (!(T > 0.0) || !(P > 0.0))
        throw InvalidInputError("equilibrium solve needs positive T and P");
    const double K1 = equilibrium_constant(Reaction::WaterGasShift, T, db);
    const double K2 = equilibrium_constant(Reaction::Methanation, T, db);
    const double r = kStandardP0 / P;  // standard-state over operating pressure
    const double n2 = in.zn / 2.0 + 3.76 * in.m;
    const double h_target = in.x + 2.0 * in.w;
    const double o_target = in.y + in.w + 2.0 * in.m;
    if (o_target <= 0.0 || h_target <= 0.0)
        throw InvalidInputError("reaction inputs carry no hydrogen or oxygen");

    using Vec = std::array<double, 5>;  // n_H2, n_CO, n_CO2, n_H2O, n_CH4
    auto eval = [&](const Vec& v, Vec& f) {
        const double nH2 = v[0], nCO = v[1], nCO2 = v[2], nH2O = v[3], nCH4 = v[4];
        const double N = nH2 + nCO + nCO2 + nH2O + nCH4 + n2;
        f[0] = nCO + nCO2 + nCH4 - 1.0;
        f[1] = 2.0 * nH2 + 2.0 * nH2O + 4.0 * nCH4 - h_target;
        f[2] = nCO + 2.0 * nCO2 + nH2O - o_target;
        f[3] = nCO2 * nH2 - K1 * nCO * nH2O;
        f[4] = nCH4 * N * r - K2 * nH2 * nH2;
    };
    auto norm2 = [](const Vec& f) {
        double s = 0.0;
        for (double v : f) s += v * v;
        return std::sqrt(s);
    };

    const std::array<Vec, 3> starts = {
        Vec{in.x / 4.0, 0.4, 0.6, in.x / 4.0 + in.w, 1e-3},
        Vec{in.x / 3.0, 0.7, 0.3, 0.05 + in.x / 10.0 + in.w, 1e-4},
        Vec{0.5, 0.3, 0.4, 0.5 + in.w, 0.05},
    };

    EquilibriumSolution best_sol;
    double best_overall = std::numeric_limits<double>::infinity();
    for (const Vec& start : starts) {
        Vec v = start;
        for (double& vi : v) vi = std::max(vi, 1e-12);
        Vec f;
        eval(v, f);
        double fn = norm2(f);
        int iter = 0;
        for (; iter < 200 && fn > 1e-11; ++iter) {
            const double nH2 = v[0], nCO = v[1], nCO2 = v[2], nH2O = v[3], nCH4 = v[4];
            const double N = nH2 + nCO + nCO2 + nH2O + nCH4 + n2;
            std::array<std::array<double, 5>, 5> J = {{
                {0.0, 1.0, 1.0, 0.0, 1.0},
                {2.0, 0.0, 0.0, 2.0, 4.0},
                {0.0, 1.0, 2.0, 1.0, 0.0},
                {nCO2, -K1 * nH2O, nH2, -K1 * nCO, 0.0},
                {nCH4 * r - 2.0 * K2 * nH2, nCH4 * r, nCH4 * r, nCH4 * r,
                 (N + nCH4) * r},
            }};
            Vec rhs;
            for (int i = 0; i < 5; ++i) rhs[i] = -f[i];
            Vec step = detail::solve5(J, rhs);

            double alpha = 1.0;
            bool improved = false;
            Vec cand, fc;
            while (alpha >= 1e-6) {
                for (int i = 0; i < 5; ++i) cand[i] = std::max(v[i] + alpha * step[i], 1e-12);
                eval(cand, fc);
                if (norm2(fc) < fn) {
                    improved = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!improved) break;  // stalled; final residual check decides
            v = cand;
            f = fc;
            fn = norm2(f);
        }
        if (fn < best_overall) {
            best_overall = fn;
            best_sol.moles = {v[0], v[1], v[2], v[3], v[4], n2};
            best_sol.iterations = iter;
            best_sol.residual_norm = fn;
        }
        if (best_overall <= 1e-11) break;
    }

    if (!(best_overall <= 1e-9))
        throw ConvergenceError("equilibrium solve did not converge", best_overall,
                               best_sol.iterations);

    double N = 0.0;
    for (double n : best_sol.moles) N += n;
    best_sol.total_moles = N;
    for (size_t i = 0; i < best_sol.kSpecies.size(); ++i)
        best_sol.mole_fractions[best_sol.kSpecies[i]] = best_sol.moles[i] / N;
    return best_sol;
}

/// Steady-flow first-law balance around the gasifier. The feed enthalpy is
/// the dry fuel's formation enthalpy (sensible heat of the solid neglected)
/// plus liquid moisture at the feed temperature; heat follows by difference,
/// so a negative Q is a loss to the surroundings.
struct EnergyBalance {
    double H_fuel_kW = 0.0;  ///< fuel + moisture feed enthalpy flow
    double H_air_kW = 0.0;
    double H_gas_kW = 0.0;
    double Q_kW = 0.0;       ///< = H_gas - H_fuel - H_air
};

inline EnergyBalance gasifier_energy_balance(const FuelStream& feed, const GasStream& air,
                                             const GasStream& gas, const SpeciesDb& db) {
    feed.validate();
    air.validate();
    gas.validate();
    UltimateAnalysis dry = convert_basis(feed.fuel.ultimate, feed.fuel.proximate, Basis::Dry);
    double hf_dry = fuel_formation_enthalpy(dry, feed.fuel.ash_dry(), db);  // MJ/kg dry
    EnergyBalance b;
    b.H_fuel_kW = feed.fuel.mass_flow * hf_dry * 1000.0 +
                  feed.moisture_molar_flow() * enthalpy_molar(db.at("H2O_liq"), feed.T) * 1000.0;
    b.H_air_kW = enthalpy_rate(air, db);
    b.H_gas_kW = enthalpy_rate(gas, db);
    b.Q_kW = b.H_gas_kW - b.H_fuel_kW - b.H_air_kW;
    return b;
}

/// Lower heating value of one species from formation enthalpies, MJ/kmol:
/// complete combustion to CO2, water vapor and N2. Zero by construction for
/// CO2, H2O and N2.
inline double species_lhv(const SpeciesRecord& sp, const SpeciesDb& db) {
    double x = 0.0, y = 0.0;
    for (const auto& [el, count] : sp.elements) {
        if (el == "C") x = count;
        else if (el == "H") y = count;
        else if (el != "O" && el != "N")
            throw InvalidInputError("no combustion stoichiometry for species " + sp.name);
    }
    return sp.h_f0 - x * db.at("CO2").h_f0 - (y / 2.0) * db.at("H2O").h_f0;
}

/// Lower heating value of a gas mixture, MJ/kmol of mixture.
inline double producer_gas_lhv(const GasStream& gas, const SpeciesDb& db) {
    gas.validate();
    double lhv = 0.0;
    for (const auto& [name, zi] : gas.z)
        if (zi > 0.0) lhv += zi * species_lhv(db.at(name), db);
    return lhv;
}

}  // namespace exergas
