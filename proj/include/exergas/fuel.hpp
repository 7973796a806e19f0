#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/species_db.hpp"

namespace exergas {

enum class Basis { AsReceived, Dry, DryAshFree };

inline std::string to_string(Basis b) {
    switch (b) {
        case Basis::AsReceived: return "as-received";
        case Basis::Dry: return "dry";
        case Basis::DryAshFree: return "dry-ash-free";
    }
    return "?";
}

/// Elemental composition in wt% on the tagged basis.
struct UltimateAnalysis {
    double C = 0.0;
    double H = 0.0;
    double O = 0.0;
    double N = 0.0;
    double S = 0.0;
    double Cl = 0.0;
    Basis basis = Basis::DryAshFree;

    double sum() const { return C + H + O + N + S + Cl; }
};

/// Proximate analysis in wt% as received.
struct ProximateAnalysis {
    double VM = 0.0;  ///< volatile matter
    double FC = 0.0;  ///< fixed carbon
    double M = 0.0;   ///< moisture
    double A = 0.0;   ///< ash
};

/// A feedstock: identity, composition and (dry-basis) mass flow.
struct BiomassFuel {
    std::string name;
    ProximateAnalysis proximate;
    UltimateAnalysis ultimate;
    double mass_flow = 1.0;  ///< kg/s, dry basis

    /// Ash content re-expressed per kg dry fuel, wt%.
    double ash_dry() const { return proximate.A / (1.0 - proximate.M / 100.0); }

    /// Inherent moisture as kg water per kg dry fuel.
    double moisture_per_kg_dry() const { return proximate.M / (100.0 - proximate.M); }

    void validate() const {
        const double eps = -1e-12;
        for (double v : {proximate.VM, proximate.FC, proximate.M, proximate.A})
            if (v < eps) throw InvalidInputError("fuel '" + name + "': negative proximate entry");
        for (double v : {ultimate.C, ultimate.H, ultimate.O, ultimate.N, ultimate.S, ultimate.Cl})
            if (v < eps) throw InvalidInputError("fuel '" + name + "': negative ultimate entry");
        if (proximate.M + proximate.A >= 100.0)
            throw InvalidInputError("fuel '" + name + "': moisture + ash must be < 100 wt%");
        double psum = proximate.VM + proximate.FC + proximate.M + proximate.A;
        if (psum < 99.0 || psum > 101.0)
            throw InvalidInputError("fuel '" + name + "': proximate analysis sums to " +
                                    std::to_string(psum) + " wt%, expected 100 +/- 1");
        if (!(mass_flow > 0.0))
            throw InvalidInputError("fuel '" + name + "': mass flow must be positive");
    }
};

/// Fraction of the fuel mass (on basis b) that is dry-ash-free matter.
inline double daf_mass_fraction(const ProximateAnalysis& p, Basis b) {
    if (p.M >= 100.0 || p.A >= 100.0 || p.M + p.A >= 100.0)
        throw InvalidInputError("proximate moisture/ash leave no combustible mass");
    switch (b) {
        case Basis::AsReceived: return 1.0 - p.M / 100.0 - p.A / 100.0;
        case Basis::Dry: return 1.0 - (p.A / (1.0 - p.M / 100.0)) / 100.0;
        case Basis::DryAshFree: return 1.0;
    }
    throw InvalidInputError("unknown basis");
}

/// Re-express an ultimate analysis on another basis using the proximate
/// moisture and ash. Round-trips are exact to floating point.
inline UltimateAnalysis convert_basis(const UltimateAnalysis& u, const ProximateAnalysis& p,
                                      Basis target) {
    double f = daf_mass_fraction(p, target) / daf_mass_fraction(p, u.basis);
    UltimateAnalysis out = u;
    out.C *= f;
    out.H *= f;
    out.O *= f;
    out.N *= f;
    out.S *= f;
    out.Cl *= f;
    out.basis = target;
    return out;
}

/// Higher heating value from elemental composition, MJ/kg on the same dry
/// basis as the inputs:
///   HHV = 0.3491 C + 1.1783 H + 1.0055 S + 0.0151 N - 0.1034 O - 0.0211 A
/// with C..O in wt% and A the ash wt% on that basis. Moisture-bearing
/// compositions are rejected; convert to a dry basis first.
inline double hhv(const UltimateAnalysis& u, double ash_wt) {
    if (u.basis == Basis::AsReceived)
        throw InvalidInputError("hhv: composition must be on a dry basis");
    if (ash_wt < 0.0)
        throw InvalidInputError("hhv: ash content cannot be negative");
    return 0.3491 * u.C + 1.1783 * u.H + 1.0055 * u.S + 0.0151 * u.N -
           0.1034 * u.O - 0.0211 * ash_wt;
}

/// Plausibility note for biomass heating values; empty when unremarkable.
inline std::optional<std::string> hhv_plausibility_note(double hhv_MJ_per_kg) {
    if (hhv_MJ_per_kg < 14.0 || hhv_MJ_per_kg > 21.0)
        return "HHV " + std::to_string(hhv_MJ_per_kg) +
               " MJ/kg is outside the typical biomass band [14, 21] MJ/kg";
    return std::nullopt;
}

/// Lower heating value from HHV, MJ/kg:  LHV = HHV - 2.442 (9 H/100 + M/100)
/// with H the hydrogen wt% and M the moisture wt% on the basis of the HHV.
inline double lhv_from_hhv(double hhv_MJ_per_kg, double H_wt, double M_wt) {
    if (H_wt < 0.0 || M_wt < 0.0 || M_wt >= 100.0)
        throw InvalidInputError("lhv_from_hhv: H and M must be valid wt%");
    return hhv_MJ_per_kg - kWaterHfg * (9.0 * H_wt / 100.0 + M_wt / 100.0);
}

/// Elemental molar content per kg of dry fuel, kmol/kg.
struct FuelElementalMoles {
    double c = 0.0;
    double h = 0.0;
    double o = 0.0;
    double n = 0.0;
    double s = 0.0;
};

inline FuelElementalMoles elemental_moles(const UltimateAnalysis& u) {
    if (u.basis == Basis::AsReceived)
        throw InvalidInputError("elemental_moles: composition must be on a dry basis");
    FuelElementalMoles m;
    m.c = u.C / (100.0 * atomic_mass("C"));
    m.h = u.H / (100.0 * atomic_mass("H"));
    m.o = u.O / (100.0 * atomic_mass("O"));
    m.n = u.N / (100.0 * atomic_mass("N"));
    m.s = u.S / (100.0 * atomic_mass("S"));
    return m;
}

/// Dry-fuel chemical exergy / LHV ratio from elemental mass ratios:
///
///   beta = [1.044 + 0.016 H/C - 0.3493 O/C (1 + 0.0531 H/C)] / [1 - 0.4124 O/C]
///
/// The correlation was fitted for O/C <= 0.667; woody biomass routinely
/// exceeds that, so crossing the bound is flagged as a warning, not an error.
struct SzargutBeta {
    double value = 0.0;
    double h_over_c = 0.0;
    double o_over_c = 0.0;
    bool outside_fitted_range = false;
};

inline SzargutBeta szargut_beta(const UltimateAnalysis& u) {
    if (!(u.C > 0.0))
        throw InvalidInputError("szargut_beta: carbon content must be positive");
    SzargutBeta r;
    r.h_over_c = u.H / u.C;
    r.o_over_c = u.O / u.C;
    double den = 1.0 - 0.4124 * r.o_over_c;
    if (!(den > 0.0))
        throw InvalidInputError("szargut_beta: O/C ratio " + std::to_string(r.o_over_c) +
                                " makes the correlation denominator non-positive");
    double num = 1.044 + 0.016 * r.h_over_c - 0.3493 * r.o_over_c * (1.0 + 0.0531 * r.h_over_c);
    r.value = num / den;
    r.outside_fitted_range = r.o_over_c > 0.667;
    return r;
}

/// Fuel heating values and chemical exergy on the bases the rest of the
/// model needs. "dry" values are per kg dry fuel; "as_fired" values are per
/// kg of fuel + moisture actually fed (moisture w in kg per kg dry).
struct FuelExergy {
    double hhv_dry = 0.0;        ///< MJ/kg dry
    double lhv_dry = 0.0;        ///< MJ/kg dry
    double beta = 0.0;
    double per_kg_dry = 0.0;     ///< MJ per kg dry fuel, moisture included
    double per_kg_as_fired = 0.0;///< MJ per kg wet fuel
    double rate_kW = 0.0;        ///< at the fuel's dry mass flow
    bool beta_outside_fitted_range = false;
};

/// Chemical exergy of the fed fuel: beta * LHV for the dry substance plus
/// the chemical exergy of the accompanying moisture. `moisture_override`
/// replaces the proximate-derived moisture loading (kg per kg dry).
inline FuelExergy fuel_chemical_exergy(const BiomassFuel& fuel, const SpeciesDb& db,
                                       const ReferenceEnvironment& env = {},
                                       std::optional<double> moisture_override = std::nullopt) {
    (void)env;  // the correlation is defined at standard conditions
    fuel.validate();
    UltimateAnalysis dry = convert_basis(fuel.ultimate, fuel.proximate, Basis::Dry);
    FuelExergy r;
    r.hhv_dry = hhv(dry, fuel.ash_dry());
    r.lhv_dry = lhv_from_hhv(r.hhv_dry, dry.H, 0.0);
    SzargutBeta beta = szargut_beta(dry);
    r.beta = beta.value;
    r.beta_outside_fitted_range = beta.outside_fitted_range;

    double w = moisture_override.value_or(fuel.moisture_per_kg_dry());
    if (w < 0.0)
        throw InvalidInputError("fuel moisture loading cannot be negative");
    // MJ/kg of liquid-water chemical exergy (standard-state table value)
    double ex_w = db.at("H2O_liq").ex_ch0 / kMolarMassH2O;
    r.per_kg_dry = r.beta * r.lhv_dry + w * ex_w;
    r.per_kg_as_fired = r.per_kg_dry / (1.0 + w);
    r.rate_kW = r.per_kg_dry * fuel.mass_flow * 1000.0;  // MJ/kg * kg/s -> MW -> kW
    if (!(r.per_kg_dry > r.lhv_dry))
        throw ModelInconsistencyError("fuel exergy fell below its LHV -- composition suspect");
    return r;
}

/// Formation enthalpy of the dry fuel, MJ/kg, inferred from its HHV: the
/// fuel burning to CO2 and liquid water must release exactly HHV. Nitrogen
/// leaves as N2 (zero formation enthalpy); sulfur and chlorine are outside
/// the reaction model and carry none.
inline double fuel_formation_enthalpy(const UltimateAnalysis& u_dry, double ash_wt_dry,
                                      const SpeciesDb& db) {
    FuelElementalMoles m = elemental_moles(u_dry);
    double hhv_dry = hhv(u_dry, ash_wt_dry);
    return hhv_dry + m.c * db.at("CO2").h_f0 + (m.h / 2.0) * db.at("H2O_liq").h_f0;
}

/// The feedstocks bundled with the library (proximate as received,
/// ultimate dry-ash-free, all wt%).
inline const std::vector<BiomassFuel>& builtin_fuels() {
    auto make = [](const char* name, double vm, double fc, double m, double a, double C,
                   double O, double H, double N, double S, double Cl) {
        BiomassFuel f;
        f.name = name;
        f.proximate = {vm, fc, m, a};
        f.ultimate = {C, H, O, N, S, Cl, Basis::DryAshFree};
        f.mass_flow = 1.0;
        return f;
    };
    static const std::vector<BiomassFuel> fuels = {
        make("beech_bark", 67.5, 17.0, 8.4, 7.1, 51.0, 41.8, 6.0, 0.7, 0.11, 0.11),
        make("oak_wood", 73.0, 20.0, 6.5, 0.3, 50.0, 42.9, 6.1, 0.3, 0.10, 0.0),
        make("sawdust", 55.1, 9.3, 34.9, 0.7, 49.0, 43.4, 6.1, 0.7, 0.11, 0.01),
        make("switch_grass", 70.8, 12.8, 11.9, 4.5, 49.0, 43.4, 6.1, 0.7, 0.11, 0.08),
        make("straw", 64.3, 13.8, 12.4, 9.5, 48.0, 44.5, 5.6, 1.0, 0.13, 0.54),
        make("almond_shell", 69.5, 20.2, 7.2, 3.1, 50.0, 42.5, 6.2, 1.0, 0.05, 0.06),
    };
    return fuels;
}

inline const BiomassFuel& builtin_fuel(const std::string& name) {
    for (const auto& f : builtin_fuels())
        if (f.name == name) return f;
    std::string known;
    for (const auto& f : builtin_fuels())
        known += (known.empty() ? "" : ", ") + f.name;
    throw InvalidInputError("unknown fuel '" + name + "' (built-ins: " + known + ")");
}

/// Read a user fuel from a JSON file:
///   {"name": "...", "proximate": {"VM":..,"FC":..,"M":..,"A":..},
///    "ultimate": {"basis": "daf|dry|ar", "C":.., "H":.., "O":.., "N":..,
///                 "S":.., "Cl":..}, "mass_flow": 1.0}
inline BiomassFuel load_fuel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInputError("cannot open fuel file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("fuel file '" + path + "': " + e.what());
    }
    try {
        BiomassFuel f;
        f.name = j.at("name").get<std::string>();
        const auto& p = j.at("proximate");
        f.proximate = {p.at("VM").get<double>(), p.at("FC").get<double>(),
                       p.at("M").get<double>(), p.at("A").get<double>()};
        const auto& u = j.at("ultimate");
        std::string basis = u.value("basis", "daf");
        if (basis == "daf" || basis == "dry-ash-free")
            f.ultimate.basis = Basis::DryAshFree;
        else if (basis == "dry")
            f.ultimate.basis = Basis::Dry;
        else if (basis == "ar" || basis == "as-received")
            f.ultimate.basis = Basis::AsReceived;
        else
            throw InvalidInputError("fuel file '" + path + "': unknown basis '" + basis + "'");
        f.ultimate.C = u.at("C").get<double>();
        f.ultimate.H = u.at("H").get<double>();
        f.ultimate.O = u.at("O").get<double>();
        f.ultimate.N = u.at("N").get<double>();
        f.ultimate.S = u.value("S", 0.0);
        f.ultimate.Cl = u.value("Cl", 0.0);
        f.mass_flow = j.value("mass_flow", 1.0);
        f.validate();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError("fuel file '" + path + "': " + e.what());
    }
}

}  // namespace exergas
