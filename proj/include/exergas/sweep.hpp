#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "exergas/analysis.hpp"
#include "exergas/environment.hpp"
#include "exergas/errors.hpp"

namespace exergas {

enum class SweepParameter { AmbientTemperature, GasifierTemperature };

/// A one-dimensional parametric study. The swept variable is expressed in
/// degrees Celsius; everything else is held at the base values.
struct SweepConfig {
    SweepParameter parameter = SweepParameter::GasifierTemperature;
    double lo_C = 625.0;
    double hi_C = 850.0;
    int count = 21;
    BiomassFuel fuel = builtin_fuel("oak_wood");
    GasifierSpec base{};                 ///< gasifier settings (T used when sweeping ambient)
    ReferenceEnvironment base_env{};     ///< ambient settings (T0 used when sweeping gasifier T)
    std::optional<double> moisture_w;    ///< kg/kg dry; default = fuel inherent moisture
    double stack_T = 428.15;             ///< K
    bool include_recovered_heat = true;

    void validate() const {
        if (count < 1) throw InvalidInputError("sweep needs at least one point");
        if (count > 1 && !(hi_C > lo_C))
            throw InvalidInputError("sweep range must be increasing when count > 1");
        base.validate();
    }

    /// Grid point i of count, evenly spaced inclusive of both ends.
    double point(int i) const {
        if (count == 1) return lo_C;
        return lo_C + static_cast<double>(i) * (hi_C - lo_C) / (count - 1);
    }
};

/// Ambient-temperature study: T0 from 10 to 30 C at a fixed 800 C gasifier.
inline SweepConfig preset_ambient_study() {
    SweepConfig c;
    c.parameter = SweepParameter::AmbientTemperature;
    c.lo_C = 10.0;
    c.hi_C = 30.0;
    c.count = 21;
    c.base.T_gasifier = 1073.15;
    return c;
}

/// Gasifier-temperature study: reaction T from 625 to 850 C at standard ambient.
inline SweepConfig preset_gasifier_study() {
    SweepConfig c;
    c.parameter = SweepParameter::GasifierTemperature;
    c.lo_C = 625.0;
    c.hi_C = 850.0;
    c.count = 21;
    return c;
}

/// Presets by CLI name; "fig2" is the ambient study, "fig3" the gasifier one.
inline SweepConfig sweep_preset(const std::string& name) {
    if (name == "fig2") return preset_ambient_study();
    if (name == "fig3") return preset_gasifier_study();
    throw InvalidInputError("unknown sweep preset '" + name + "' (have: fig2, fig3)");
}

/// One evaluated grid point. The payload values are meaningful only when
/// `ok`; failed points keep the inputs and carry a status token instead.
struct SweepRow {
    double param_value_C = 0.0;
    double T0_K = 0.0;
    double Tgas_K = 0.0;
    double ER = 0.0;
    double w = 0.0;
    bool ok = false;
    std::string status;  ///< "ok", "no_convergence" or "error"
    double z_H2 = 0.0, z_CO = 0.0, z_CO2 = 0.0, z_H2O = 0.0, z_CH4 = 0.0, z_N2 = 0.0;
    double gas_lhv_MJ_per_kmol = 0.0;
    double Ex_in_kW = 0.0, Ex_out_kW = 0.0, Ex_D_kW = 0.0;
    double S_gen_kW_per_K = 0.0;
    double eta = 0.0, psi = 0.0;
};

/// Monotonicity of the key outputs along the sweep, over converged points.
/// Strictness is vacuous with fewer than two converged points.
struct TrendSummary {
    int ok_count = 0;
    bool psi_strictly_increasing = true;
    bool psi_strictly_decreasing = true;
    bool exd_strictly_increasing = true;
    bool exd_strictly_decreasing = true;
    double psi_first = 0.0, psi_last = 0.0;
    double exd_first = 0.0, exd_last = 0.0;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRow> rows;
    TrendSummary trend;
};

inline SweepResult run_sweep(const SweepConfig& cfg, const SpeciesDb& db) {
    cfg.validate();
    SweepResult result;
    result.config = cfg;
    for (int i = 0; i < cfg.count; ++i) {
        double v = cfg.point(i);
        SweepRow row;
        row.param_value_C = v;
        AnalysisOptions opt;
        opt.fuel = cfg.fuel;
        opt.spec = cfg.base;
        opt.env = cfg.base_env;
        opt.moisture_w = cfg.moisture_w;
        opt.stack_T = cfg.stack_T;
        opt.include_recovered_heat = cfg.include_recovered_heat;
        if (cfg.parameter == SweepParameter::AmbientTemperature) {
            opt.env.T0 = celsius_to_kelvin(v);
            opt.env.validate();
        } else {
            opt.spec.T_gasifier = celsius_to_kelvin(v);
        }
        row.T0_K = opt.env.T0;
        row.Tgas_K = opt.spec.T_gasifier;
        row.ER = opt.spec.equivalence_ratio;
        row.w = opt.moisture_w.value_or(cfg.fuel.moisture_per_kg_dry());
        try {
            RunResult r = run_analysis(opt, db);
            row.ok = true;
            row.status = "ok";
            row.z_H2 = r.equilibrium.fraction("H2");
            row.z_CO = r.equilibrium.fraction("CO");
            row.z_CO2 = r.equilibrium.fraction("CO2");
            row.z_H2O = r.equilibrium.fraction("H2O");
            row.z_CH4 = r.equilibrium.fraction("CH4");
            row.z_N2 = r.equilibrium.fraction("N2");
            row.gas_lhv_MJ_per_kmol = r.gas_lhv_MJ_per_kmol;
            row.Ex_in_kW = r.balance.Ex_in_kW;
            row.Ex_out_kW = r.balance.Ex_out_kW;
            row.Ex_D_kW = r.balance.Ex_destroyed_kW;
            row.S_gen_kW_per_K = r.balance.S_gen_kW_per_K.value_or(0.0);
            row.eta = r.eta;
            row.psi = r.psi;
        } catch (const ConvergenceError&) {
            row.status = "no_convergence";
        } catch (const Error&) {
            row.status = "error";
        }
        result.rows.push_back(row);
    }

    TrendSummary& t = result.trend;
    const SweepRow* prev = nullptr;
    for (const SweepRow& row : result.rows) {
        if (!row.ok) continue;
        if (t.ok_count == 0) {
            t.psi_first = row.psi;
            t.exd_first = row.Ex_D_kW;
        }
        if (prev) {
            t.psi_strictly_increasing = t.psi_strictly_increasing && row.psi > prev->psi;
            t.psi_strictly_decreasing = t.psi_strictly_decreasing && row.psi < prev->psi;
            t.exd_strictly_increasing = t.exd_strictly_increasing && row.Ex_D_kW > prev->Ex_D_kW;
            t.exd_strictly_decreasing = t.exd_strictly_decreasing && row.Ex_D_kW < prev->Ex_D_kW;
        }
        t.psi_last = row.psi;
        t.exd_last = row.Ex_D_kW;
        ++t.ok_count;
        prev = &row;
    }
    return result;
}

namespace detail {

inline std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace detail

/// Write the sweep as CSV with a fixed column set. Formatting is plain
/// "%.15g" in the C locale, so identical runs produce identical bytes.
inline void emit_csv(const SweepResult& result, std::ostream& out) {
    out << "param_value,T0_K,Tgas_K,ER,w,z_H2,z_CO,z_CO2,z_H2O,z_CH4,z_N2,"
           "gas_LHV_MJ_per_kmol,Ex_in_kW,Ex_out_kW,Ex_D_kW,S_gen_kW_per_K,eta,psi,status\n";
    for (const SweepRow& r : result.rows) {
        out << detail::csv_num(r.param_value_C) << ',' << detail::csv_num(r.T0_K) << ','
            << detail::csv_num(r.Tgas_K) << ',' << detail::csv_num(r.ER) << ','
            << detail::csv_num(r.w) << ',';
        if (r.ok) {
            out << detail::csv_num(r.z_H2) << ',' << detail::csv_num(r.z_CO) << ','
                << detail::csv_num(r.z_CO2) << ',' << detail::csv_num(r.z_H2O) << ','
                << detail::csv_num(r.z_CH4) << ',' << detail::csv_num(r.z_N2) << ','
                << detail::csv_num(r.gas_lhv_MJ_per_kmol) << ','
                << detail::csv_num(r.Ex_in_kW) << ',' << detail::csv_num(r.Ex_out_kW) << ','
                << detail::csv_num(r.Ex_D_kW) << ',' << detail::csv_num(r.S_gen_kW_per_K)
                << ',' << detail::csv_num(r.eta) << ',' << detail::csv_num(r.psi);
        } else {
            for (int i = 0; i < 13; ++i) out << "nan" << (i + 1 < 13 ? "," : "");
        }
        out << ',' << r.status << '\n';
    }
}

inline std::string csv_string(const SweepResult& result) {
    std::ostringstream os;
    emit_csv(result, os);
    return os.str();
}

}  // namespace exergas
