// Command-line front end: single-point analysis, parametric sweeps, the
// bundled fuel table and species property lookups.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "exergas/exergas.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitModelError = 4;

struct CommonOptions {
    std::string fuel_name = "oak_wood";
    std::string fuel_file;
    std::string species_file;
    double er = 0.35;
    double tgas_c = 800.0;
    double t0_c = 25.0;
    double pressure_kpa = exergas::kStandardP0;
    double heat_loss = 0.015;
    double stack_c = 155.0;
    std::optional<double> moisture;
    bool cold_gas_only = false;
};

void add_common_flags(CLI::App& cmd, CommonOptions& o, bool with_tgas) {
    cmd.add_option("--fuel", o.fuel_name, "built-in fuel name (see `exergas fuels`)");
    cmd.add_option("--fuel-file", o.fuel_file, "JSON fuel definition (overrides --fuel)");
    cmd.add_option("--species-file", o.species_file,
                   "species dataset file (default: built-in data)");
    cmd.add_option("--er", o.er, "equivalence ratio, actual/stoichiometric oxygen")
        ->capture_default_str();
    if (with_tgas)
        cmd.add_option("--tgas-c", o.tgas_c, "gasifier temperature, deg C")
            ->capture_default_str();
    cmd.add_option("--t0-c", o.t0_c, "ambient (dead-state) temperature, deg C")
        ->capture_default_str();
    cmd.add_option("--pressure-kpa", o.pressure_kpa, "operating pressure, kPa")
        ->capture_default_str();
    cmd.add_option("--heat-loss", o.heat_loss,
                   "declared heat-loss allowance, fraction of fuel LHV")
        ->capture_default_str();
    cmd.add_option("--stack-c", o.stack_c, "stack temperature after heat recovery, deg C")
        ->capture_default_str();
    cmd.add_option("--moisture", o.moisture,
                   "moisture loading, kg water per kg dry fuel "
                   "(default: the fuel's inherent moisture)");
    cmd.add_flag("--cold-gas-only", o.cold_gas_only,
                 "exclude recovered stack heat from the first-law efficiency");
}

const exergas::SpeciesDb& database(const CommonOptions& o) {
    static std::optional<exergas::SpeciesDb> from_file;
    if (!o.species_file.empty()) {
        if (!from_file) from_file = exergas::SpeciesDb::load_file(o.species_file);
        return *from_file;
    }
    return exergas::SpeciesDb::builtin();
}

exergas::BiomassFuel pick_fuel(const CommonOptions& o) {
    if (!o.fuel_file.empty()) return exergas::load_fuel_file(o.fuel_file);
    return exergas::builtin_fuel(o.fuel_name);
}

exergas::AnalysisOptions to_analysis_options(const CommonOptions& o) {
    exergas::AnalysisOptions opt;
    opt.fuel = pick_fuel(o);
    opt.spec.equivalence_ratio = o.er;
    opt.spec.T_gasifier = exergas::celsius_to_kelvin(o.tgas_c);
    opt.spec.P = o.pressure_kpa;
    opt.spec.heat_loss_fraction = o.heat_loss;
    opt.env = exergas::ReferenceEnvironment(exergas::celsius_to_kelvin(o.t0_c),
                                            exergas::kStandardP0);
    opt.moisture_w = o.moisture;
    opt.stack_T = exergas::celsius_to_kelvin(o.stack_c);
    opt.include_recovered_heat = !o.cold_gas_only;
    return opt;
}

int run_analyze(const CommonOptions& o) {
    using namespace exergas;
    AnalysisOptions opt = to_analysis_options(o);
    RunResult r = run_analysis(opt, database(o));

    std::printf("fuel: %s  (%.3f kg/s dry, moisture %.3f kg/kg dry)\n",
                opt.fuel.name.c_str(), opt.fuel.mass_flow, r.spec.moisture_w);
    std::printf("state: ER %.3f, T_gasifier %.1f C, P %.3f kPa, ambient %.2f C\n",
                r.spec.equivalence_ratio, kelvin_to_celsius(r.spec.T_gasifier), r.spec.P,
                kelvin_to_celsius(r.env.T0));

    std::printf("\nproducer gas (equilibrium in %d iterations):\n", r.equilibrium.iterations);
    for (const char* sp : {"H2", "CO", "CO2", "H2O", "CH4", "N2"})
        std::printf("  z_%-4s %8.5f\n", sp, r.equilibrium.fraction(sp));
    std::printf("  molar flow %.5f kmol/s, LHV %.3f MJ/kmol  ->  %.1f kW chemical\n",
                r.gas.molar_flow, r.gas_lhv_MJ_per_kmol, r.gas_chemical_power_kW);

    std::printf("\nfirst law:\n");
    std::printf("  fuel energy in     %10.1f kW (as-fired LHV)\n", r.fuel_energy_kW);
    std::printf("  reactor heat duty  %10.1f kW (negative = loss)\n", r.energy.Q_kW);
    std::printf("  stack recovery     %10.1f kW down to %.1f C (mean %.1f C)\n",
                r.recovery.Q_kW, kelvin_to_celsius(opt.stack_T),
                kelvin_to_celsius(r.recovery.T_mean_K));
    std::printf("  efficiency eta     %10.4f%s\n", r.eta,
                opt.include_recovered_heat ? "" : " (cold gas only)");

    std::printf("\nsecond law:\n");
    std::printf("  exergy in: fuel %.1f + air %.1f + heat %.1f = %.1f kW\n",
                r.balance.Ex_fuel_kW, r.balance.Ex_air_kW, r.balance.Ex_heat_kW,
                r.balance.Ex_in_kW);
    std::printf("  exergy out (gas)   %10.1f kW\n", r.balance.Ex_out_kW);
    std::printf("  destroyed          %10.1f kW  (S_gen %.4f kW/K)\n",
                r.balance.Ex_destroyed_kW, r.balance.S_gen_kW_per_K.value_or(0.0));
    std::printf("  efficiency psi     %10.4f\n", r.psi);
    std::printf("  recovery exergy    %10.1f kW at the entropic mean temperature\n",
                r.recovery.exergy_kW);

    std::printf("\nmass balance:\n");
    std::printf("  in: dry fuel %.4f + moisture %.4f + air %.4f kg/s\n",
                r.mass.fuel_dry_kg_s, r.mass.moisture_kg_s, r.mass.air_kg_s);
    std::printf("  out: gas %.4f + residue %.4f kg/s (fly %.4f, bottom %.4f)\n",
                r.mass.gas_kg_s, r.mass.inert_kg_s, r.mass.fly_fraction_kg_s,
                r.mass.bottom_fraction_kg_s);
    std::printf("  closure residual %.2e\n", r.mass.closure_residual);

    if (!r.notes.empty()) {
        std::printf("\nnotes:\n");
        for (const std::string& n : r.notes) std::printf("  - %s\n", n.c_str());
    }
    return kExitOk;
}

exergas::SweepConfig sweep_from_json(const std::string& path) {
    using nlohmann::json;
    std::ifstream in(path);
    if (!in) throw exergas::InvalidInputError("cannot open sweep config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw exergas::InvalidInputError("sweep config '" + path + "': " + e.what());
    }
    try {
        exergas::SweepConfig c;
        std::string param = j.value("parameter", "gasifier");
        if (param == "ambient")
            c = exergas::preset_ambient_study();
        else if (param == "gasifier")
            c = exergas::preset_gasifier_study();
        else
            throw exergas::InvalidInputError("sweep config: unknown parameter '" + param +
                                             "' (have: ambient, gasifier)");
        c.lo_C = j.value("lo_C", c.lo_C);
        c.hi_C = j.value("hi_C", c.hi_C);
        c.count = j.value("count", c.count);
        if (j.contains("fuel_file"))
            c.fuel = exergas::load_fuel_file(j.at("fuel_file").get<std::string>());
        else if (j.contains("fuel"))
            c.fuel = exergas::builtin_fuel(j.at("fuel").get<std::string>());
        c.base.equivalence_ratio = j.value("er", c.base.equivalence_ratio);
        if (j.contains("tgas_C"))
            c.base.T_gasifier = exergas::celsius_to_kelvin(j.at("tgas_C").get<double>());
        c.base.P = j.value("pressure_kPa", c.base.P);
        c.base.heat_loss_fraction = j.value("heat_loss", c.base.heat_loss_fraction);
        if (j.contains("t0_C"))
            c.base_env = exergas::ReferenceEnvironment(
                exergas::celsius_to_kelvin(j.at("t0_C").get<double>()), exergas::kStandardP0);
        if (j.contains("moisture")) c.moisture_w = j.at("moisture").get<double>();
        if (j.contains("stack_C"))
            c.stack_T = exergas::celsius_to_kelvin(j.at("stack_C").get<double>());
        c.include_recovered_heat = j.value("include_recovered_heat", true);
        return c;
    } catch (const json::exception& e) {
        throw exergas::InvalidInputError("sweep config '" + path + "': " + e.what());
    }
}

int run_sweep_cmd(const CommonOptions& o, const std::string& preset,
                  const std::string& config_file, const std::string& param,
                  double lo_c, double hi_c, int count, const std::string& out_file,
                  bool explicit_grid) {
    using namespace exergas;
    SweepConfig cfg;
    if (!preset.empty() && !config_file.empty())
        throw InvalidInputError("--preset and --config are mutually exclusive");
    if (!preset.empty()) {
        cfg = sweep_preset(preset);
    } else if (!config_file.empty()) {
        cfg = sweep_from_json(config_file);
    } else {
        if (param == "ambient")
            cfg = preset_ambient_study();
        else if (param == "gasifier")
            cfg = preset_gasifier_study();
        else
            throw InvalidInputError("unknown --param '" + param +
                                    "' (have: ambient, gasifier)");
        cfg.fuel = pick_fuel(o);
        cfg.base.equivalence_ratio = o.er;
        if (param == "ambient") cfg.base.T_gasifier = celsius_to_kelvin(o.tgas_c);
        cfg.base.P = o.pressure_kpa;
        cfg.base.heat_loss_fraction = o.heat_loss;
        if (param == "gasifier")
            cfg.base_env =
                ReferenceEnvironment(celsius_to_kelvin(o.t0_c), kStandardP0);
        cfg.moisture_w = o.moisture;
        cfg.stack_T = celsius_to_kelvin(o.stack_c);
        cfg.include_recovered_heat = !o.cold_gas_only;
        if (explicit_grid) {
            cfg.lo_C = lo_c;
            cfg.hi_C = hi_c;
            cfg.count = count;
        }
    }

    SweepResult res = run_sweep(cfg, database(o));
    if (out_file.empty()) {
        emit_csv(res, std::cout);
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw InvalidInputError("cannot write '" + out_file + "'");
        emit_csv(res, out);
        std::fprintf(stderr, "wrote %d rows (%d converged) to %s\n",
                     static_cast<int>(res.rows.size()), res.trend.ok_count,
                     out_file.c_str());
    }
    return res.trend.ok_count == static_cast<int>(res.rows.size()) ? kExitOk
                                                                    : kExitNoConvergence;
}

int run_fuels() {
    using namespace exergas;
    std::printf("%-12s %6s %6s %6s %6s   %s\n", "name", "M%", "A%", "HHVd", "beta",
                "notes");
    for (const BiomassFuel& f : builtin_fuels()) {
        UltimateAnalysis dry = convert_basis(f.ultimate, f.proximate, Basis::Dry);
        double h = hhv(dry, f.ash_dry());
        SzargutBeta b = szargut_beta(dry);
        std::printf("%-12s %6.2f %6.2f %6.2f %6.3f   %s\n", f.name.c_str(), f.proximate.M,
                    f.proximate.A, h, b.value,
                    b.outside_fitted_range ? "exergy ratio extrapolated (O/C > 0.667)" : "");
    }
    return kExitOk;
}

int run_props(const CommonOptions& o, const std::string& species, double t_c) {
    using namespace exergas;
    const SpeciesDb& db = database(o);
    const SpeciesRecord& sp = db.at(species);
    double T = celsius_to_kelvin(t_c);
    std::printf("%s (%s), molar mass %.3f kg/kmol\n", sp.name.c_str(), sp.formula.c_str(),
                sp.molar_mass);
    std::printf("  T                  %10.2f K (%.2f C)\n", T, t_c);
    std::printf("  cp                 %10.4f J/(mol K)\n", cp_molar(sp, T));
    std::printf("  h                  %10.4f kJ/mol\n", enthalpy_molar(sp, T));
    std::printf("  s (standard P)     %10.4f J/(mol K)\n", entropy_std(sp, T));
    std::printf("  g                  %10.4f kJ/mol\n", gibbs_molar(sp, T));
    std::printf("  formation enthalpy %10.4f kJ/mol\n", sp.h_f0);
    std::printf("  chemical exergy    %10.4f kJ/mol at the standard environment\n",
                sp.ex_ch0);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady-state biomass gasification: equilibrium producer gas with "
                 "first- and second-law accounting"};
    app.require_subcommand(1);

    CommonOptions ao;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one operating point");
    add_common_flags(*analyze, ao, true);

    CommonOptions so;
    std::string preset, config_file, out_file;
    std::string param = "gasifier";
    double lo_c = 625.0, hi_c = 850.0;
    int count = 21;
    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
    sweep->add_option("--preset", preset,
                      "named study: fig2 (ambient 10-30 C) or fig3 (gasifier 625-850 C)");
    sweep->add_option("--config", config_file, "sweep configuration JSON file");
    sweep->add_option("--param", param, "swept parameter: ambient | gasifier")
        ->capture_default_str();
    CLI::Option* lo_opt = sweep->add_option("--lo-c", lo_c, "sweep start, deg C");
    sweep->add_option("--hi-c", hi_c, "sweep end, deg C")->needs(lo_opt);
    sweep->add_option("--count", count, "number of grid points")->capture_default_str();
    sweep->add_option("--out", out_file, "output CSV path (default: stdout)");
    add_common_flags(*sweep, so, true);

    CLI::App* fuels = app.add_subcommand("fuels", "list the built-in fuels");

    CommonOptions po;
    std::string species = "CO2";
    double t_c = 25.0;
    CLI::App* props = app.add_subcommand("props", "thermodynamic properties of a species");
    props->add_option("--species", species, "species name, e.g. CO2, H2, C_gr")
        ->capture_default_str();
    props->add_option("--t-c", t_c, "temperature, deg C")->capture_default_str();
    props->add_option("--species-file", po.species_file,
                      "species dataset file (default: built-in data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*analyze) return run_analyze(ao);
        if (*sweep)
            return run_sweep_cmd(so, preset, config_file, param, lo_c, hi_c, count,
                                 out_file, sweep->count("--lo-c") > 0);
        if (*fuels) return run_fuels();
        if (*props) return run_props(po, species, t_c);
    } catch (const exergas::ConvergenceError& e) {
        std::fprintf(stderr, "error: no convergence: %s\n", e.what());
        return kExitNoConvergence;
    } catch (const exergas::InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const exergas::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitModelError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitModelError;
    }
    return kExitOk;
}
