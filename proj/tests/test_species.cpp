#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <string>

#include "exergas/exergas.hpp"

using namespace exergas;

namespace {
const SpeciesDb& db() { return SpeciesDb::builtin(); }
}  // namespace

TEST_CASE("bundled dataset carries the full species set", "[species]") {
    for (const auto& name : required_species()) {
        REQUIRE(db().has(name));
        REQUIRE(db().at(name).name == name);
    }
    REQUIRE(db().records().size() == required_species().size());
}

TEST_CASE("standard-state formation enthalpies and entropies are exact", "[species]") {
    struct Pin {
        const char* name;
        double h_f0;   // kJ/mol
        double s0;     // J/(mol K)
    };
    const Pin pins[] = {
        {"O2", 0.0, 205.152},      {"N2", 0.0, 191.609},
        {"CO2", -393.52, 213.785}, {"H2O", -241.82, 188.835},
        {"H2O_liq", -285.83, 69.95}, {"CO", -110.53, 197.66},
        {"H2", 0.0, 130.68},       {"CH4", -74.85, 186.25},
        {"SO2", -297.10, 248.21},  {"NO", 90.59, 210.76},
        {"NO2", 33.72, 240.04},    {"C_gr", 0.0, 5.74},
    };
    for (const Pin& p : pins) {
        const SpeciesRecord& sp = db().at(p.name);
        INFO(p.name);
        REQUIRE(sp.h_f0 == p.h_f0);
        REQUIRE(std::abs(enthalpy_molar(sp, kStandardT0) - p.h_f0) < 1e-9);
        REQUIRE(std::abs(entropy_std(sp, kStandardT0) - p.s0) < 1e-9);
    }
}

TEST_CASE("heat capacities at 298.15 K match independent reference values", "[species]") {
    struct Ref {
        const char* name;
        double cp;   // J/(mol K)
        double tol;
    };
    const Ref refs[] = {
        {"N2", 29.12, 0.15},  {"O2", 29.38, 0.15},  {"CO2", 37.13, 0.15},
        {"H2O", 33.59, 0.15}, {"CO", 29.14, 0.15},  {"H2", 28.84, 0.15},
        {"CH4", 35.69, 0.15}, {"SO2", 39.88, 0.15}, {"NO", 29.84, 0.15},
        {"NO2", 37.05, 0.30}, {"C_gr", 8.53, 0.15}, {"H2O_liq", 75.3, 1e-12},
    };
    for (const Ref& r : refs) {
        INFO(r.name);
        REQUIRE(std::abs(cp_molar(db().at(r.name), kStandardT0) - r.cp) <= r.tol);
    }
}

TEST_CASE("enthalpy increments match independent gas tables", "[species]") {
    struct Inc {
        const char* name;
        double T;
        double dh;   // kJ/mol relative to 298.15 K
        double tol;
    };
    const Inc incs[] = {
        {"N2", 500.0, 5.911, 0.03},   {"N2", 1000.0, 21.463, 0.06},
        {"CO2", 1000.0, 33.397, 0.12},{"H2O", 1000.0, 26.000, 0.12},
        {"C_gr", 1000.0, 11.795, 0.25},{"SO2", 1000.0, 34.43, 0.20},
    };
    for (const Inc& i : incs) {
        const SpeciesRecord& sp = db().at(i.name);
        INFO(i.name << " at " << i.T);
        REQUIRE(std::abs(enthalpy_molar(sp, i.T) - enthalpy_molar(sp, kStandardT0) - i.dh) <=
                i.tol);
    }
    REQUIRE(std::abs(entropy_std(db().at("N2"), 500.0) - 206.74) <= 0.30);
    REQUIRE(std::abs(entropy_std(db().at("N2"), 1000.0) - 228.17) <= 0.40);
    REQUIRE(std::abs(entropy_std(db().at("C_gr"), 1000.0) - 24.457) <= 0.50);
    // the stack-cooling span used by the heat-recovery model
    REQUIRE(std::abs(enthalpy_molar(db().at("N2"), 1073.15) -
                     enthalpy_molar(db().at("N2"), 428.15) - 20.078) <= 0.06);
}

TEST_CASE("piecewise fits are continuous at the segment break", "[species]") {
    for (const SpeciesRecord& sp : db().records()) {
        if (sp.segments.size() < 2) continue;
        const PolySegment& lo = sp.segments[0];
        const PolySegment& hi = sp.segments[1];
        double Tb = lo.T_high;
        INFO(sp.name << " at " << Tb);
        REQUIRE(Tb == hi.T_low);
        REQUIRE(std::abs(lo.h_over_Ru(Tb) - hi.h_over_Ru(Tb)) < 1e-6);       // ~1e-5 J/mol
        REQUIRE(std::abs(lo.s_over_Ru(Tb) - hi.s_over_Ru(Tb)) < 1e-9);
        double cp_lo = kGasConstant * lo.cp_over_Ru(Tb);
        double cp_hi = kGasConstant * hi.cp_over_Ru(Tb);
        REQUIRE(std::abs(cp_hi - cp_lo) / cp_lo < 5e-3);
    }
}

TEST_CASE("enthalpy derivative reproduces the heat capacity", "[species]") {
    const double dT = 0.01;
    for (const SpeciesRecord& sp : db().records()) {
        for (double T = sp.T_min() + 1.0; T < sp.T_max() - 1.0; T += 37.0) {
            // skip the segment break, where one-sided derivatives differ
            bool near_break = false;
            for (size_t i = 1; i < sp.segments.size(); ++i)
                if (std::abs(T - sp.segments[i].T_low) < 0.05) near_break = true;
            if (near_break) continue;
            double num = (enthalpy_molar(sp, T + dT) - enthalpy_molar(sp, T - dT)) /
                         (2.0 * dT) * 1000.0;  // J/(mol K)
            double cp = cp_molar(sp, T);
            INFO(sp.name << " at " << T);
            REQUIRE(std::abs(num - cp) < 1e-4 * std::abs(cp) + 1e-6);
            double ds = (entropy_std(sp, T + dT) - entropy_std(sp, T - dT)) / (2.0 * dT);
            REQUIRE(std::abs(ds - cp / T) < 1e-4 * std::abs(cp / T) + 1e-6);
        }
    }
}

TEST_CASE("entropy follows ideal partial-pressure mixing", "[species]") {
    const SpeciesRecord& n2 = db().at("N2");
    double s_std = entropy_std(n2, 500.0);
    REQUIRE(entropy_molar(n2, 500.0, kStandardP0) == s_std);
    REQUIRE(std::abs(entropy_molar(n2, 500.0, kStandardP0 / 2.0) -
                     (s_std + kGasConstant * std::log(2.0))) < 1e-12);
    REQUIRE_THROWS_AS(entropy_molar(n2, 500.0, 0.0), InvalidInputError);
    REQUIRE_THROWS_AS(entropy_molar(n2, 500.0, -1.0), InvalidInputError);
}

TEST_CASE("temperatures outside the tabulated range are rejected", "[species]") {
    REQUIRE_THROWS_AS(enthalpy_molar(db().at("N2"), 5000.0), OutOfRangeError);
    REQUIRE_THROWS_AS(enthalpy_molar(db().at("N2"), 100.0), OutOfRangeError);
    REQUIRE_THROWS_AS(cp_molar(db().at("H2O_liq"), 500.0), OutOfRangeError);
    REQUIRE_THROWS_AS(db().at("no_such_species"), MissingSpeciesError);
    try {
        db().at("kryptonite");
        FAIL("expected MissingSpeciesError");
    } catch (const MissingSpeciesError& e) {
        REQUIRE(e.species() == "kryptonite");
    }
}

TEST_CASE("dataset on disk matches the compiled-in copy", "[species]") {
    SpeciesDb file_db = SpeciesDb::load_file(std::string(EXERGAS_DATA_DIR) + "/species.dat");
    REQUIRE(file_db.records().size() == db().records().size());
    for (const SpeciesRecord& sp : db().records()) {
        const SpeciesRecord& other = file_db.at(sp.name);
        REQUIRE(other.molar_mass == sp.molar_mass);
        REQUIRE(other.h_f0 == sp.h_f0);
        REQUIRE(other.ex_ch0 == sp.ex_ch0);
        for (double T : {250.0, 298.15, 700.0, 1000.0, 1500.0, 3000.0}) {
            if (T < sp.T_min() || T > sp.T_max()) continue;
            REQUIRE(enthalpy_molar(other, T) == enthalpy_molar(sp, T));
            REQUIRE(entropy_std(other, T) == entropy_std(sp, T));
        }
    }
}

TEST_CASE("malformed dataset text is rejected with line information", "[species]") {
    SECTION("truncated header") {
        std::istringstream bad("N2 N2 28.014 0\n");
        REQUIRE_THROWS_AS(SpeciesDb::parse(bad), ParseError);
    }
    SECTION("unparseable number carries its line") {
        std::istringstream bad("N2 N2 28.014 zero 0.72 1\n200 1000 1 0 0 0 0 0 0\n");
        try {
            SpeciesDb::parse(bad);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 1);
        }
    }
    SECTION("missing required species") {
        std::istringstream incomplete(
            "N2 N2 28.014 0 0.72 1\n200 3500 3.5 0 0 0 0 -1060 4\n");
        REQUIRE_THROWS_AS(SpeciesDb::parse(incomplete), MissingSpeciesError);
    }
    SECTION("gap between segments") {
        std::istringstream gap(
            "N2 N2 28.014 0 0.72 2\n"
            "200 900 3.5 0 0 0 0 -1060 4\n"
            "1000 3500 3.5 0 0 0 0 -1060 4\n");
        REQUIRE_THROWS_AS(SpeciesDb::parse(gap), RangeGapError);
    }
    SECTION("molar mass inconsistent with formula") {
        std::istringstream wrong(
            "N2 N2 26.5 0 0.72 1\n200 3500 3.5 0 0 0 0 -1060 4\n");
        REQUIRE_THROWS_AS(SpeciesDb::parse(wrong), ParseError);
    }
}

TEST_CASE("chemical exergies reproduce the reference table at 298.15 K", "[species][exergy]") {
    struct Ref {
        const char* name;
        double ex;   // kJ/mol
    };
    const Ref table[] = {
        {"O2", 3.97},  {"N2", 0.72},   {"CO2", 19.87}, {"H2O", 9.5},
        {"H2O_liq", 0.9}, {"SO2", 313.40}, {"NO", 88.90}, {"NO2", 55.60},
    };
    for (const Ref& r : table) {
        INFO(r.name);
        REQUIRE(db().at(r.name).ex_ch0 == r.ex);
        REQUIRE(db().chemical_exergy_ref(r.name) == r.ex);  // bit-exact at standard T0
    }
    // species not in the reference table carry element-consistent values that
    // land on the independently published ones
    REQUIRE(std::abs(db().at("CO").ex_ch0 - 275.10) <= 0.30);
    REQUIRE(std::abs(db().at("H2").ex_ch0 - 236.10) <= 0.30);
    REQUIRE(std::abs(db().at("CH4").ex_ch0 - 831.65) <= 0.60);
    REQUIRE(std::abs(db().at("C_gr").ex_ch0 - 410.26) <= 0.60);
}

TEST_CASE("element potentials reconstruct every tabulated exergy", "[species][exergy]") {
    auto mu = db().element_potentials();
    REQUIRE(std::abs(mu.at("C") - (-411.9939)) < 1e-3);
    REQUIRE(std::abs(mu.at("H") - (-137.5266)) < 1e-3);
    REQUIRE(std::abs(mu.at("O") - (-32.5680)) < 1e-3);
    REQUIRE(std::abs(mu.at("N") - (-28.9241)) < 1e-3);
    REQUIRE(std::abs(mu.at("S") - (-619.3677)) < 1e-3);
    for (const SpeciesRecord& sp : db().records()) {
        double ex = gibbs_molar(sp, kStandardT0);
        for (const auto& [el, n] : sp.elements) ex -= n * mu.at(el);
        INFO(sp.name);
        // anchors are exact by construction; H2O_liq/NO/NO2 sit outside the
        // gas-phase element closure and keep their tabulated values
        if (sp.name == "H2O_liq" || sp.name == "NO" || sp.name == "NO2") continue;
        REQUIRE(std::abs(ex - sp.ex_ch0) < 1e-6);
    }
}

TEST_CASE("reference mole fractions mirror a realistic atmosphere", "[species]") {
    REQUIRE(std::abs(db().reference_fraction("O2") - 0.2016) < 0.2016 * 0.02);
    REQUIRE(std::abs(db().reference_fraction("N2") - 0.7479) < 0.7479 * 0.02);
    REQUIRE(std::abs(db().reference_fraction("CO2") - 3.30e-4) < 3.30e-4 * 0.02);
    REQUIRE(std::abs(db().reference_fraction("H2O") - 0.0217) < 0.0217 * 0.02);
}

TEST_CASE("reference exergies shift consistently with the dead state", "[species][exergy]") {
    ReferenceEnvironment cold(288.15, kStandardP0);
    ReferenceEnvironment hot(308.15, kStandardP0);
    // anchor species: fixed reference fractions make the value linear in T0
    for (const char* name : {"O2", "N2", "CO2", "SO2"}) {
        INFO(name);
        double expect_cold = db().at(name).ex_ch0 * cold.T0 / kStandardT0;
        REQUIRE(std::abs(db().chemical_exergy_ref(name, cold) - expect_cold) < 1e-9);
    }
    // derived species stay continuous through the standard point
    ReferenceEnvironment near_std(kStandardT0 + 1e-3, kStandardP0);
    for (const char* name : {"CO", "H2", "CH4", "C_gr"}) {
        INFO(name);
        REQUIRE(std::abs(db().chemical_exergy_ref(name, near_std) - db().at(name).ex_ch0) <
                0.01);
        REQUIRE(db().chemical_exergy_ref(name, hot) !=
                db().chemical_exergy_ref(name, cold));
    }
}

TEST_CASE("fixed-composition exergy correction matches its closed form", "[species][exergy]") {
    // ex(T) = (T0/T) ex0 - h_f0 (T - T0)/T, a standalone reporting aid
    REQUIRE(std::abs(chemical_exergy_at_T(db().at("CO2"), 596.30) - 206.695) < 0.01);
    REQUIRE(std::abs(chemical_exergy_at_T(db().at("N2"), 596.30) - 0.36) < 0.005);
    REQUIRE(chemical_exergy_at_T(db().at("CO2"), kStandardT0) == db().at("CO2").ex_ch0);
}

TEST_CASE("environment validation rejects unphysical dead states", "[environment]") {
    REQUIRE_THROWS_AS(ReferenceEnvironment(150.0, kStandardP0), InvalidInputError);
    REQUIRE_THROWS_AS(ReferenceEnvironment(450.0, kStandardP0), InvalidInputError);
    REQUIRE_THROWS_AS(ReferenceEnvironment(298.15, 0.0), InvalidInputError);
    REQUIRE_THROWS_AS(ReferenceEnvironment(298.15, 2000.0), InvalidInputError);
    REQUIRE(celsius_to_kelvin(25.0) == 298.15);
    REQUIRE(kelvin_to_celsius(373.15) == 100.0);
}
