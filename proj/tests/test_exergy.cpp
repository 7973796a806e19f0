#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <string>

#include "exergas/exergas.hpp"

using namespace exergas;

namespace {
const SpeciesDb& db() { return SpeciesDb::builtin(); }

GasStream pure_n2(double T, double P, double molar_flow = 0.001) {
    GasStream s;
    s.T = T;
    s.P = P;
    s.molar_flow = molar_flow;
    s.z = {{"N2", 1.0}};
    return s;
}

struct FullRun {
    FuelStream feed;
    GasStream air;
    GasStream gas;
    BalanceReport balance;
};

FullRun oak_run(const ReferenceEnvironment& env = {}) {
    FullRun r;
    BiomassFuel fuel = builtin_fuel("oak_wood");
    GasifierSpec spec;
    spec.moisture_w = fuel.moisture_per_kg_dry();
    ReactionInputs in = make_reaction_inputs(fuel, spec);
    EquilibriumSolution sol = solve_producer_gas(in, spec.T_gasifier, spec.P, db());
    r.feed = {fuel, spec.moisture_w, env.T0};
    r.air = reaction_air_stream(in, env);
    r.gas = sol.to_stream(in.carbon_flow, spec.T_gasifier, spec.P);
    r.balance = gasifier_exergy_balance(r.feed, r.air, r.gas, db(), env);
    return r;
}
}  // namespace

TEST_CASE("physical exergy of a heated and a compressed stream", "[exergy]") {
    // 1 mol/s of N2 at 500 K, ambient pressure
    double hot = physical_exergy(pure_n2(500.0, kStandardP0), db());
    REQUIRE(std::abs(hot - 1.40265) < 0.01);

    // dead state carries none, exactly
    REQUIRE(physical_exergy(pure_n2(298.15, kStandardP0), db()) == 0.0);

    // isothermal compression to 2 P0 stores Ru T0 ln 2 per mole
    double compressed = physical_exergy(pure_n2(298.15, 2.0 * kStandardP0), db());
    REQUIRE(std::abs(compressed - 2.478819 * std::log(2.0)) < 1e-4);
    REQUIRE(std::abs(compressed - 1.71819) < 1e-4);

    // physical exergy is positive either side of the dead state
    REQUIRE(physical_exergy(pure_n2(250.0, kStandardP0), db()) > 0.0);
}

TEST_CASE("chemical exergy of mixtures", "[exergy]") {
    // a pure species at reference conditions is exactly its table value
    std::map<std::string, double> pure = {{"CO2", 1.0}};
    REQUIRE(chemical_exergy_mixture(pure, db()) == db().at("CO2").ex_ch0);

    // mixing always costs exergy relative to the mole-weighted pure values
    std::map<std::string, double> half = {{"O2", 0.5}, {"N2", 0.5}};
    double mixed = chemical_exergy_mixture(half, db());
    double unmixed = 0.5 * db().at("O2").ex_ch0 + 0.5 * db().at("N2").ex_ch0;
    REQUIRE(mixed < unmixed);
    REQUIRE(std::abs(mixed - (unmixed + 2.478819 * std::log(0.5))) < 1e-4);

    // combustion-air composition: small but positive
    ReactionInputs in = make_reaction_inputs(builtin_fuel("oak_wood"), GasifierSpec{});
    GasStream air = reaction_air_stream(in);
    double per_mol = chemical_exergy_mixture(air.z, db());
    REQUIRE(std::abs(per_mol - 0.128494) < 2e-3);

    std::map<std::string, double> bad = {{"CO2", -0.1}};
    REQUIRE_THROWS_AS(chemical_exergy_mixture(bad, db()), InvalidInputError);
}

TEST_CASE("stream exergy splits into physical and chemical parts", "[exergy]") {
    GasStream s = pure_n2(500.0, kStandardP0, 0.002);
    StreamExergy ex = stream_exergy(s, db());
    REQUIRE(ex.total_kW == ex.physical_kW + ex.chemical_kW);
    REQUIRE(std::abs(ex.physical_kW - physical_exergy(s, db())) < 1e-12);
    REQUIRE(std::abs(ex.chemical_kW - chemical_exergy_rate(s, db())) < 1e-12);
    REQUIRE(ex.chemical_kW == 0.002 * db().at("N2").ex_ch0 * 1000.0);
}

TEST_CASE("single-term air exergy shortcut", "[exergy]") {
    // kJ per mol O2 drawn, with its 3.76 N2, at ambient composition
    double per_o2 = air_exergy_simplified(0.001, db());
    REQUIRE(std::abs(per_o2 - 2.224324) < 2e-3);
    REQUIRE(air_exergy_simplified(0.0, db()) == 0.0);
    REQUIRE_THROWS_AS(air_exergy_simplified(-1.0, db()), InvalidInputError);
}

TEST_CASE("heat exergy follows the Carnot factor", "[exergy]") {
    REQUIRE(std::abs(heat_exergy(100.0, 1000.0) - 70.185) < 1e-9);
    REQUIRE(std::abs(heat_exergy(-100.0, 1000.0) + 70.185) < 1e-9);
    REQUIRE(heat_exergy(12345.0, 298.15) == 0.0);
    REQUIRE_THROWS_AS(heat_exergy(100.0, 0.0), InvalidInputError);
    REQUIRE_THROWS_AS(heat_exergy(100.0, -10.0), InvalidInputError);
}

TEST_CASE("scalar balance assembly and its guards", "[exergy]") {
    BalanceReport b = gasifier_exergy_balance(100.0, 10.0, -5.0, 90.0);
    REQUIRE(b.Ex_in_kW == 105.0);
    REQUIRE(b.Ex_out_kW == 90.0);
    REQUIRE(b.Ex_destroyed_kW == 15.0);
    REQUIRE(b.psi == 90.0 / 105.0);
    REQUIRE_FALSE(b.S_gen_kW_per_K.has_value());
    REQUIRE_FALSE(b.gouy_stodola_residual.has_value());

    REQUIRE_THROWS_AS(gasifier_exergy_balance(100.0, 0.0, 0.0, 101.0),
                      ModelInconsistencyError);
    REQUIRE_THROWS_AS(gasifier_exergy_balance(0.0, 0.0, 0.0, 0.0), InvalidInputError);
}

TEST_CASE("full gasifier balance closes both destruction routes", "[exergy]") {
    FullRun r = oak_run();
    const BalanceReport& b = r.balance;

    REQUIRE(b.Ex_in_kW == b.Ex_fuel_kW + b.Ex_air_kW + b.Ex_heat_kW);
    REQUIRE(b.Ex_destroyed_kW == b.Ex_in_kW - b.Ex_out_kW);
    REQUIRE(b.Ex_destroyed_kW > 0.0);
    REQUIRE(std::abs(b.psi - (1.0 - b.Ex_destroyed_kW / b.Ex_in_kW)) < 1e-12);
    REQUIRE(b.psi > 0.5);
    REQUIRE(b.psi < 1.0);

    REQUIRE(b.Q_kW < 0.0);
    REQUIRE(b.Ex_heat_kW < 0.0);  // lost heat carries exergy out

    REQUIRE(b.S_gen_kW_per_K.has_value());
    REQUIRE(*b.S_gen_kW_per_K > 0.0);
    REQUIRE(b.gouy_stodola_residual.has_value());
    REQUIRE(*b.gouy_stodola_residual < 1e-8);
    // the two routes: in/out deficit vs T0 * entropy generation
    REQUIRE(std::abs(b.Ex_destroyed_kW - 298.15 * *b.S_gen_kW_per_K) <
            1e-6 * b.Ex_destroyed_kW);

    REQUIRE(exergy_efficiency(b) == b.psi);
}

TEST_CASE("balance holds under a shifted reference environment", "[exergy]") {
    for (double t0 : {288.15, 303.15}) {
        ReferenceEnvironment env(t0, kStandardP0);
        FullRun r = oak_run(env);
        INFO("T0 = " << t0);
        REQUIRE(*r.balance.gouy_stodola_residual < 1e-6);
        REQUIRE(r.balance.Ex_destroyed_kW > 0.0);
        REQUIRE(r.balance.psi > 0.5);
        REQUIRE(r.balance.psi < 1.0);
    }
    // colder surroundings squeeze more work potential from the same gas:
    // destruction rises with T0, efficiency falls
    FullRun cold = oak_run(ReferenceEnvironment(288.15, kStandardP0));
    FullRun hot = oak_run(ReferenceEnvironment(303.15, kStandardP0));
    REQUIRE(cold.balance.psi > hot.balance.psi);
}

TEST_CASE("full balance rejects streams at the wrong temperature", "[exergy]") {
    FullRun r = oak_run();
    FuelStream warm_feed = r.feed;
    warm_feed.T = 310.0;
    REQUIRE_THROWS_AS(gasifier_exergy_balance(warm_feed, r.air, r.gas, db()),
                      InvalidInputError);
    GasStream warm_air = r.air;
    warm_air.T = 310.0;
    REQUIRE_THROWS_AS(gasifier_exergy_balance(r.feed, warm_air, r.gas, db()),
                      InvalidInputError);
}

TEST_CASE("full balance rejects element imbalance", "[exergy]") {
    FullRun r = oak_run();
    GasStream tampered = r.gas;
    // swap some CO for CO2: carbon still balances, oxygen no longer does
    tampered.z["CO"] -= 0.02;
    tampered.z["CO2"] += 0.02;
    REQUIRE_THROWS_AS(gasifier_exergy_balance(r.feed, r.air, tampered, db()),
                      ModelInconsistencyError);
}

TEST_CASE("stack heat recovery cools the gas to the stack state", "[exergy]") {
    GasStream gas = pure_n2(1073.15, kStandardP0, 0.001);
    HeatRecovery r = stack_heat_recovery(gas, 428.15, db());
    REQUIRE(std::abs(r.Q_kW - 20.07773) < 0.02);
    REQUIRE(r.T_mean_K > 428.15);
    REQUIRE(r.T_mean_K < 1073.15);
    REQUIRE(std::abs(r.T_mean_K - r.Q_kW / r.dS_kW_per_K) < 1e-9);
    REQUIRE(std::abs(r.exergy_kW - (1.0 - 298.15 / r.T_mean_K) * r.Q_kW) < 1e-12);
    REQUIRE(r.exergy_kW > 0.0);
    REQUIRE(r.exergy_kW < r.Q_kW);

    // the heat matches an enthalpy-rate difference across the cooling
    GasStream cooled = gas;
    cooled.T = 428.15;
    double dH = enthalpy_rate(gas, db()) - enthalpy_rate(cooled, db());
    REQUIRE(std::abs(r.Q_kW - dH) < 1e-9 * std::abs(dH));
}

TEST_CASE("stack recovery vanishes when there is nothing to recover", "[exergy]") {
    GasStream gas = pure_n2(428.15, kStandardP0, 0.001);
    HeatRecovery at_stack = stack_heat_recovery(gas, 428.15, db());
    REQUIRE(at_stack.Q_kW == 0.0);
    REQUIRE(at_stack.exergy_kW == 0.0);
    REQUIRE(at_stack.T_mean_K == 428.15);

    GasStream cold = pure_n2(400.0, kStandardP0, 0.001);
    HeatRecovery below = stack_heat_recovery(cold, 428.15, db());
    REQUIRE(below.Q_kW == 0.0);
    REQUIRE(below.exergy_kW == 0.0);

    REQUIRE_THROWS_AS(stack_heat_recovery(gas, 0.0, db()), InvalidInputError);
}

TEST_CASE("efficiency helpers guard their domains", "[exergy]") {
    REQUIRE(energy_efficiency(80.0, 100.0) == 0.8);
    REQUIRE_THROWS_AS(energy_efficiency(80.0, 0.0), InvalidInputError);
    REQUIRE_THROWS_AS(energy_efficiency(80.0, -10.0), InvalidInputError);
    REQUIRE_THROWS_AS(energy_efficiency(-1.0, 100.0), InvalidInputError);
}
