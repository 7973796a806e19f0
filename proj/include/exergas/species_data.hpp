#pragma once

// Bundled default species dataset, generated together with data/species.dat.
// See that file (or the README) for the format description.

namespace exergas {

inline const char* builtin_species_text() {
    return R"DATA(
# exergas bundled species dataset
#
# Ideal-gas properties as two-segment NASA-7 style polynomials with the
# integration constants re-anchored to standard formation enthalpies and
# absolute entropies at 298.15 K (graphite and liquid water included for
# the heterogeneous equilibrium and fuel moisture accounting).
# Chemical exergies follow the standard atmosphere reference environment;
# values for CO, H2, CH4 and graphite are derived element-consistently
# from the reference-species entries.
#
# record:   name formula molar_mass_kg_per_kmol h_f0_kJ_per_mol ex_ch0_kJ_per_mol n_segments
# segment:  T_low_K T_high_K c0 c1 c2 c3 c4 b1 b2        (cp/Ru = c0 + c1*T + ... + c4*T^4)

O2 O2 31.998 0 3.97 2
  200 1000 3.7824563599999999e+00 -2.9967341599999998e-03 9.8473020100000000e-06 -9.6812950900000007e-09 3.2437283700000000e-12 -1.0639435619656508e+03 3.6594939191214806e+00
  1000 3500 3.2825378399999998e+00 1.4830875399999999e-03 -7.5796666899999999e-07 2.0947055499999999e-10 -2.1671779399999999e-14 -1.0884577136689841e+03 5.4550495098957512e+00
N2 N2 28.014 0 0.72 2
  200 1000 3.2986770000000001e+00 1.4082404000000000e-03 -3.9632219999999998e-06 5.6415150000000002e-09 -2.4448539999999999e-12 -1.0210718776868102e+03 3.9632917896089204e+00
  1000 3500 2.9266399999999999e+00 1.4879768000000001e-03 -5.6847600000000001e-07 1.0097038000000000e-10 -6.7533509999999998e-15 -9.2296905248680969e+02 5.9934459847522668e+00
CO2 CO2 44.009 -393.52 19.87 2
  200 1000 2.3567735200000000e+00 8.9845967700000005e-03 -7.1235626899999998e-06 2.4591902199999998e-09 -1.4369954799999999e-13 -4.8376075686288314e+04 9.9023305896678799e+00
  1000 3500 3.8574602900000001e+00 4.4143702599999998e-03 -2.2148140400000001e-06 5.2349018800000005e-10 -4.7208416400000003e-14 -4.8763271969608315e+04 2.2729163782017245e+00
H2O H2O 18.015 -241.82 9.5 2
  200 1000 4.1986405600000003e+00 -2.0364341000000002e-03 6.5204021099999997e-06 -5.4879706200000003e-09 1.7719781700000000e-12 -3.0294789189637639e+04 -8.4693130271447359e-01
  1000 3500 3.0339924900000002e+00 2.1769180400000002e-03 -1.6407251799999999e-07 -9.7041986999999998e-11 1.6820099199999999e-14 -3.0005359524394305e+04 4.9688710316843796e+00
H2O_liq H2O 18.015 -285.83 0.9 1
  273.15 373.15 9.0570122684628327e+00 0.0000000000000000e+00 0.0000000000000000e+00 0.0000000000000000e+00 0.0000000000000000e+00 -3.7079708323310078e+04 -4.3189683988736384e+01
CO CO 28.010 -110.53 275.0996343 2
  200 1000 3.5795334699999999e+00 -6.1035368000000000e-04 1.0168143300000000e-06 9.0700588399999998e-10 -9.0442449900000000e-13 -1.4344901505260605e+04 3.5101749958655333e+00
  1000 3500 2.7151856099999998e+00 2.0625274300000002e-03 -9.9882577100000007e-07 2.3005300800000000e-10 -2.0364771600000000e-14 -1.4152687893073939e+04 7.8204534559741177e+00
H2 H2 2.016 0 236.0908789 2
  200 1000 2.3443311200000001e+00 7.9805207499999992e-03 -1.9478150999999999e-05 2.0157209400000000e-08 -7.3761176100000006e-12 -9.1793517459742986e+02 6.8385234700021158e-01
  1000 3500 3.3372791999999998e+00 -4.9402473099999998e-05 4.9945677799999996e-07 -1.7956639400000001e-10 2.0025537600000000e-14 -9.5015891673409578e+02 -3.2041811825083002e+00
CH4 CH4 16.043 -74.85 831.7197332 2
  200 1000 5.1498761300000000e+00 -1.3670978800000001e-02 4.9180059899999999e-05 -4.8474302600000002e-08 1.6669395599999999e-11 -1.0277267789847039e+04 -4.6545174792624913e+00
  1000 3500 7.4851495000000004e-02 1.3390946700000000e-02 -5.7328580900000000e-06 1.2229253500000000e-09 -1.0181523000000000e-13 -9.4989647296803723e+03 1.8424104286623148e+01
SO2 SO2 64.058 -297.1 313.4 2
  200 1000 2.9114380000000000e+00 8.1030219999999997e-03 -6.9067100000000001e-06 3.3290160000000001e-09 -8.7771210000000000e-13 -3.6908248326751818e+04 1.1129650957309771e+01
  1000 3500 5.2544979999999999e+00 1.9785426000000000e-03 -8.2042260000000005e-07 1.5763830000000001e-10 -1.1204512000000001e-14 -3.7598288186018486e+04 -1.1337994236621114e+00
NO NO 30.006 90.59 88.9 2
  200 1000 4.2184762999999998e+00 -4.6389760000000004e-03 1.1041022000000000e-05 -9.3361354000000002e-09 2.8035769999999999e-12 9.7641078284555006e+03 2.2841507174139011e+00
  1000 3500 3.2606055999999999e+00 1.1911043000000000e-03 -4.2917048000000002e-07 6.9457669000000003e-11 -4.0336098999999997e-15 9.8404597265188331e+03 6.3726080047295532e+00
NO2 NO2 46.005 33.72 55.6 2
  200 1000 3.9440312000000000e+00 -1.5854290000000000e-03 1.6657812000000001e-05 -2.0475426000000000e-08 7.8350563999999999e-12 2.8399573736047923e+03 6.2980064427167797e+00
  1000 3500 4.8847541999999997e+00 2.1723955999999999e-03 -8.2806905999999995e-07 1.5747510000000000e-10 -1.0510895000000001e-14 2.2598372776047936e+03 -1.3140377284312876e-01
C_gr C 12.011 0 410.2825479 2
  200 1000 -3.1087207200000000e-01 4.4035368599999996e-03 1.9039411800000000e-06 -6.3854696599999996e-09 2.9896424799999998e-12 -1.0865079381385254e+02 1.1145935097429600e+00
  1000 3500 1.4557182900000001e+00 1.7170221599999999e-03 -6.9756278600000000e-07 1.3527703199999999e-10 -9.6759065199999997e-15 -6.9513881284318586e+02 -8.5250663401981690e+00

)DATA";
}

}  // namespace exergas
