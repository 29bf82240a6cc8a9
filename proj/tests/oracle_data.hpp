// Generated by make_oracle.py (mpmath 60-digit reference values). Do not edit.
#pragma once
#include <complex>

namespace oracle {

struct AiryRef {
  std::complex<double> zeta;
  std::complex<double> value;       // Ai(zeta)
  std::complex<double> derivative;  // Ai'(zeta)
  double log_abs;                   // log|Ai(zeta)|
  double arg;                       // principal arg Ai(zeta)
};

inline constexpr AiryRef kAiry[] = {
    // zeta_0
    {{0, 0}, {0.35502805388781722, 0}, {-0.25881940379280682, 0}, -1.0355584675929301, 0},
    // zeta_1
    {{1, 0}, {0.13529241631288141, 0}, {-0.1591474412967932, 0}, -2.0003167962788817, 0},
    // zeta_m1
    {{-1, 0}, {0.53556088329235207, 0}, {-0.01016056711664521, 0}, -0.62444070126693285, 0},
    // zeta_2p3i
    {{2, 3}, {0.0081044578095305353, 0.13117838260456602}, {0.096658179033112898, -0.23198718538548632}, -2.0292923105362091, 1.5090927930315807},
    // zeta_5m2i
    {{5, -2}, {-1.9908316124132523e-05, -0.00016474714063285169}, {0.00011592692492096084, 0.00037387117475476194}, -8.703850184855936, -1.6910548712163347},
    // zeta_7_5_e_ipi4
    {{5.3033008588991066, 5.3033008588991066}, {0.00086737822348967493, -0.00024582533927902596}, {-0.0024673804508271425, -0.00026154701472490678}, -7.0114057100108207, -0.27616977698993816},
    // zeta_8_2_e_mipi3
    {{4.0999999999999996, -7.1014083110323964}, {-0.16323742981457889, -0.033695330837865259}, {0.45478366226568656, -0.14538547858799244}, -1.7916864659284264, -2.9380325261301494},
    // zeta_12p5i
    {{12, 5}, {2.1001897847642028e-13, 7.8727254711601257e-13}, {-1.9520274289588971e-13, -2.9442885933880374e-12}, -27.835828442644132, 1.3100995028252118},
    // zeta_m15p0_5i
    {{-15, 0.5}, {0.98668337396779371, 0.22765781004605093}, {0.87190185661670516, -3.6767812904771229}, 0.012527814292110728, 0.22676194231212068},
    // zeta_25_e_m5ipi6
    {{-21.650635094610966, -12.5}, {-7.405638990526887e+23, -4.8667952245474307e+24}, {2.4432458327643031e+25, 2.6827561500628903e+24}, 56.855923230270257, -1.7218045657257031},
    // zeta_30_e_ipi099
    {{-29.985196810971946, 0.94232277234384965}, {-5.3940872221634208, 20.293617987000637}, {111.5607921620629, 27.960963043143728}, 3.0444397868593263, 1.8305914203677778},
    // zeta_m10
    {{-10, 0}, {0.04024123848644319, 0}, {0.99626504413279005, 0}, -3.2128629761681675, 0},
};

// Ai(0) and Ai'(0) split into double-double (hi, lo) parts.
inline constexpr double kA0Hi = 0.35502805388781722;
inline constexpr double kA0Lo = 2.0523363243621199e-17;
inline constexpr double kA1Hi = -0.25881940379280682;
inline constexpr double kA1Lo = 2.5222431116108321e-17;

}  // namespace oracle
