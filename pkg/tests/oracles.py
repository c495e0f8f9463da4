"""Reference values frozen from an independent 30-digit evaluation
(mpmath: zeta, gamma, lerchphi, polylog), rounded to 17 digits.

The package under test never imports mpmath, so these are independent of
the implementation.  Tests that need fresh values at random points call
mpmath directly.
"""

import math

ORACLE = {
    "zeta_2": 1.6449340668482264,
    "zeta_3": 1.2020569031595943,
    "zeta_half": -1.4603545088095868,
    "zeta_crit": complex(1.7674298413849039e-8, -1.1102028930923117e-7),
    "zeta_07_3i": complex(0.57125187243516475, -0.092322873907149788),
    "zeta_1_5i": complex(0.76021763340346502, 0.17854887325572433),
    "gamma_2_i": complex(0.65296549642016673, 0.34306583981654536),
    "gamma_03_m7i": complex(2.8487579955011351e-5, -7.7289635745084297e-7),
    "gamma_m2_5": -0.94530872048294188,
    "li2_half": 0.58224052646501251,
    "lerch_half_2_1": 1.164481052930025,
    # Phi(0.5+0.3i, 1.5+2i, 0.7), Phi(-0.97, 0.3+5i, 1.2), Phi(0.99, 0.5+i, 2), Phi(0.98i, 2.5, 0.5)
    "lerch_c1": complex(1.5958934793906713, 0.88889840762923373),
    "lerch_c2": complex(1.3487261825659012, -0.85879753691515117),
    "lerch_c3": complex(-5.5038777518444661, 1.8221453088086549),
    "lerch_c4": complex(5.5755300535341568, 0.32356790996338915),
    "hz_3_half": 8.41439832211716,
    "hz_2p5i_1p5": complex(-0.15973893527903153, -0.28449196645027963),
    # Theta_1(2; 0.5), Theta_{0.5}(0.4+3i; 1.5)
    "efd_2_05_1": 0.073313379717752172,
    "efd_c": complex(0.043729209649862963, -0.076495289638539652),
    # Psi_0(2; 1) = Li_2(1/e), Psi_{2.5}(0.6-2i; 0.3)
    "ebe_2_1_0": 0.40875428734889627,
    "ebe_c": complex(-0.36218129313937965, -0.022158795271936198),
    "fd_3_0": 0.90154267736969571,
    "fd_2_mu1": 1.8062860704447743,
    "fd_c_mu2": complex(2.8447526098321021, 1.449592868488801),
    "be_1_m1": 0.45867514538708189,
    # 2 pi Gamma(2 sigma) [zeta(2 sigma - 1) - zeta(2 sigma)]
    "parseval_zeta_125": 10.615082610562707,
    "parseval_zeta_15": 5.5653585755475644,
    "parseval_zeta_2": 4.51385299591942,
    # 2 pi Gamma(2) [3 Theta_2(2; 0.5) - Theta_2(1; 0.5)]
    "parseval_efd": 0.028170012096590133,
    "gamma_zeta_parseval": 2.5391219302931428,
    "strip_integral": -2.6265178134574736,
}

E = math.e
SQRT_2PI = math.sqrt(2 * math.pi)
