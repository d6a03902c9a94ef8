#!/usr/bin/env python3
"""High-precision reference values for the test suites.

Recomputes, at 50+ digit working precision, every numeric constant that
the C++ tests pin as a frozen literal. Run it whenever a frozen value
looks suspicious; it has no runtime role.

    python3 tools/highprec_reference.py
"""

import mpmath as mp

mp.mp.dps = 60


def kummer_series(a, b, z, dps_target=50):
    """1F1(a;b;z) by the raw Taylor series, summed until stagnation."""
    with mp.workdps(dps_target + 30):
        term = mp.mpc(1)
        total = mp.mpc(0)
        for j in range(100000):
            total += term
            term = term * (a + j) * z / ((b + j) * (j + 1))
            if abs(term) < mp.mpf(10) ** (-(dps_target + 10)) * max(abs(total), 1):
                break
        else:
            raise RuntimeError("series did not stagnate")
        return +total


def show(label, value):
    if isinstance(value, mp.mpc):
        print(f"{label:44s} re={mp.nstr(value.real, 20)}  im={mp.nstr(value.imag, 20)}")
    else:
        print(f"{label:44s} {mp.nstr(value, 20)}")


def main():
    # --- complex log-gamma -------------------------------------------------
    show("loggamma(1+1i)", mp.loggamma(mp.mpc(1, 1)))
    show("loggamma(5)", mp.loggamma(5))
    show("loggamma(0.5)", mp.loggamma(mp.mpf("0.5")))

    # --- Kummer 1F1 with complex parameters --------------------------------
    a = mp.mpc("2.5", "-1")
    b = mp.mpc("-3.2", "0.5")
    z = mp.mpc(1, 1)
    series = kummer_series(a, b, z)
    lib = mp.hyp1f1(a, b, z)
    assert abs(series - lib) < mp.mpf("1e-45") * abs(lib)
    show("1F1(2.5-1i; -3.2+0.5i; 1+1i)", series)

    show("1F1(1;1;0.7+0.2i) = exp(z)", mp.exp(mp.mpc("0.7", "0.2")))

    # --- associated Laguerre, raw prefactor at x = 0 ------------------------
    n = mp.mpc("4.9", "-0.3")
    m = mp.mpc("-10.8", "0")
    pref = mp.exp(mp.loggamma(n + m + 1) - mp.loggamma(m + 1) - mp.loggamma(n + 1))
    show("Gamma(n+m+1)/(Gamma(m+1)Gamma(n+1))", pref)
    show("L_2^0(1)", mp.laguerre(2, 0, 1))

    # --- sigma for an SI electron at 800 nm (CODATA-2018) -------------------
    m_e = mp.mpf("9.1093837015e-31")
    c = mp.mpf("299792458")
    hbar = mp.mpf("1.054571817e-34")
    lam = mp.mpf("800e-9")
    sigma = m_e * c * lam / (2 * mp.pi * hbar)
    show("sigma(electron, 800 nm)", sigma)

    # --- exact wavefunction, normalized ------------------------------------
    # sigma=5, kappa=(0.3,0.2,0.4), a=0.05, point (xi,ups,zeta,tau)=(0.1,0.2,0.3,0.4)
    sig = mp.mpf(5)
    kx, ky, kz = mp.mpf("0.3"), mp.mpf("0.2"), mp.mpf("0.4")
    afield = mp.mpf("0.05")
    xi, ups, zeta, tau = mp.mpf("0.1"), mp.mpf("0.2"), mp.mpf("0.3"), mp.mpf("0.4")

    nn = sig - mp.mpf("0.5") + kz - mp.mpc(0, 1) * kx
    mm = -2 * kz - 2 * sig
    e_hat = (kx**2 + ky**2 + kz**2) / (2 * sig)
    u = mp.exp(mp.mpc(0, 1) * (zeta - tau))
    phase = mp.exp(
        mp.mpc(0, -1) * (e_hat * tau + kx * xi + ky * ups + kz * zeta)
        - mp.mpc(0, 1) * afield * u
    )
    lag_norm = kummer_series(-nn, mm + 1, 2 * mp.mpc(0, 1) * afield * u)
    show("psi_hat_exact normalized (reference pt)", phase * lag_norm)

    # --- order-2 perturbative wavefunction at a=0.02, same sigma/kappa ------
    a2 = mp.mpf("0.02")
    c1 = 2 * kx / (2 * kz + 2 * sig - 1)
    c2 = (2 * kz + 4 * kx**2 + 2 * sig - 1) / (
        4 * (sig - 1 + kz) * (2 * kz + 2 * sig - 1)
    )
    show("c1_hat (sigma=5, kappa=(.3,.2,.4))", c1)
    show("c2_hat (sigma=5, kappa=(.3,.2,.4))", c2)
    psi_p = mp.exp(mp.mpc(0, -1) * (kx * xi + ky * ups)) * (
        mp.exp(mp.mpc(0, -1) * (kz * zeta + e_hat * tau))
        + a2 * c1 * mp.exp(mp.mpc(0, -1) * ((kz - 1) * zeta + (e_hat + 1) * tau))
        + a2**2 * c2 * mp.exp(mp.mpc(0, -1) * ((kz - 2) * zeta + (e_hat + 2) * tau))
    )
    show("psi_perturbative order 2 (a=0.02)", psi_p)


if __name__ == "__main__":
    main()
