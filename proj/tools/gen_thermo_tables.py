#!/usr/bin/env python3
"""Offline generator for data/thermo_tables.csv.

Runs chamber (HP) equilibrium with Cantera on the NASA thermodynamic
database for LOX/LH2, LOX/RP-1 and LOX/LCH4 over the bundled grid and
writes c*, the isentropic exponent and the chamber temperature.

Not part of the build. Requires `pip install cantera`.
"""
import csv
import hashlib
import sys

import cantera as ct
import numpy as np

SPECIES = ["H2", "O2", "H2O", "OH", "H", "O", "HO2", "H2O2", "O3",
           "CO", "CO2", "CH4", "HCO", "CH2O", "CH3", "C2H2", "C2H4", "C"]

# Liquid reactant enthalpies of formation at storage temperature [J/mol].
LOX = {"h": -12979.0, "mw": 31.9988, "comp": {"O": 2}}
FUELS = {
    "LH2": {"h": -9012.0, "mw": 2.01588, "comp": {"H": 2}, "rof": (4.0, 7.9)},
    # RP-1 as CH1.9423 (298.15 K)
    "RP1": {"h": -24717.7, "mw": 13.9657, "comp": {"C": 1, "H": 1.9423}, "rof": (1.5, 3.5)},
    "LCH4": {"h": -89233.0, "mw": 16.0425, "comp": {"C": 1, "H": 4}, "rof": (2.0, 4.0)},
}
P_BAR = [20.0 * i for i in range(1, 11)]
N_ROF = 16


def make_gas():
    all_sp = {s.name: s for s in ct.Species.list_from_file("nasa_gas.yaml")}
    species = [all_sp[n] for n in SPECIES if n in all_sp]
    return ct.Solution(thermo="ideal-gas", species=species)


def set_reactants(gas, fuel, rof, p):
    """Set elemental composition and total enthalpy for 1 kg of mixture."""
    m_f = 1.0 / (1.0 + rof)
    m_o = rof / (1.0 + rof)
    n_f = m_f / (fuel["mw"] * 1e-3)
    n_o = m_o / (LOX["mw"] * 1e-3)
    elem = {"C": 0.0, "H": 0.0, "O": 0.0}
    for e, k in fuel["comp"].items():
        elem[e] += k * n_f
    elem["O"] += 2 * n_o
    h = n_f * fuel["h"] + n_o * LOX["h"]  # J per kg mixture
    # seed composition with the right elements: CH4 + H2 + O2 (+CO for C)
    x = {}
    c = elem["C"]
    hyd = elem["H"]
    o = elem["O"]
    if c > 0:
        x["CO"] = c
        o -= c
    x["H2"] = hyd / 2.0
    x["O2"] = o / 2.0
    # secant on temperature with TP equilibria; the frozen seed mixture
    # cannot reach the liquid-reactant enthalpy directly
    def resid(t):
        gas.TPX = t, p, x
        gas.equilibrate("TP")
        return gas.h - h
    t0, t1 = 2500.0, 3500.0
    r0, r1 = resid(t0), resid(t1)
    for _ in range(60):
        t2 = t1 - r1 * (t1 - t0) / (r1 - r0)
        t0, r0 = t1, r1
        t1, r1 = t2, resid(t2)
        if abs(t1 - t0) < 1e-6:
            break


def isentropic_exponent(gas):
    """Equilibrium isentropic exponent (dln p / dln rho)_s."""
    s0, p0 = gas.s, gas.P
    rho0 = gas.density
    dp = 1e-4 * p0
    gas.SP = s0, p0 + dp
    gas.equilibrate("SP")
    rho1 = gas.density
    gas.SP = s0, p0
    gas.equilibrate("SP")
    return np.log((p0 + dp) / p0) / np.log(rho1 / rho0)


def c_star(gas):
    """Shifting-equilibrium throat search: maximise mass flux."""
    h0, s0, p0 = gas.h, gas.s, gas.P
    best = 0.0
    for ratio in np.linspace(0.50, 0.64, 57):
        gas.SP = s0, p0 * ratio
        gas.equilibrate("SP")
        v = np.sqrt(max(2.0 * (h0 - gas.h), 0.0))
        best = max(best, gas.density * v)
    gas.SP = s0, p0
    gas.equilibrate("SP")
    return p0 / best


def main(path):
    gas = make_gas()
    rows = []
    for name, fuel in FUELS.items():
        lo, hi = fuel["rof"]
        for p in P_BAR:
            for rof in np.linspace(lo, hi, N_ROF):
                set_reactants(gas, fuel, rof, p * 1e5)
                tc = gas.T
                gam = isentropic_exponent(gas)
                cs = c_star(gas)
                rows.append((name, p, round(rof, 6), round(cs, 2), round(gam, 5), round(tc, 1)))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["combo", "p_c_bar", "rof", "c_star_mps", "gamma", "t_c_K"])
        w.writerows(rows)
    with open(path, "rb") as fh:
        print(hashlib.sha256(fh.read()).hexdigest())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/thermo_tables.csv")
