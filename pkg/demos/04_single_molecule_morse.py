"""A single molecule in a Morse well as the working medium.

Well depth controls the anharmonicity: shallower wells distort the ladder
and bleed work out of the cycle, the infinite-depth limit recovers the
harmonic result.  The last column shows the alternative no-logarithm
efficiency denominator selected by literal_denominator (the CLI flag
--eq38-literal), which understates the efficiency.
"""

import math

from szilard import BathPair, Ensemble, Morse, run_cycle

MASS = 1.1 * 1.66053906660e-27      # kg, a light diatomic
EV = 1.602176634e-19


def main():
    baths = BathPair(hot=4.0, cold=2.0)
    omega = 2e11
    print(f"omega = {omega:.3g} rad/s, baths {baths.hot:g} K /"
          f" {baths.cold:g} K")
    print(f"\n  {'depth':>8}  {'anharm.':>9}  {'W [J]':>13}"
          f"  {'efficiency':>10}  {'literal':>10}")
    for depth in (2.0 * EV, 4.7 * EV, 8.7 * EV, math.inf):
        well = Morse(mass=MASS, depth=depth, omega=omega)
        r = run_cycle(well, Ensemble.MORSE_SINGLE, 1, baths)
        lit = run_cycle(well, Ensemble.MORSE_SINGLE, 1, baths,
                        literal_denominator=True)
        label = "inf" if math.isinf(depth) else f"{depth / EV:.1f} eV"
        eff = f"{r.efficiency:10.6f}" if r.efficiency is not None else "      none"
        leff = (f"{lit.efficiency:10.6f}"
                if lit.efficiency is not None else "      none")
        print(f"  {label:>8}  {well.anharmonicity:9.2e}  {r.work:13.6e}"
              f"  {eff}  {leff}")
    print("\nWork and the standard efficiency barely move with depth here;"
          " the literal denominator variant sits lower throughout.")


if __name__ == "__main__":
    main()
