"""Closed-form versus solved chemical potentials.

The closed form mu = E_1 - k_B T log(1 + d_1/N) is the T -> 0 limit of the
occupancy constraint; the solved mode finds the exact root at any T.  The
table shows the two agreeing ever more closely as the bath cools, for both
barrier configurations.
"""

from szilard import Harmonic, MuMode, chemical_potentials, occupancy_total
from szilard.potentials import Barrier

MASS = 19.11e-11


def main():
    trap = Harmonic(mass=MASS, omega=1e10)
    count = 20
    print(f"N = {count}, omega = {trap.omega:.3g} rad/s")
    print(f"\n  {'T [K]':>6}  {'mu_pre gap [J]':>14}  {'mu_post gap [J]':>15}"
          f"  {'recovered N':>12}")
    for temperature in (2.0, 1.0, 0.5, 0.2, 0.1, 0.05):
        closed = chemical_potentials(trap, count, temperature,
                                     MuMode.CLOSED_FORM)
        solved = chemical_potentials(trap, count, temperature, MuMode.SOLVED)
        recovered = occupancy_total(trap, Barrier.ABSENT,
                                    solved.pre_insertion, temperature)
        print(f"  {temperature:6.2f}"
              f"  {abs(closed.pre_insertion - solved.pre_insertion):14.4e}"
              f"  {abs(closed.post_insertion - solved.post_insertion):15.4e}"
              f"  {recovered:12.8f}")
    print("\nBoth gaps shrink monotonically with T; the solved root always"
          " reproduces the particle count.")


if __name__ == "__main__":
    main()
