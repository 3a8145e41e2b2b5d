"""Stage sums: canonical ladders, grand-canonical bosons, Morse averages."""

import math

import numpy as np
import pytest

from szilard import (Barrier, BathPair, ChemicalPotentials,
                     ConvergenceViolationError, EnsembleMismatchError, HBAR,
                     Harmonic, K_B, Morse, MuMode, PowerLaw, Stage,
                     TruncationError, TruncationPolicy,
                     canonical_stage_properties, canonical_work_N,
                     chemical_potential, chemical_potentials, internal_energy,
                     level_energy, log_relative_partition, occupancy_total,
                     relative_partition)

MASS = 19.11e-11
OMEGA = 1e11
BATHS = BathPair(hot=200.0, cold=100.0)

# 60-digit canonical work anchors at mass 19.11e-11 kg, omega 1e11 rad/s,
# baths 200/100 K, from the geometric closed form of the stage sums
W_CANONICAL = {1: 5.0338870773722705e-27,
               5: 3.8279618242544581e-21,
               20: 1.8184231095252045e-20}


def _closed_form_work(count, omega, baths):
    """Geometric stage sums of the shared-level harmonic ladder."""
    q = HBAR * omega

    def log_ratio(temperature):
        nb = count / (K_B * temperature)
        # log(S_ins/S_abs) with S_abs = e^{-1.5 n b q}/(1 - e^{-n b q})
        # and S_ins = 2^N e^{-2.5 n b q}/(1 - e^{-2 n b q})
        return (count * math.log(2.0) - nb * q
                + math.log1p(-math.exp(-nb * q))
                - math.log1p(-math.exp(-2.0 * nb * q)))

    return (K_B * baths.hot * log_ratio(baths.hot)
            - K_B * baths.cold * log_ratio(baths.cold))


class TestCanonical:

    def test_stage_sum_matches_geometric_form(self):
        q = HBAR * OMEGA
        for count, temperature in ((2, 100.0), (7, 150.0)):
            nb = count / (K_B * temperature)
            log_a, _ = canonical_stage_properties(
                Harmonic(MASS, OMEGA), Barrier.ABSENT, count, temperature)
            expected = -1.5 * nb * q - math.log1p(-math.exp(-nb * q))
            assert log_a == pytest.approx(expected, rel=1e-12)
            log_b, _ = canonical_stage_properties(
                Harmonic(MASS, OMEGA), Barrier.INSERTED, count, temperature)
            expected = (count * math.log(2.0) - 2.5 * nb * q
                        - math.log1p(-math.exp(-2.0 * nb * q)))
            assert log_b == pytest.approx(expected, rel=1e-12)

    def test_frozen_work_anchors(self):
        trap = Harmonic(MASS, OMEGA)
        # N = 1 sits six orders below the log terms it is assembled from,
        # so cancellation eats about six digits of the double result
        assert canonical_work_N(trap, 1, BATHS) == pytest.approx(
            W_CANONICAL[1], rel=1e-8)
        assert canonical_work_N(trap, 5, BATHS) == pytest.approx(
            W_CANONICAL[5], rel=1e-12)
        assert canonical_work_N(trap, 20, BATHS) == pytest.approx(
            W_CANONICAL[20], rel=1e-12)

    def test_matches_closed_form_across_counts(self):
        trap = Harmonic(MASS, OMEGA)
        for count in (2, 3, 9, 14):
            assert canonical_work_N(trap, count, BATHS) == pytest.approx(
                _closed_form_work(count, OMEGA, BATHS), rel=1e-9)

    def test_low_temperature_work_limit(self):
        """Deep in the quantum regime each particle is worth k dT log 2."""
        omega = 1e10
        t_hot = HBAR * omega / (25.0 * K_B)
        baths = BathPair(hot=t_hot, cold=0.5 * t_hot)
        for count in (1, 4, 9):
            w = canonical_work_N(Harmonic(MASS, omega), count, baths)
            limit = count * K_B * (baths.hot - baths.cold) * math.log(2.0)
            assert w == pytest.approx(limit, rel=1e-12)

    def test_stage_energy_collapses_onto_ground_level(self):
        omega = 1e10
        t = HBAR * omega / (30.0 * K_B)
        _, u = canonical_stage_properties(Harmonic(MASS, omega),
                                          Barrier.ABSENT, 3, t)
        assert u == pytest.approx(3.0 * 1.5 * HBAR * omega, rel=1e-12)

    def test_power_law_route_runs(self):
        trap = PowerLaw(MASS, 1e10, 1.6)
        w = canonical_work_N(trap, 3, BathPair(2.0, 1.0))
        assert math.isfinite(w)

    def test_rejects_morse_and_bad_counts(self):
        well = Morse(mass=MASS, depth=math.inf, omega=1e10)
        with pytest.raises(EnsembleMismatchError):
            canonical_work_N(well, 2, BATHS)
        with pytest.raises(EnsembleMismatchError):
            canonical_work_N(Harmonic(MASS, OMEGA), 0, BATHS)


class TestChemicalPotential:

    def test_closed_form_identities(self):
        trap = Harmonic(MASS, 1e10)
        q = HBAR * 1e10
        for count, temperature in ((10, 0.3), (30, 1.7)):
            kt = K_B * temperature
            pre = chemical_potential(trap, count, temperature, Barrier.ABSENT,
                                     MuMode.CLOSED_FORM)
            post = chemical_potential(trap, count, temperature,
                                      Barrier.INSERTED, MuMode.CLOSED_FORM)
            assert pre == pytest.approx(
                1.5 * q - kt * math.log1p(1.0 / count), rel=1e-14)
            assert post == pytest.approx(
                2.5 * q - kt * math.log1p(2.0 / count), rel=1e-14)

    def test_solved_mode_recovers_occupancy(self):
        trap = Harmonic(MASS, 1e10)
        for count in (5, 20):
            for temperature in (0.1, 1.0, 10.0):
                for barrier in Barrier:
                    mu = chemical_potential(trap, count, temperature, barrier,
                                            MuMode.SOLVED)
                    n = occupancy_total(trap, barrier, mu, temperature)
                    assert n == pytest.approx(count, rel=1e-10)
                    assert mu < level_energy(trap, 1, barrier)

    def test_pair_helper_binds_temperature(self):
        trap = Harmonic(MASS, 1e10)
        pair = chemical_potentials(trap, 10, 0.7, MuMode.SOLVED)
        assert pair.temperature == 0.7
        assert pair.count == 10
        assert pair.mode is MuMode.SOLVED
        assert pair.pre_insertion < pair.post_insertion   # ground levels differ

    def test_modes_agree_at_low_temperature(self):
        """The closed form is the T -> 0 limit of the occupancy constraint,
        so the gap between modes must shrink with T."""
        trap = Harmonic(MASS, 1e10)
        gaps = []
        for temperature in (0.05, 0.2, 0.8):
            closed = chemical_potential(trap, 10, temperature, Barrier.ABSENT,
                                        MuMode.CLOSED_FORM)
            solved = chemical_potential(trap, 10, temperature, Barrier.ABSENT,
                                        MuMode.SOLVED)
            gaps.append(abs(closed - solved))
        assert gaps[0] < gaps[1] < gaps[2]

    def test_occupancy_rejects_morse(self):
        well = Morse(mass=MASS, depth=math.inf, omega=1e10)
        with pytest.raises(EnsembleMismatchError):
            occupancy_total(well, Barrier.ABSENT, -1e-24, 1.0)

    def test_bad_mode_and_count(self):
        trap = Harmonic(MASS, 1e10)
        with pytest.raises(EnsembleMismatchError):
            chemical_potential(trap, 0, 1.0, Barrier.ABSENT, MuMode.SOLVED)
        with pytest.raises(EnsembleMismatchError):
            chemical_potential(trap, 5, 1.0, Barrier.ABSENT, "closed-form")


class TestBoseRatio:

    def test_matches_direct_product(self):
        """Level-by-level product with the squared inserted factor."""
        trap = Harmonic(MASS, 1e10)
        temperature = HBAR * 1e10 / K_B   # beta q = 1
        pair = chemical_potentials(trap, 10, temperature, MuMode.SOLVED)
        beta = 1.0 / (K_B * temperature)
        n = np.arange(1, 90)
        pre = 1.0 - np.exp(-beta * (level_energy(trap, n) - pair.pre_insertion))
        post = 1.0 - np.exp(-beta * (level_energy(trap, 2 * n)
                                     - pair.post_insertion))
        direct = float(np.prod(pre) / np.prod(post**2))
        assert relative_partition(trap, pair, temperature) == pytest.approx(
            direct, rel=1e-10)

    def test_low_temperature_ratio_limit(self):
        # ratio -> (N+2)^2 / (4(N+1)) once only the ground levels matter
        omega = 1e10
        temperature = HBAR * omega / (25.0 * K_B)
        for count in (1, 7, 30):
            pair = chemical_potentials(Harmonic(MASS, omega), count,
                                       temperature, MuMode.CLOSED_FORM)
            z = relative_partition(Harmonic(MASS, omega), pair, temperature)
            limit = (count + 2.0)**2 / (4.0 * (count + 1.0))
            assert z == pytest.approx(limit, rel=1e-9)
            assert z > 1.0

    def test_temperature_binding_enforced(self):
        trap = Harmonic(MASS, 1e10)
        pair = chemical_potentials(trap, 10, 1.0, MuMode.SOLVED)
        with pytest.raises(EnsembleMismatchError):
            log_relative_partition(trap, pair, 2.0)

    def test_mu_above_ground_level_rejected(self):
        trap = Harmonic(MASS, 1e10)
        q = HBAR * 1e10
        bad = ChemicalPotentials(pre_insertion=2.0 * q, post_insertion=2.0 * q,
                                 temperature=1.0, count=10,
                                 mode=MuMode.CLOSED_FORM)
        with pytest.raises(ConvergenceViolationError):
            log_relative_partition(trap, bad, 1.0)

    def test_missing_mu_rejected(self):
        with pytest.raises(EnsembleMismatchError):
            log_relative_partition(Harmonic(MASS, 1e10), None, 1.0)

    def test_morse_route_takes_no_mu(self):
        well = Morse(mass=MASS, depth=math.inf, omega=1e10)
        pair = chemical_potentials(Harmonic(MASS, 1e10), 10, 1.0,
                                   MuMode.CLOSED_FORM)
        with pytest.raises(EnsembleMismatchError):
            log_relative_partition(well, pair, 1.0)


class TestBoseEnergies:

    def test_stage_b_low_temperature_limit(self):
        # U_B -> N k T log(1 + 2/N): one doubly degenerate level holds all N
        omega = 1e10
        t_hot = HBAR * omega / (30.0 * K_B)
        baths = BathPair(hot=t_hot, cold=0.5 * t_hot)
        trap = Harmonic(MASS, omega)
        for count in (4, 12):
            pair = chemical_potentials(trap, count, t_hot, MuMode.CLOSED_FORM)
            u = internal_energy(Stage.B, trap, pair, baths)
            limit = count * K_B * t_hot * math.log1p(2.0 / count)
            assert u == pytest.approx(limit, rel=1e-9)

    def test_against_finite_difference(self):
        """-d log Z / d beta at fixed mu must reproduce the analytic sum."""
        trap = Harmonic(MASS, 1e10)
        temperature = 1.0
        baths = BathPair(hot=temperature, cold=0.5)
        pair = chemical_potentials(trap, 10, temperature, MuMode.SOLVED)
        beta = 1.0 / (K_B * temperature)
        n = np.arange(1, 120000)

        def log_z(b, barrier, mu):
            g = 2.0 if barrier is Barrier.INSERTED else 1.0
            e = level_energy(trap, n, barrier)
            return -g * float(np.sum(np.log1p(-np.exp(-b * (e - mu)))))

        for stage, barrier, mu in ((Stage.A, Barrier.ABSENT,
                                    pair.pre_insertion),
                                   (Stage.B, Barrier.INSERTED,
                                    pair.post_insertion)):
            db = 1e-6 * beta
            fd = -(log_z(beta + db, barrier, mu)
                   - log_z(beta - db, barrier, mu)) / (2.0 * db)
            assert internal_energy(stage, trap, pair, baths) == pytest.approx(
                fd, rel=1e-6)

    def test_temperature_binding_enforced(self):
        trap = Harmonic(MASS, 1e10)
        pair = chemical_potentials(trap, 10, 1.0, MuMode.SOLVED)
        baths = BathPair(hot=2.0, cold=1.0)
        with pytest.raises(EnsembleMismatchError):
            internal_energy(Stage.A, trap, pair, baths)   # hot bath is 2 K
        assert internal_energy(Stage.D, trap, pair, baths) > 0.0


class TestMorseSums:

    # 9-level well: quantum hbar*1e10 J, depth 5.35 quanta
    WELL = Morse(mass=MASS, depth=5.35 * HBAR * 1e10, omega=1e10)

    # 60-digit stage values for that well
    LOG_RATIO_04 = -0.14120924092897630      # log ratio at 0.4 K
    U_REFRIG = {Stage.A: 3.6305107909630756e-24,
                Stage.B: 3.8103285487543242e-24,
                Stage.C: 3.5539685140553920e-24,
                Stage.D: 3.2636549145966963e-24}

    def test_frozen_log_ratio(self):
        assert log_relative_partition(self.WELL, None, 0.4) == pytest.approx(
            self.LOG_RATIO_04, rel=1e-12)

    def test_frozen_stage_energies(self):
        baths = BathPair(hot=0.4, cold=0.2)
        for stage, expected in self.U_REFRIG.items():
            u = internal_energy(stage, self.WELL, None, baths)
            assert u == pytest.approx(expected, rel=1e-12)

    def test_ground_gap_limit(self):
        # Z ratio -> 2 e^{-beta gap} as T -> 0, gap the absent 1 -> 2 spacing
        well = Morse(mass=MASS, depth=8.7 * 1.602176634e-19, omega=1e10)
        gap = level_energy(well, 2) - level_energy(well, 1)
        temperature = gap / (40.0 * K_B)
        z = relative_partition(well, None, temperature)
        assert z * math.exp(gap / (K_B * temperature)) == pytest.approx(
            2.0, rel=1e-12)

    def test_harmonic_limit_closed_form(self):
        # chi = 0: ratio is exactly 2 e^{-beta q}/(1 + e^{-beta q})
        well = Morse(mass=MASS, depth=math.inf, omega=1e10)
        q = HBAR * 1e10
        for temperature in (0.05, 0.4, 3.0):
            x = math.exp(-q / (K_B * temperature))
            assert relative_partition(well, None, temperature) == pytest.approx(
                2.0 * x / (1.0 + x), rel=1e-12)

    def test_inserted_energy_collapses_to_split_ground(self):
        well = Morse(mass=MASS, depth=8.7 * 1.602176634e-19, omega=1e10)
        t = HBAR * 1e10 / (40.0 * K_B)
        baths = BathPair(hot=t, cold=0.5 * t)
        u = internal_energy(Stage.B, well, None, baths)
        assert u == pytest.approx(level_energy(well, 1, Barrier.INSERTED),
                                  rel=1e-12)


class TestTruncation:

    def test_policy_validation(self):
        with pytest.raises(TruncationError):
            TruncationPolicy(rel_tol=0.0)
        with pytest.raises(TruncationError):
            TruncationPolicy(rel_tol=2.0)
        with pytest.raises(TruncationError):
            TruncationPolicy(max_terms=5)

    def test_term_cap_refuses_long_series(self):
        # 10 K at 1e10 rad/s needs thousands of levels
        tight = TruncationPolicy(rel_tol=1e-12, max_terms=50)
        with pytest.raises(TruncationError):
            occupancy_total(Harmonic(MASS, 1e10), Barrier.ABSENT,
                            -1e-22, 10.0, tight)

    def test_headroom_does_not_change_results(self):
        trap = Harmonic(MASS, 1e10)
        loose = TruncationPolicy(rel_tol=1e-12, max_terms=4_000_000)
        assert canonical_work_N(trap, 3, BATHS) == canonical_work_N(
            trap, 3, BATHS, loose)
        pair = chemical_potentials(trap, 10, 1.0, MuMode.SOLVED)
        assert log_relative_partition(trap, pair, 1.0) == \
            log_relative_partition(trap, pair, 1.0, loose)

    def test_bath_validation(self):
        with pytest.raises(EnsembleMismatchError):
            BathPair(hot=0.0, cold=1.0)
        with pytest.raises(EnsembleMismatchError):
            BathPair(hot=1.0, cold=-2.0)
