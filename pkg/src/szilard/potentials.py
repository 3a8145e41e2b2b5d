"""Single-particle energy spectra for the three trap families.

Three potentials are supported: harmonic, power-law |x|^nu with the coupling
fixed to m*omega^2/2, and a Morse well.  Each exists in two configurations:
barrier absent, and barrier fully inserted at the trap centre.  Insertion is
modelled in the idealized infinite-barrier limit: even levels migrate up onto
the next odd level, so the inserted spectrum at index n equals the absent
spectrum at index 2n and every inserted level is doubly degenerate.

Level indices start at n = 1 throughout.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import gammaln

from .constants import HBAR
from .errors import InvalidPotentialError, NoBoundStatesError, SpectrumRangeError

__all__ = [
    "Barrier",
    "Harmonic",
    "PowerLaw",
    "Morse",
    "Spectrum",
    "omega_prefactor",
    "level_energy",
    "morse_bound_count",
]


class Barrier(Enum):
    ABSENT = "absent"
    INSERTED = "inserted"


def _require(cond, exc, msg):
    if not cond:
        raise exc(msg)


@dataclass(frozen=True)
class Harmonic:
    """Harmonic trap: levels (n + 1/2) * hbar * omega, n >= 1."""

    mass: float        # kg
    omega: float       # rad/s

    def __post_init__(self):
        _require(self.mass > 0, InvalidPotentialError, "mass must be positive")
        _require(self.omega > 0, InvalidPotentialError, "omega must be positive")


@dataclass(frozen=True)
class PowerLaw:
    """Power-law trap |x|^exponent with coupling fixed to mass*omega^2/2.

    Levels follow energy_scale * (n + 1/2)**p with p = 2*exponent/(exponent+2),
    where energy_scale is the WKB prefactor returned by omega_prefactor().
    exponent = 2 reduces exactly to the harmonic trap.
    """

    mass: float        # kg
    omega: float       # rad/s
    exponent: float    # dimensionless, > 0

    def __post_init__(self):
        _require(self.mass > 0, InvalidPotentialError, "mass must be positive")
        _require(self.omega > 0, InvalidPotentialError, "omega must be positive")
        _require(self.exponent > 0, InvalidPotentialError,
                 "power-law exponent must be positive")

    @property
    def level_power(self):
        """Exponent p = 2*nu/(nu + 2) applied to (n + 1/2)."""
        return 2.0 * self.exponent / (self.exponent + 2.0)

    @classmethod
    def from_energy_scale(cls, mass, scale, exponent):
        """Build the trap whose omega_prefactor equals `scale` (J).

        Inverts scale = (m/2) * (hbar*G*sqrt(pi)/m)**p * omega**(2-p) for
        omega, with G the gamma-function ratio of the WKB quantisation.
        Sweeps over the energy scale use this so the axis is the level
        prefactor itself rather than the trap frequency.
        """
        _require(scale > 0, InvalidPotentialError, "energy scale must be positive")
        _require(exponent > 0, InvalidPotentialError,
                 "power-law exponent must be positive")
        p = 2.0 * exponent / (exponent + 2.0)
        log_g = gammaln(1.0 / exponent + 1.5) - gammaln(1.0 + 1.0 / exponent)
        log_base = math.log(HBAR) + log_g + 0.5 * math.log(math.pi) - math.log(mass)
        log_omega = (math.log(2.0 * scale / mass) - p * log_base) / (2.0 - p)
        return cls(mass=mass, omega=math.exp(log_omega), exponent=exponent)


@dataclass(frozen=True)
class Morse:
    """Morse well of finite depth.

    Levels: quantum*(n+1/2) - quantum*anharmonicity*(n+1/2)^2 for n up to the
    bound-state count, where quantum = hbar*omega and anharmonicity =
    quantum/(4*depth).  Construct from either the angular frequency or the
    range parameter `steepness` (omega = steepness*sqrt(2*depth/mass)).
    depth = inf is the harmonic limit (anharmonicity 0, unbounded ladder).
    `position` is the well minimum; it never enters any energy.
    """

    mass: float            # kg
    depth: float           # J, may be math.inf
    omega: float = None    # rad/s
    steepness: float = None   # 1/m
    position: float = 0.0     # m

    def __post_init__(self):
        _require(self.mass > 0, InvalidPotentialError, "mass must be positive")
        _require(self.depth > 0, InvalidPotentialError, "depth must be positive")
        if (self.omega is None) == (self.steepness is None):
            raise InvalidPotentialError(
                "give exactly one of omega or steepness")
        if self.omega is None:
            _require(self.steepness > 0, InvalidPotentialError,
                     "steepness must be positive")
            _require(math.isfinite(self.depth), InvalidPotentialError,
                     "steepness form needs a finite depth")
            object.__setattr__(
                self, "omega",
                self.steepness * math.sqrt(2.0 * self.depth / self.mass))
        else:
            _require(self.omega > 0, InvalidPotentialError,
                     "omega must be positive")
            if math.isfinite(self.depth):
                object.__setattr__(
                    self, "steepness",
                    self.omega * math.sqrt(self.mass / (2.0 * self.depth)))
            else:
                object.__setattr__(self, "steepness", 0.0)

    @property
    def quantum(self):
        """Level-spacing scale hbar*omega in J."""
        return HBAR * self.omega

    @property
    def anharmonicity(self):
        return self.quantum / (4.0 * self.depth)

    @classmethod
    def from_anharmonicity(cls, mass, omega, anharmonicity):
        """Build the well with a prescribed anharmonicity at fixed omega."""
        _require(anharmonicity >= 0, InvalidPotentialError,
                 "anharmonicity must be non-negative")
        if anharmonicity == 0.0:
            return cls(mass=mass, depth=math.inf, omega=omega)
        depth = HBAR * omega / (4.0 * anharmonicity)
        return cls(mass=mass, depth=depth, omega=omega)


def omega_prefactor(potential):
    """Level-energy prefactor in J.

    Power-law: the WKB scale
        alpha * [hbar*sqrt(pi/(2*m*alpha)) * G(nu)]**p,
    alpha = m*omega^2/2, G = Gamma(1/nu + 3/2)/Gamma(1 + 1/nu),
    p = 2*nu/(nu+2).  Exactly hbar*omega at nu = 2.
    Harmonic: hbar*omega.
    """
    if isinstance(potential, Harmonic):
        return HBAR * potential.omega
    if not isinstance(potential, PowerLaw):
        raise InvalidPotentialError(
            "omega_prefactor applies to harmonic and power-law traps")
    nu = potential.exponent
    p = potential.level_power
    # log-space: the bracket spans many orders of magnitude at small omega
    log_g = gammaln(1.0 / nu + 1.5) - gammaln(1.0 + 1.0 / nu)
    alpha = 0.5 * potential.mass * potential.omega**2
    log_bracket = (math.log(HBAR)
                   + 0.5 * math.log(math.pi / (2.0 * potential.mass * alpha))
                   + log_g)
    return math.exp(math.log(alpha) + p * log_bracket)


def morse_bound_count(potential):
    """Number of bound levels, floor(2*depth/quantum - 1).

    None for the infinite-depth harmonic limit.  Raises when the well is too
    shallow to hold even one level.
    """
    if not isinstance(potential, Morse):
        raise InvalidPotentialError("bound count applies to Morse wells only")
    if not math.isfinite(potential.depth):
        return None
    count = math.floor(2.0 * potential.depth / potential.quantum - 1.0)
    if count < 1:
        raise NoBoundStatesError(
            f"2*depth/quantum = {2.0 * potential.depth / potential.quantum:.6g}"
            " leaves no bound level")
    return count


def _absent_energy(potential, n):
    """Energy at absolute index n (scalar or array), barrier absent."""
    s = np.asarray(n, dtype=float) + 0.5
    if isinstance(potential, Harmonic):
        e = HBAR * potential.omega * s
    elif isinstance(potential, PowerLaw):
        e = omega_prefactor(potential) * s**potential.level_power
    elif isinstance(potential, Morse):
        q = potential.quantum
        e = q * s - q * potential.anharmonicity * s * s
    else:
        raise InvalidPotentialError(f"unknown potential {potential!r}")
    return e if np.ndim(n) else float(e)


def level_energy(potential, n, barrier=Barrier.ABSENT):
    """Energy of level n (J).  n may be a positive int or an int array.

    With the barrier inserted the level at index n is the absent-barrier level
    at index 2n (doubly degenerate).  Morse indices are checked against the
    bound-state count; a post-barrier request needs 2n within it.
    """
    arr = np.asarray(n)
    if arr.size and arr.min() < 1:
        raise SpectrumRangeError("level indices start at 1")
    idx = 2 * arr if barrier is Barrier.INSERTED else arr
    if isinstance(potential, Morse):
        cap = morse_bound_count(potential)
        if cap is not None and arr.size and idx.max() > cap:
            raise SpectrumRangeError(
                f"index {int(idx.max())} beyond the {cap} bound Morse levels"
                + (" (post-barrier)" if barrier is Barrier.INSERTED else ""))
        e = _absent_energy(potential, idx)
        if arr.size and np.min(e) <= 0.0:
            raise SpectrumRangeError("non-positive Morse level energy")
        return e
    return _absent_energy(potential, idx)


@dataclass(frozen=True)
class Spectrum:
    """One potential in one barrier configuration, enumerable as levels.

    Degeneracy is 1 with the barrier absent and 2 with it inserted, for every
    level.  For a finite Morse well, creating the inserted spectrum with fewer
    than two bound levels raises: the post-barrier ladder would be empty.
    """

    potential: object
    barrier: Barrier = Barrier.ABSENT

    def __post_init__(self):
        if isinstance(self.potential, Morse):
            cap = morse_bound_count(self.potential)   # raises if < 1
            if (self.barrier is Barrier.INSERTED
                    and cap is not None and cap < 2):
                raise SpectrumRangeError(
                    "post-barrier spectrum empty: a single bound level"
                    " cannot be split")

    @property
    def degeneracy(self):
        return 2 if self.barrier is Barrier.INSERTED else 1

    @property
    def cutoff(self):
        """Largest valid index, or None when the ladder is unbounded."""
        if isinstance(self.potential, Morse):
            cap = morse_bound_count(self.potential)
            if cap is not None:
                return cap // 2 if self.barrier is Barrier.INSERTED else cap
        return None

    def energy(self, n):
        return level_energy(self.potential, n, self.barrier)

    def ground_energy(self):
        return self.energy(1)

    def energies(self, count):
        """Energies for n = 1..count as an array."""
        cap = self.cutoff
        if cap is not None:
            count = min(count, cap)
        return self.energy(np.arange(1, count + 1))

    def levels(self, count=None):
        """Iterate (n, energy, degeneracy) for n = 1..count.

        count may be omitted only for bounded (Morse) spectra.
        """
        cap = self.cutoff
        if count is None:
            if cap is None:
                raise SpectrumRangeError(
                    "unbounded spectrum needs an explicit level count")
            count = cap
        e = self.energies(count)
        g = self.degeneracy
        for i, en in enumerate(e, start=1):
            yield i, float(en), g
