"""Bipolar value types and the penta-valued decomposition.

A bipolar fuzzy value is a pair (mu, nu) of independent degrees in [0, 1].
Every such pair splits into five nonnegative indexes

    t = (mu - nu)+        truth
    f = (nu - mu)+        falsity
    u = (1 - mu - nu)+    unknownness
    c = (mu + nu - 1)+    contradiction
    i = 1 - |mu - nu| - |mu + nu - 1|    ambiguity

which sum to one, with t*f = 0 and u*c = 0.  The signed coordinates
tau = t - f and omega = c - u satisfy |tau| + |omega| <= 1 and carry all
the information the distance layer needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError

__all__ = [
    "EPSILON",
    "AMBIGUOUS",
    "BipolarValue",
    "CONTRADICTORY",
    "FALSE",
    "PentaValue",
    "TRUE",
    "TauOmega",
    "UNKNOWN",
    "ValueClass",
    "classify",
    "from_penta",
    "from_tau_omega",
    "reduced_penta",
    "to_penta",
    "to_tau_omega",
]

# Tolerance for every structural invariant assertion in the package.
EPSILON = 1e-9


def _pos(a: float) -> float:
    """Positive part max(a, 0), computed without pre-rounding."""
    return a if a > 0.0 else 0.0


def _check_degree(name: str, v: float) -> float:
    if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
        raise ValidationError(f"{name} must be a finite real, got {v!r}")
    if v < 0.0 or v > 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {v}")
    return float(v)


@dataclass(frozen=True)
class BipolarValue:
    """A (membership, non-membership) pair with independent degrees in [0, 1].

    Out-of-range degrees are rejected outright; clamping would mask data
    errors during ingestion.
    """

    mu: float
    nu: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", _check_degree("mu", self.mu))
        object.__setattr__(self, "nu", _check_degree("nu", self.nu))

    @property
    def pi(self) -> float:
        """Uncertainty slack (1 - mu - nu)+; zero beyond the intuitionistic region."""
        return _pos(1.0 - self.mu - self.nu)

    @property
    def kappa(self) -> float:
        """Contradiction overlap (mu + nu - 1)+; zero below the paraconsistent region."""
        return _pos(self.mu + self.nu - 1.0)


# The five landmark values.
TRUE = BipolarValue(1.0, 0.0)
FALSE = BipolarValue(0.0, 1.0)
UNKNOWN = BipolarValue(0.0, 0.0)
CONTRADICTORY = BipolarValue(1.0, 1.0)
AMBIGUOUS = BipolarValue(0.5, 0.5)


@dataclass(frozen=True)
class PentaValue:
    """Five-index decomposition (t, f, u, c, i).

    Construction enforces, each within EPSILON: components in [0, 1],
    t + f + u + c + i = 1, and the exclusivity products t*f = 0, u*c = 0.
    """

    t: float
    f: float
    u: float
    c: float
    i: float

    def __post_init__(self) -> None:
        for name in ("t", "f", "u", "c", "i"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise ValidationError(f"{name} must be a finite real, got {v!r}")
            if v < -EPSILON or v > 1.0 + EPSILON:
                raise ValidationError(f"{name} must lie in [0, 1], got {v}")
            object.__setattr__(self, name, float(v))
        total = self.t + self.f + self.u + self.c + self.i
        if abs(total - 1.0) > EPSILON:
            raise ValidationError(f"index sum must be 1, got {total!r}")
        if self.t * self.f > EPSILON:
            raise ValidationError(f"t and f cannot both be positive (t={self.t}, f={self.f})")
        if self.u * self.c > EPSILON:
            raise ValidationError(f"u and c cannot both be positive (u={self.u}, c={self.c})")


@dataclass(frozen=True)
class TauOmega:
    """Signed coordinates (tau, omega) with |tau| + |omega| <= 1."""

    tau: float
    omega: float

    def __post_init__(self) -> None:
        for name in ("tau", "omega"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise ValidationError(f"{name} must be a finite real, got {v!r}")
            if abs(v) > 1.0 + EPSILON:
                raise ValidationError(f"{name} must lie in [-1, 1], got {v}")
            object.__setattr__(self, name, float(v))
        if abs(self.tau) + abs(self.omega) > 1.0 + EPSILON:
            raise ValidationError(
                f"|tau| + |omega| must not exceed 1, got {abs(self.tau) + abs(self.omega)}"
            )


class ValueClass(Enum):
    FUZZY = "fuzzy"
    INTUITIONISTIC = "intuitionistic"
    PARACONSISTENT = "paraconsistent"
    GENERAL_BIPOLAR = "general"


def to_penta(x: BipolarValue) -> PentaValue:
    """Decompose a bipolar value into its five indexes."""
    mu, nu = x.mu, x.nu
    return PentaValue(
        t=_pos(mu - nu),
        f=_pos(nu - mu),
        u=_pos(1.0 - mu - nu),
        c=_pos(mu + nu - 1.0),
        i=1.0 - abs(mu - nu) - abs(mu + nu - 1.0),
    )


def from_penta(p: PentaValue) -> BipolarValue:
    """Invert the decomposition: mu = t + c + i/2, nu = f + c + i/2.

    PentaValue construction already rejects tuples that violate the
    partition or exclusivity constraints, so this is total.
    """
    half = p.i / 2.0
    return BipolarValue(
        min(max(p.t + p.c + half, 0.0), 1.0),
        min(max(p.f + p.c + half, 0.0), 1.0),
    )


def to_tau_omega(x: BipolarValue) -> TauOmega:
    """Signed truth and neutrality degrees of a bipolar value."""
    p = to_penta(x)
    return TauOmega(tau=p.t - p.f, omega=p.c - p.u)


def from_tau_omega(v: TauOmega) -> PentaValue:
    """Rebuild the five indexes from signed coordinates by sign splitting."""
    return PentaValue(
        t=_pos(v.tau),
        f=_pos(-v.tau),
        u=_pos(-v.omega),
        c=_pos(v.omega),
        i=1.0 - abs(v.tau) - abs(v.omega),
    )


def classify(x: BipolarValue) -> ValueClass:
    """Concrete class of a value.

    The fuzzy band |mu + nu - 1| <= EPSILON takes priority over the weak
    inequalities so that boundary values classify deterministically.
    """
    total = x.mu + x.nu
    if abs(total - 1.0) <= EPSILON:
        return ValueClass.FUZZY
    if total < 1.0:
        return ValueClass.INTUITIONISTIC
    return ValueClass.PARACONSISTENT


def reduced_penta(x: BipolarValue, value_class: ValueClass) -> PentaValue:
    """Class-specialized decomposition; agrees with to_penta on the class domain.

    Raises ValidationError when x does not satisfy the constraint of the
    given class (within EPSILON), or for the general class, which has no
    specialized form.
    """
    mu, nu = x.mu, x.nu
    total = mu + nu
    if value_class is ValueClass.FUZZY:
        if abs(total - 1.0) > EPSILON:
            raise ValidationError(f"value ({mu}, {nu}) is not fuzzy: mu + nu = {total}")
        return PentaValue(
            t=_pos(2.0 * mu - 1.0),
            f=_pos(1.0 - 2.0 * mu),
            u=0.0,
            c=0.0,
            i=1.0 - abs(2.0 * mu - 1.0),
        )
    if value_class is ValueClass.INTUITIONISTIC:
        if total > 1.0 + EPSILON:
            raise ValidationError(f"value ({mu}, {nu}) is not intuitionistic: mu + nu = {total}")
        return PentaValue(
            t=_pos(mu - nu),
            f=_pos(nu - mu),
            u=1.0 - mu - nu,
            c=0.0,
            i=total - abs(mu - nu),
        )
    if value_class is ValueClass.PARACONSISTENT:
        if total < 1.0 - EPSILON:
            raise ValidationError(f"value ({mu}, {nu}) is not paraconsistent: mu + nu = {total}")
        return PentaValue(
            t=_pos(mu - nu),
            f=_pos(nu - mu),
            u=0.0,
            c=total - 1.0,
            i=2.0 - abs(mu - nu) - total,
        )
    raise ValidationError("the general bipolar class has no specialized reduction")
