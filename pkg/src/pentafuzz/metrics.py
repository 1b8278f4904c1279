"""Bounded-interval metric and the bipolar pseudo-distances and similarities.

The interval metric rescales |x - y| by how far the pair sits from the
interval's midpoint, so equal gaps count for less near the endpoints.
Applied on [-1, 1] to the signed coordinates tau and omega it yields two
partial distances, combined three ways: Hamming-style (joint quotient),
Euclid-style (root of squares), and probabilistic-sum style.  All three
take values in [0, 1] and collapse to the same fuzzy-line formula when
nu = 1 - mu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .algebra import BipolarFuzzySet, check_same_universe
from .errors import ValidationError
from .kernel import BipolarValue, TauOmega, to_tau_omega

__all__ = [
    "Aggregation",
    "DistanceKind",
    "Interval",
    "bipolar_distance",
    "bipolar_similarity",
    "fuzzy_distance",
    "interval_distance",
    "omega_distance",
    "pairwise_matrix",
    "set_distance",
    "tau_distance",
]


@dataclass(frozen=True)
class Interval:
    """A nondegenerate closed interval [a, b] with a < b."""

    a: float
    b: float

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
                raise ValidationError(f"{name} must be a finite real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.a >= self.b:
            raise ValidationError(f"degenerate interval [{self.a}, {self.b}]")


class DistanceKind(Enum):
    PSEUDO_HAMMING = "ph"
    PSEUDO_EUCLID = "pe"
    PSEUDO_PROB = "pp"


class Aggregation(Enum):
    MEAN = "mean"
    MAX = "max"


def interval_distance(iv: Interval, x: float, y: float) -> float:
    """Midpoint-weighted distance on [a, b]; a true metric with range [0, 1].

    Unlike the plain gap |x - y|, which cannot tell the pairs apart, the
    weighting makes a gap near an endpoint smaller than the same gap at
    the center:

    >>> iv = Interval(0.0, 1.0)
    >>> round(abs(0.0 - 0.2), 12) == round(abs(0.4 - 0.6), 12)
    True
    >>> interval_distance(iv, 0.0, 0.2)
    0.2
    >>> round(interval_distance(iv, 0.4, 0.6), 12)
    0.333333333333
    >>> interval_distance(iv, 0.0, 0.2) < interval_distance(iv, 0.4, 0.6)
    True
    """
    if not (iv.a <= x <= iv.b):
        raise ValidationError(f"x={x} outside [{iv.a}, {iv.b}]")
    if not (iv.a <= y <= iv.b):
        raise ValidationError(f"y={y} outside [{iv.a}, {iv.b}]")
    mid = (iv.a + iv.b) / 2.0
    half = (iv.b - iv.a) / 2.0
    return abs(x - y) / (half + max(abs(x - mid), abs(y - mid)))


def _signed_unit_distance(p: float, q: float) -> float:
    # interval_distance specialized to [-1, 1]
    return abs(p - q) / (1.0 + max(abs(p), abs(q)))


def tau_distance(v1: TauOmega, v2: TauOmega) -> float:
    """Partial distance along the signed truth axis."""
    return _signed_unit_distance(v1.tau, v2.tau)


def omega_distance(v1: TauOmega, v2: TauOmega) -> float:
    """Partial distance along the signed neutrality axis."""
    return _signed_unit_distance(v1.omega, v2.omega)


def _combine(kind: DistanceKind, w1: TauOmega, w2: TauOmega) -> float:
    if kind is DistanceKind.PSEUDO_HAMMING:
        num = abs(w1.tau - w2.tau) + abs(w1.omega - w2.omega)
        den = 1.0 + max(abs(w1.tau), abs(w2.tau)) + max(abs(w1.omega), abs(w2.omega))
        return num / den
    dt = _signed_unit_distance(w1.tau, w2.tau)
    dw = _signed_unit_distance(w1.omega, w2.omega)
    if kind is DistanceKind.PSEUDO_EUCLID:
        return math.sqrt(dt * dt + dw * dw)
    if kind is DistanceKind.PSEUDO_PROB:
        return dt + dw - dt * dw
    raise ValidationError(f"unknown distance kind {kind!r}")


def bipolar_distance(kind: DistanceKind, x1: BipolarValue, x2: BipolarValue) -> float:
    """Combined distance between two bipolar values, in [0, 1]."""
    return _combine(kind, to_tau_omega(x1), to_tau_omega(x2))


def bipolar_similarity(kind: DistanceKind, x1: BipolarValue, x2: BipolarValue) -> float:
    """Similarity as the standard negation of the distance."""
    return 1.0 - bipolar_distance(kind, x1, x2)


def fuzzy_distance(mu1: float, mu2: float) -> float:
    """Distance between fuzzy degrees; the common collapse of all three kinds.

    Algebraically equal to interval_distance on [0, 1].
    """
    for name, v in (("mu1", mu1), ("mu2", mu2)):
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise ValidationError(f"{name} must be a finite real, got {v!r}")
        if v < 0.0 or v > 1.0:
            raise ValidationError(f"{name} must lie in [0, 1], got {v}")
    return 2.0 * abs(mu1 - mu2) / (1.0 + max(abs(2.0 * mu1 - 1.0), abs(2.0 * mu2 - 1.0)))


def set_distance(
    kind: DistanceKind,
    a: BipolarFuzzySet,
    b: BipolarFuzzySet,
    aggregation: Aggregation = Aggregation.MEAN,
) -> float:
    """Aggregate elementwise distances over a shared, nonempty universe."""
    check_same_universe(a, b)
    if len(a) == 0:
        raise ValidationError("set distance over an empty universe is undefined")
    values = [bipolar_distance(kind, val, b.value(eid)) for eid, val in a]
    if aggregation is Aggregation.MEAN:
        return sum(values) / len(values)
    if aggregation is Aggregation.MAX:
        return max(values)
    raise ValidationError(f"unknown aggregation {aggregation!r}")


def pairwise_matrix(
    kind: DistanceKind,
    s: BipolarFuzzySet,
    similarity: bool = True,
) -> tuple[tuple[str, str, float], ...]:
    """Lower-triangular pairwise matrix without the diagonal.

    Rows follow universe order: for elements e0, e1, ... the entries are
    (e1, e0), (e2, e0), (e2, e1), ...
    """
    items = s.items()
    rows: list[tuple[str, str, float]] = []
    for j in range(1, len(items)):
        for k in range(j):
            d = bipolar_distance(kind, items[j][1], items[k][1])
            rows.append((items[j][0], items[k][0], 1.0 - d if similarity else d))
    return tuple(rows)
