"""Dimension rules for line bundles on a smooth projective curve.

Three classical facts drive everything here:

* the Euler characteristic ``h0 - h1 = d - g + 1`` for a line bundle of
  degree ``d`` on a curve of genus ``g``,
* Serre duality, which identifies ``h1`` of degree ``d`` with ``h0`` of the
  dual twist of degree ``2g - 2 - d``,
* vanishing of ``h1`` once ``d > 2g - 2`` (equivalently of ``h0`` once
  ``d < 0``).

Degrees in the middle range ``0 <= d <= 2g - 2`` are not determined by
``(g, d)`` alone. Rather than guess, :func:`h0_h1` returns an interval
there, carrying the exact Euler characteristic. The only middle-range
bundles with pinned dimensions are the ones the caller declares: the
structure sheaf, a known-nontrivial degree-zero bundle, or the canonical
bundle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .dims import Dim


class Triviality(enum.Enum):
    """What the caller knows about a bundle beyond its degree.

    ``TRIVIAL`` and ``CANONICAL`` pin the bundle completely in the two
    degree slots where genus and degree alone cannot (0 and ``2g - 2``).
    ``NONTRIVIAL_DEGREE_ZERO`` asserts the bundle has no sections despite
    degree zero. ``GENERIC`` claims nothing.
    """

    TRIVIAL = "trivial"
    NONTRIVIAL_DEGREE_ZERO = "nontrivial-degree-zero"
    GENERIC = "generic"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class Curve:
    """A smooth projective curve, known only through its genus."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")


@dataclass(frozen=True)
class CurveLineBundle:
    curve: Curve
    degree: int
    triviality: Triviality = Triviality.GENERIC

    def __post_init__(self):
        g, d, t = self.curve.genus, self.degree, self.triviality
        if t is Triviality.TRIVIAL and d != 0:
            raise ValueError("a trivial bundle has degree 0")
        if t is Triviality.NONTRIVIAL_DEGREE_ZERO:
            if d != 0:
                raise ValueError("the nontrivial-degree-zero flag requires degree 0")
            if g == 0:
                raise ValueError("genus 0 admits no nontrivial degree-zero bundle")
        if t is Triviality.CANONICAL and d != 2 * g - 2:
            raise ValueError(f"the canonical bundle on genus {g} has degree {2 * g - 2}")


def euler_characteristic(bundle: CurveLineBundle) -> int:
    """h0 - h1, which depends on (genus, degree) only."""
    return bundle.degree - bundle.curve.genus + 1


def canonical_degree(curve: Curve) -> int:
    return 2 * curve.genus - 2


def serre_dual_degree(bundle: CurveLineBundle) -> int:
    """Degree of the twist whose h0 equals h1 of this bundle."""
    return canonical_degree(bundle.curve) - bundle.degree


def h1_vanishes(bundle: CurveLineBundle) -> bool:
    """Sufficient vanishing test: degree above the canonical degree.

    ``False`` means "not guaranteed by this test", not "nonzero".
    """
    return bundle.degree > canonical_degree(bundle.curve)


def h0_h1(bundle: CurveLineBundle) -> tuple[Dim, Dim]:
    """Dimensions of the two cohomology groups of a line bundle.

    The rule cascade, in order:

    1. ``d < 0``: no sections, and ``h1 = g - 1 - d`` by duality.
    2. ``d > 2g - 2``: ``h1 = 0`` and ``h0`` equals the Euler characteristic.
    3. canonical bundle: ``(g, 1)``.
    4. structure sheaf: ``(1, g)``.
    5. known-nontrivial degree zero: ``(0, g - 1)``.
    6. otherwise (middle range, generic): both values are intervals tied
       together by the exact Euler characteristic; ``h0`` is bounded above
       by ``d + 1``, the weakest bound valid for every line bundle.

    For genus 0 the first two rules cover every degree, reproducing the
    familiar closed form ``h0 = k + 1`` for ``k >= 0`` and
    ``h1 = -k - 1`` for ``k <= -2``.
    """
    g = bundle.curve.genus
    d = bundle.degree
    chi = d - g + 1
    if d < 0:
        return Dim.exact(0), Dim.exact(g - 1 - d)
    if d > 2 * g - 2:
        return Dim.exact(chi), Dim.exact(0)
    if bundle.triviality is Triviality.CANONICAL:
        return Dim.exact(g), Dim.exact(1)
    if d == 0 and bundle.triviality is Triviality.TRIVIAL:
        return Dim.exact(1), Dim.exact(g)
    if d == 0 and bundle.triviality is Triviality.NONTRIVIAL_DEGREE_ZERO:
        return Dim.exact(0), Dim.exact(g - 1)
    h0 = Dim.bounded(max(0, chi), d + 1, chi=chi)
    h1 = Dim.bounded(max(0, -chi), d + 1 - chi, chi=chi)
    return h0, h1
