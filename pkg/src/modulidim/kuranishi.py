"""Dimension bookkeeping for deformations of unstable rank-2 bundles.

Around a split bundle ``E = L + L^-1`` on a product of curves, the tangent
space to the moduli decomposes into a direction of unstable deformations
``t_u``, a direction fixed by the topology ``t_o``, and a direction of
stable deformations ``t_s``. The quadratic part of the deformation map has
three components; the third one controls whether the unstable directions
can be removed without changing low-degree homology.

The decisive quantity is the margin: the codimension in which the unstable
directions sit, minus the number of local defining equations. Both sides
may individually be indeterminate (they involve middle-range section
counts), but their difference is an exact multiple of an Euler
characteristic and is always computed exactly. A removal theorem then
preserves homology in degrees below codimension minus equations, so a
margin exceeding ``c2`` is the sufficient condition the aggregate report
checks.

Nonfiltrable bundles (extensions of a rank-1 torsion-free sheaf with
point-supported cokernel of length ``l``) reduce to the split case: the
point-supported directions are killed under the pairing
(:func:`modulidim.skyscraper.killed_pairings_check`), the margin is
unchanged, and only the tangent dimensions and ``c2`` shift by ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .curves import CurveLineBundle, Triviality, euler_characteristic, h0_h1
from .dims import Dim
from .skyscraper import (
    KilledPairingsVerdict,
    SkyscraperQuotient,
    ext1_FF_decomposition,
    killed_pairings_check,
)
from .surface import (
    BidegreeBundle,
    Polarization,
    PreconditionError,
    ProductSurface,
    degree_wrt,
    is_destabilizing,
    kunneth_h,
    twist,
)


@dataclass(frozen=True)
class SplitStratum:
    """Deformations of ``L + L^-1`` with ``L`` of bidegree ``(m, n)``.

    The bidegree must have nonnegative degree against the polarization,
    since the stratum describes unstable deformations.
    """

    surface: ProductSurface
    m: int
    n: int
    polarization: Polarization

    def __post_init__(self):
        if not is_destabilizing((self.m, self.n), self.polarization):
            raise PreconditionError(
                f"bidegree ({self.m}, {self.n}) has negative degree against "
                f"{self.polarization} and destabilizes nothing"
            )

    def sub_bundle(self) -> BidegreeBundle:
        return BidegreeBundle.of_type(self.surface, self.m, self.n)


@dataclass(frozen=True)
class NonfiltrableStratum:
    """Extensions of a rank-1 torsion-free sheaf by the destabilizing bundle.

    ``q_length`` is the total length of the point-supported quotient; zero
    recovers the split stratum.
    """

    split: SplitStratum
    q_length: int = 0

    def __post_init__(self):
        if self.q_length < 0:
            raise PreconditionError("q_length must be >= 0")


@dataclass(frozen=True)
class KuranishiReport:
    """Per-component dimension ledger for one unstable stratum."""

    g1: int
    g2: int
    m: int
    n: int
    alpha: int
    beta: int
    q_length: int
    t_u: Dim
    t_o: Dim
    t_s: Dim
    comp_i_target: Dim
    comp_ii_target: Dim
    comp_iii_target: Dim
    codim: Dim
    equations: Dim
    nu1: int
    nu1_stated: int
    chi2: int
    margin: int
    margin_stated: int
    c2: int
    margin_exceeds_c2: bool
    margin_established: bool
    t_u_established: bool
    unavoidable_equations: int
    pairing_reduction: KilledPairingsVerdict

    @property
    def kind(self) -> str:
        return "split" if self.q_length == 0 else "nonfiltrable"


@dataclass(frozen=True)
class StratumOutcome:
    """One stratum inside an aggregate comparison report."""

    m: int
    n: int
    q_length: int
    orientation: str
    report: KuranishiReport

    @property
    def margin(self) -> int:
        return self.report.margin

    @property
    def established(self) -> bool:
        return self.report.margin_established


@dataclass(frozen=True)
class ComparisonReport:
    """Aggregate margin check over all enumerated unstable strata."""

    surface: ProductSurface
    polarization: Polarization
    c2: int
    bound: int
    strata: tuple[StratumOutcome, ...]
    excluded: tuple[dict, ...]
    not_established: tuple[dict, ...]
    min_margin: int | None
    verdict: str


def tangent_dims_split(stratum: SplitStratum) -> tuple[Dim, Dim, Dim]:
    """(t_u, t_o, t_s): first cohomology of the square, the structure sheaf
    (counted once per summand direction), and the inverse square."""
    sub = stratum.sub_bundle()
    t_u = kunneth_h(1, twist(sub, 2))
    t_o = kunneth_h(1, BidegreeBundle.structure_sheaf(stratum.surface))
    t_s = kunneth_h(1, twist(sub, -2))
    return t_u, t_o, t_s


def toy_domain_dim(m: int, n: int) -> int:
    """Dimension of the quadratic-map domain for the split bundle on a
    product of two lines: ``-8mn - 2``.

    Cross-checked internally against the two-term convolution
    ``(2m+1)(-2n-1) + (2m-1)(-2n+1)``.
    """
    _require_mixed(m, n)
    value = -8 * m * n - 2
    assert value == (2 * m + 1) * (-2 * n - 1) + (2 * m - 1) * (-2 * n + 1)
    return value


def toy_unstable_codim(m: int, n: int) -> int:
    """Codimension of the unstable stratum on a product of two lines."""
    _require_mixed(m, n)
    return -4 * m * n - 1


def _require_mixed(m: int, n: int):
    if not (m > 0 and n < 0):
        raise PreconditionError(f"need m > 0 and n < 0, got ({m}, {n})")


def component_report(stratum: SplitStratum) -> KuranishiReport:
    """Full dimension ledger around a split bundle.

    Requires ``m >= 1`` so the first-factor section count of the inverse
    square vanishes and its h1, the multiplier ``nu1``, is exact. The margin
    is exact unconditionally; it is only meaningful (established) when the
    Euler characteristic of the second-factor inverse square is positive.
    """
    if stratum.m < 1:
        raise PreconditionError(f"the ledger requires m >= 1, got m = {stratum.m}")
    surface = stratum.surface
    g1, g2 = surface.genera
    m, n = stratum.m, stratum.n
    sub = stratum.sub_bundle()

    t_u, t_o, t_s = tangent_dims_split(stratum)
    assert t_o == Dim.exact(g1 + g2)

    factor1_inv2 = CurveLineBundle(surface.curve1, -2 * m, Triviality.GENERIC)
    factor2_inv2 = CurveLineBundle(surface.curve2, -2 * n, Triviality.GENERIC)
    h0_1, h1_1 = h0_h1(factor1_inv2)
    h0_2, h1_2 = h0_h1(factor2_inv2)
    assert h0_1 == Dim.exact(0)
    nu1 = 2 * m + g1 - 1
    assert h1_1 == Dim.exact(nu1)
    chi2 = euler_characteristic(factor2_inv2)
    assert chi2 == -2 * n - g2 + 1

    margin = nu1 * chi2
    c2 = -2 * m * n
    return KuranishiReport(
        g1=g1,
        g2=g2,
        m=m,
        n=n,
        alpha=stratum.polarization.alpha,
        beta=stratum.polarization.beta,
        q_length=0,
        t_u=t_u,
        t_o=t_o,
        t_s=t_s,
        comp_i_target=kunneth_h(2, twist(sub, 2)),
        comp_ii_target=kunneth_h(2, BidegreeBundle.structure_sheaf(surface)),
        comp_iii_target=kunneth_h(2, twist(sub, -2)),
        codim=nu1 * h0_2,
        equations=nu1 * h1_2,
        nu1=nu1,
        nu1_stated=2 * m - g1 + 1,
        chi2=chi2,
        margin=margin,
        margin_stated=(2 * m - g1 + 1) * chi2,
        c2=c2,
        margin_exceeds_c2=margin > c2,
        margin_established=chi2 > 0,
        t_u_established=True,
        unavoidable_equations=g1 * g2,
        pairing_reduction=killed_pairings_check(SkyscraperQuotient()),
    )


def nonfiltrable_report(stratum: NonfiltrableStratum) -> KuranishiReport:
    """Dimension ledger around a nonfiltrable bundle.

    The margin data is inherited from the underlying split stratum; the
    tangent dimensions shift by the quotient length and ``c2`` grows by it.
    The shifted ``t_u`` count is exact only when the second cohomology of
    the square vanishes; otherwise the report carries the honest interval
    from the connecting sequence and flags the formula as not established.
    """
    base = component_report(stratum.split)
    l = stratum.q_length
    if l == 0:
        return base

    quotient = SkyscraperQuotient.of_length(l)
    gamma_part, h1_part = ext1_FF_decomposition(quotient, base.g1 + base.g2)
    t_o = Dim.exact(h1_part + gamma_part)
    t_s = Dim.exact(l) + base.t_s

    h2_square = base.comp_i_target
    if h2_square == Dim.exact(0):
        t_u = base.t_u + l
        t_u_established = True
    else:
        # Exactness pins t_u between h1 of the square plus the part of the
        # length not absorbed by h2, and h1 plus the full length.
        absorbed = l if h2_square.upper is None else min(l, h2_square.upper)
        upper = None if base.t_u.upper is None else base.t_u.upper + l
        t_u = Dim.bounded(base.t_u.lower + l - absorbed, upper)
        t_u_established = False

    c2 = -2 * stratum.split.m * stratum.split.n + l
    return replace(
        base,
        q_length=l,
        t_u=t_u,
        t_o=t_o,
        t_s=t_s,
        c2=c2,
        margin_exceeds_c2=base.margin > c2,
        t_u_established=t_u_established,
        pairing_reduction=killed_pairings_check(quotient),
    )


def kirwan_vanishing_range(codim_k: int, defining_eqs_mu: int) -> int:
    """Exclusive upper bound on degrees where removal preserves homology.

    Removing a closed subvariety of codimension ``k`` from a variety cut
    out locally by at most ``mu`` equations leaves homology unchanged in
    degrees ``q < k - mu``.
    """
    if codim_k < 1:
        raise PreconditionError(f"codimension must be >= 1, got {codim_k}")
    if defining_eqs_mu < 0:
        raise PreconditionError("the equation count must be >= 0")
    return codim_k - defining_eqs_mu


def enumerate_strata(
    surface: ProductSurface, w: Polarization, c2: int, bound: int
) -> tuple[list[tuple[int, int, int, str]], list[dict]]:
    """Destabilizing types ``(m, n, l)`` for the given ``c2`` inside the box.

    A type is admissible when its polarization degree is nonnegative and
    ``l = c2 + 2mn`` is nonnegative. The margin analysis applies to mixed
    bidegrees; when the negative entry sits in the first slot, the factor
    roles swap. Types with ``mn >= 0`` fall in the regime of families
    consisting only of unstable bundles, which are removed before the
    comparison; they are returned separately so nothing is silently skipped.
    """
    mixed: list[tuple[int, int, int, str]] = []
    excluded: list[dict] = []
    for m in range(-bound, bound + 1):
        for n in range(-bound, bound + 1):
            l = c2 + 2 * m * n
            if l < 0:
                continue
            if degree_wrt((m, n), w) < 0:
                continue
            if m * n >= 0:
                excluded.append(
                    {
                        "m": m,
                        "n": n,
                        "l": l,
                        "reason": (
                            "bidegree with mn >= 0: the stratum lies in a "
                            "family consisting only of unstable bundles, "
                            "removed before the comparison"
                        ),
                    }
                )
                continue
            orientation = "standard" if m >= 1 else "swapped"
            mixed.append((m, n, l, orientation))
    mixed.sort()
    excluded.sort(key=lambda e: (e["m"], e["n"], e["l"]))
    return mixed, excluded


def _oriented_report(
    surface: ProductSurface,
    w: Polarization,
    m: int,
    n: int,
    l: int,
    orientation: str,
) -> KuranishiReport:
    if orientation == "standard":
        split = SplitStratum(surface, m, n, w)
    else:
        swapped_surface = ProductSurface(
            surface.curve2, surface.curve1, surface.pic_independent
        )
        split = SplitStratum(swapped_surface, n, m, Polarization(w.beta, w.alpha))
    return nonfiltrable_report(NonfiltrableStratum(split, l))


def homology_comparison_report(
    surface: ProductSurface, w: Polarization, c2: int, bound: int
) -> ComparisonReport:
    """Aggregate margin check: does every enumerated stratum clear ``c2``?

    Verdicts: ``"true"`` when every margin is established and exceeds
    ``c2`` (vacuously true with no strata), ``"false"`` when an established
    margin fails to, and ``"not-established"`` when some stratum falls
    outside the hypotheses of the margin formulas. Enumeration is complete
    only within the box ``|m|, |n| <= bound``.
    """
    if c2 < 1:
        raise PreconditionError(f"c2 must be >= 1, got {c2}")
    if bound < 1:
        raise PreconditionError(f"the enumeration bound must be >= 1, got {bound}")
    surface.require_pic_independent()

    mixed, excluded = enumerate_strata(surface, w, c2, bound)
    outcomes = []
    failing = []
    for m, n, l, orientation in mixed:
        report = _oriented_report(surface, w, m, n, l, orientation)
        outcomes.append(
            StratumOutcome(
                m=m, n=n, q_length=l, orientation=orientation, report=report
            )
        )
        if not report.margin_established:
            failing.append(
                {
                    "m": m,
                    "n": n,
                    "l": l,
                    "reason": (
                        "the Euler characteristic entering the margin is "
                        f"not positive (chi = {report.chi2} after orientation)"
                    ),
                }
            )

    established = [o.margin for o in outcomes if o.established]
    min_margin = min(established) if established else None
    if failing:
        verdict = "not-established"
    elif min_margin is None or min_margin > c2:
        verdict = "true"
    else:
        verdict = "false"
    return ComparisonReport(
        surface=surface,
        polarization=w,
        c2=c2,
        bound=bound,
        strata=tuple(outcomes),
        excluded=tuple(excluded),
        not_established=tuple(failing),
        min_margin=min_margin,
        verdict=verdict,
    )
