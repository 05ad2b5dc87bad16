"""The seeded discrepancy ledger.

Part of this library's value is making the arithmetic it mechanizes
auditable. Three quantities circulate with closed forms that disagree with
what exact computation gives; every report touching one of them carries a
ledger entry showing the stated form, the form actually used, the two
values for the inputs at hand, and the relation that keeps the original
conclusions intact.
"""

from __future__ import annotations


def nu1_entry(m: int, g1: int, chi2: int) -> dict:
    """The obstruction multiplier on the first factor.

    The stated form undercounts by ``2(g1 - 1)``: duality on the first
    curve gives ``2m + g1 - 1`` for the relevant h1, so for genus at least
    one the margin computed here dominates the stated one and every
    conclusion drawn from the stated value survives.
    """
    nu1 = 2 * m + g1 - 1
    nu1_stated = 2 * m - g1 + 1
    return {
        "id": "nu1-obstruction-count",
        "anchor": "split-bundle margin analysis, first-factor multiplier",
        "stated_formula": "2m - g1 + 1",
        "used_formula": "2m + g1 - 1",
        "stated_value": nu1_stated,
        "used_value": nu1,
        "stated_margin": nu1_stated * chi2,
        "used_margin": nu1 * chi2,
        "relation": "used >= stated whenever g1 >= 1 (equality at g1 = 1)",
    }


def c2_entry(m: int, n: int, l: int) -> dict:
    """Second Chern number of an extension with a point-supported quotient.

    The stated form drops a factor of two in the pairing term; the Whitney
    product rule on the split type pins the convention used here.
    """
    return {
        "id": "extension-second-chern",
        "anchor": "nonfiltrable extension c2 formula",
        "stated_formula": "-m*n + l",
        "used_formula": "-2*m*n + l",
        "stated_value": -m * n + l,
        "used_value": -2 * m * n + l,
        "relation": "used value agrees with the product-rule computation on split types",
    }


def twist_inequality_entry(h2: int, hr: int, c2: int, a: int, t: int) -> dict:
    """The degree inequality selecting the twist exponent.

    The stated form forces a negative point count, contradicting the
    nonnegativity of the quotient length; the corrected orientation makes
    the point count at least ``a`` and hence the family at least
    ``2a``-dimensional, which is the claimed conclusion.
    """
    return {
        "id": "twist-degree-inequality",
        "anchor": "twist selection for totally unstable families",
        "stated_formula": "-t^2*H^2 + t*H.R >= c2 + a",
        "used_formula": "t^2*H^2 - t*H.R >= a - c2",
        "stated_value": -t * t * h2 + t * hr,
        "used_value": t * t * h2 - t * hr,
        "stated_threshold": c2 + a,
        "used_threshold": a - c2,
        "relation": (
            "used form keeps the point count c2 + L^2 - L.R nonnegative "
            "and yields the claimed lower bound 2a"
        ),
    }
