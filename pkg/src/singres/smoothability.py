"""Steenbrink's smoothability obstruction for Gorenstein surface singularities.

For a smoothable Gorenstein singularity the negative inertia index of any
Milnor fiber satisfies

    mu_minus = 10 p_g - b1(link) + (Z_K^2 + |I|)

so a negative right-hand side rules out smoothings.  Only the right-hand
side is computed here.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classify import minimally_elliptic
from .cycles import (
    DEFAULT_ENUM_CAP,
    anticanonical_cycle,
    arithmetic_genus,
    fraction_to_json,
    fundamental_cycle,
    pairing,
    require_negative_definite,
)
from .errors import InvalidWeight, PgUnderdetermined
from .graph import DualGraph, graph_first_betti, minimality_warnings

PG_USER = "user"
PG_RATIONAL = "auto-rational"
PG_MINEL = "auto-minimally-elliptic"


@dataclass
class SteenbrinkReport:
    p_g: int
    p_g_source: str
    b1_link: int
    zk_squared: Fraction
    vertex_count: int
    mu_minus_predicted: Fraction
    obstructed: Optional[bool]  # None: not applicable (Z_K not integral)
    numerically_gorenstein: bool
    conditional: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p_g": self.p_g,
            "p_g_source": self.p_g_source,
            "b1_link": self.b1_link,
            "zk_squared": fraction_to_json(self.zk_squared),
            "vertex_count": self.vertex_count,
            "mu_minus_predicted": fraction_to_json(self.mu_minus_predicted),
            "obstructed": "not-applicable" if self.obstructed is None else self.obstructed,
            "numerically_gorenstein": self.numerically_gorenstein,
            "conditional": self.conditional,
            "notes": list(self.notes),
        }


def link_first_betti(g: DualGraph) -> int:
    return graph_first_betti(g) + 2 * sum(v.genus for v in g.vertices)


def auto_pg(g: DualGraph, cap: int = DEFAULT_ENUM_CAP) -> tuple[int, str]:
    """Geometric genus in the two cases where the graph determines it."""
    if arithmetic_genus(fundamental_cycle(g), g) == 0:
        return 0, PG_RATIONAL
    if anticanonical_cycle(g).is_integral and minimally_elliptic(g, cap).verdict:
        return 1, PG_MINEL
    raise PgUnderdetermined(
        "p_g is only derived for rational or minimally elliptic Gorenstein graphs; pass it explicitly"
    )


def steenbrink(g: DualGraph, p_g: Optional[int] = None, cap: int = DEFAULT_ENUM_CAP) -> SteenbrinkReport:
    m = require_negative_definite(g)
    if p_g is None:
        p_g, source = auto_pg(g, cap)
    else:
        if p_g < 0:
            raise ValueError("p_g must be non-negative")
        source = PG_USER
    zk = anticanonical_cycle(g)
    zk2 = pairing(zk, zk, m)
    b1 = link_first_betti(g)
    mu = 10 * p_g - b1 + (zk2 + g.n)
    gorenstein = zk.is_integral
    notes: list[str] = []
    if gorenstein:
        obstructed: Optional[bool] = mu < 0
        if mu.denominator != 1:
            notes.append(f"predicted mu_minus {mu} is not an integer")
        if obstructed:
            notes.append("negative predicted mu_minus: a Gorenstein singularity with this graph is not smoothable")
    else:
        obstructed = None
        notes.append("Z_K is not integral, so the graph is not numerically Gorenstein and the formula does not apply")
    warnings = minimality_warnings(g)
    notes.extend(w.message for w in warnings)
    return SteenbrinkReport(
        p_g=p_g,
        p_g_source=source,
        b1_link=b1,
        zk_squared=zk2,
        vertex_count=g.n,
        mu_minus_predicted=mu,
        obstructed=obstructed,
        numerically_gorenstein=gorenstein,
        conditional=bool(warnings),
        notes=notes,
    )


def simple_elliptic_graph(weight: int) -> DualGraph:
    return DualGraph.from_lists([weight], [], [1])


def simple_elliptic_smoothable(weight: int) -> bool:
    """Whether a simple elliptic singularity with E^2 = weight can be smoothable.

    Decided by the sign of the Steenbrink prediction on the one-vertex genus-1
    graph, which reduces to 9 + weight.
    """
    if weight >= 0:
        raise InvalidWeight(f"self-intersection must be negative, got {weight}")
    report = steenbrink(simple_elliptic_graph(weight))
    assert report.p_g_source == PG_MINEL
    assert report.mu_minus_predicted == 9 + weight, report.mu_minus_predicted
    return not report.obstructed
