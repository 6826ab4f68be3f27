"""Classification predicates built on the fundamental and anticanonical cycles."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .cycles import (
    DEFAULT_ENUM_CAP,
    Cycle,
    RationalCycle,
    anticanonical_cycle,
    arithmetic_genus,
    canonical_degrees,
    enumerate_subcycles,
    fundamental_cycle,
    require_negative_definite,
)
from .errors import EnumerationTooLarge
from .graph import DualGraph, minimality_warnings

GORENSTEIN_NOTE = (
    "numerically Gorenstein means Z_K is integral; analytic Gorensteinness is a "
    "stronger property that graph data cannot decide"
)


@dataclass(frozen=True)
class MinimallyEllipticVerdict:
    """Outcome of the two-route minimal ellipticity test.

    ``by_condition1`` is None when the subcycle enumeration exceeded the cap.
    """

    verdict: Optional[bool]
    by_condition1: Optional[bool]
    by_condition2: bool
    witness: dict
    notes: tuple[str, ...] = ()


@dataclass
class ClassificationReport:
    is_rational: bool
    is_minimally_elliptic: Optional[bool]
    minel_by_condition1: Optional[bool]
    minel_by_condition2: bool
    is_simple_elliptic: bool
    numerically_gorenstein: bool
    pa_znum: int
    z_num: Cycle
    z_k: RationalCycle
    conditional: bool
    notes: list[str] = field(default_factory=list)
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "is_rational": self.is_rational,
            "is_minimally_elliptic": self.is_minimally_elliptic,
            "minel_by_condition1": self.minel_by_condition1,
            "minel_by_condition2": self.minel_by_condition2,
            "is_simple_elliptic": self.is_simple_elliptic,
            "numerically_gorenstein": self.numerically_gorenstein,
            "pa_znum": self.pa_znum,
            "z_num": self.z_num.to_json(),
            "z_k": self.z_k.to_json(),
            "conditional": self.conditional,
            "witness": self.witness,
            "notes": list(self.notes),
        }


def _pa_int(z, g: DualGraph) -> int:
    pa = arithmetic_genus(z, g)
    assert pa.denominator == 1
    return int(pa)


def is_rational(g: DualGraph) -> bool:
    return _pa_int(fundamental_cycle(g), g) == 0


def numerically_gorenstein(g: DualGraph) -> bool:
    return anticanonical_cycle(g).is_integral


def is_simple_elliptic(g: DualGraph) -> bool:
    if g.n != 1 or g.edges:
        return False
    v = g.vertices[0]
    return v.genus == 1 and v.weight <= -1


def _condition1_scan(g: DualGraph, z: Cycle, cap: int) -> Optional[Cycle]:
    """Return a subcycle 0 < D < z with p_a(D) >= 1, or None if there is none.

    Raises EnumerationTooLarge when the box exceeds ``cap``.
    """
    m = require_negative_definite(g).to_numpy()
    kdot = np.array(canonical_degrees(g), dtype=np.int64)
    zarr = np.array(z.coefficients, dtype=np.int64)
    gen = enumerate_subcycles(z, cap)  # size check only
    if kernels.fits_int64(m, kdot, int(zarr.max())):
        hit = kernels.first_nonnegative_genus(m, kdot, zarr)
        return Cycle(tuple(int(x) for x in hit)) if hit.size else None
    for d in gen:
        if arithmetic_genus(d, g) >= 1:
            return d
    return None


def minimally_elliptic(g: DualGraph, cap: int = DEFAULT_ENUM_CAP) -> MinimallyEllipticVerdict:
    """Evaluate both characterizations of minimal ellipticity and cross-check.

    Condition (1): p_a(Z_num) = 1 and every 0 < D < Z_num has p_a(D) < 1.
    Condition (2): Z_num = Z_K.
    On a resolution with (-1)-curves the two are not guaranteed to agree, so a
    disagreement there becomes a note instead of an assertion failure.
    """
    z = fundamental_cycle(g)
    zk = anticanonical_cycle(g)
    conditional = bool(minimality_warnings(g))
    notes: list[str] = []
    witness: dict = {}

    pa = _pa_int(z, g)
    c1: Optional[bool]
    if pa != 1:
        c1 = False
        witness["pa_znum"] = pa
    else:
        try:
            bad = _condition1_scan(g, z, cap)
        except EnumerationTooLarge as exc:
            c1 = None
            notes.append(f"condition (1) not decided: {exc}")
        else:
            c1 = bad is None
            if bad is not None:
                witness["subcycle"] = bad.to_json()
                witness["subcycle_pa"] = _pa_int(bad, g)

    c2 = all(Fraction(a) == b for a, b in zip(z, zk))
    if not c2:
        witness["z_num"] = z.to_json()
        witness["z_k"] = zk.to_json()

    if c1 is not None and c1 != c2:
        msg = f"conditions (1) and (2) disagree: condition1={c1}, condition2={c2}"
        if not conditional:
            raise AssertionError(msg)
        notes.append(msg + " (resolution may be non-minimal)")
        verdict = None
    elif c1 is not None:
        verdict = c1
    elif not conditional:
        verdict = c2
        notes.append("verdict taken from condition (2) alone")
    else:
        verdict = None
    return MinimallyEllipticVerdict(verdict, c1, c2, witness, tuple(notes))


def is_minimally_elliptic(g: DualGraph, cap: int = DEFAULT_ENUM_CAP) -> tuple[Optional[bool], dict]:
    r = minimally_elliptic(g, cap)
    return r.verdict, r.witness


def classify(g: DualGraph, cap: int = DEFAULT_ENUM_CAP) -> ClassificationReport:
    z = fundamental_cycle(g)
    zk = anticanonical_cycle(g)
    pa = _pa_int(z, g)
    me = minimally_elliptic(g, cap)
    warnings = minimality_warnings(g)
    notes = list(me.notes)
    notes.extend(w.message for w in warnings)
    notes.append(GORENSTEIN_NOTE)
    report = ClassificationReport(
        is_rational=pa == 0,
        is_minimally_elliptic=me.verdict,
        minel_by_condition1=me.by_condition1,
        minel_by_condition2=me.by_condition2,
        is_simple_elliptic=is_simple_elliptic(g),
        numerically_gorenstein=zk.is_integral,
        pa_znum=pa,
        z_num=z,
        z_k=zk,
        conditional=bool(warnings),
        notes=notes,
        witness=me.witness,
    )
    if report.is_simple_elliptic:
        assert report.is_minimally_elliptic, "simple elliptic graph not minimally elliptic"
    if report.is_rational:
        assert not report.is_minimally_elliptic
    return report
