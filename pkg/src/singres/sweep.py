"""Integer bookkeeping for smoothing non-normal cones by sweeping.

Take a ruled surface X over an elliptic curve C with numerical invariant
e >= -1 (so the special section has C0^2 = -e) and embed it by the very
ample class C0 + aF, a >= e + 3.  A transverse hyperplane section B is
again a section with B^2 = -e + 2a.  The cone over B is a non-normal
isolated surface singularity; sweeping the cone over X smooths it, and
the Milnor fiber is the disc bundle over C with Euler number e - 2a.
That fiber has b1 = 2, which a normal singularity cannot have.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import InvalidRuledSurface, NoPlan, NotVeryAmple
from .smoothability import simple_elliptic_graph, steenbrink

NON_NORMAL_NOTE = (
    "Milnor fibers of normal isolated singularities have b1 = 0 (Greuel-Steenbrink); "
    "this fiber has b1 = 2, so the central fiber is non-normal"
)


@dataclass(frozen=True)
class SweepPlan:
    e: int
    a: int
    b_squared: int
    fiber_euler: int
    normalization_weight: int
    milnor_fiber_b1: int = 2
    milnor_fiber_b2: int = 1
    central_fiber_normal: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_invariants(e: int, a: int) -> SweepPlan:
    if e < -1:
        raise InvalidRuledSurface(f"ruled surfaces over an elliptic curve have e >= -1, got e={e}")
    if a < e + 3:
        raise NotVeryAmple(f"C0 + {a}F is very ample only for a >= e + 3 = {e + 3}")
    c0_sq, c0_f, f_sq = -e, 1, 0
    b_dot_f = c0_f + a * f_sq
    assert b_dot_f == 1  # B is a section
    b_sq = c0_sq + 2 * a * c0_f + a * a * f_sq
    plan = SweepPlan(
        e=e,
        a=a,
        b_squared=b_sq,
        fiber_euler=-b_sq,
        normalization_weight=-b_sq,
    )
    assert plan.fiber_euler == e - 2 * a <= -5
    return plan


def plan_for_target(d: int) -> list[SweepPlan]:
    """All (e, a) whose Milnor fiber has Euler number d, sorted by e."""
    plans = []
    for e in range(-1, -d - 6 + 1):
        if (e - d) % 2:
            continue
        plans.append(sweep_invariants(e, (e - d) // 2))
    return plans


@dataclass
class HeadlineReport:
    target: int
    normal_mu_minus: int
    normal_obstructed: bool
    plans: list[SweepPlan]
    notes: list[str] = field(default_factory=list)

    @property
    def both_routes(self) -> bool:
        return not self.normal_obstructed

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "normal": {
                "graph": f"SE({self.target})",
                "mu_minus_predicted": self.normal_mu_minus,
                "obstructed": self.normal_obstructed,
            },
            "sweep": {
                "plan_count": len(self.plans),
                "plans": [p.to_dict() for p in self.plans],
                "milnor_fiber": {
                    "type": "disc bundle over an elliptic curve",
                    "euler_number": self.target,
                    "b1": 2,
                    "b2": 1,
                },
            },
            "notes": list(self.notes),
        }

    def render_text(self) -> str:
        d = self.target
        lines = [f"target: simple elliptic singularity with E^2 = {d}"]
        verdict = "obstructed (not smoothable)" if self.normal_obstructed else "unobstructed"
        lines.append(f"normal route: predicted mu_minus = {self.normal_mu_minus}, {verdict}")
        lines.append(f"sweep route: {len(self.plans)} plan(s)")
        for p in self.plans:
            lines.append(f"  e={p.e:>3}  a={p.a:>3}  B^2={p.b_squared}  fiber Euler={p.fiber_euler}")
        lines.append(f"Milnor fiber: disc bundle over the elliptic curve, Euler number {d}, b1 = 2")
        lines.extend(self.notes)
        return "\n".join(lines)


def headline_report(d: int) -> HeadlineReport:
    plans = plan_for_target(d)
    if not plans:
        raise NoPlan(f"sweeping realizes only Euler numbers <= -5, got {d}")
    st = steenbrink(simple_elliptic_graph(d))
    mu = st.mu_minus_predicted
    assert mu.denominator == 1
    notes = [NON_NORMAL_NOTE]
    if st.obstructed:
        notes.append(
            f"the normal simple elliptic singularity with E^2 = {d} is not smoothable, yet its minimal "
            f"resolution (disc bundle with Euler number {d}) is the Milnor fiber of a non-normal representative"
        )
    else:
        notes.append("both the normal singularity and the non-normal cone admit smoothings")
    return HeadlineReport(d, int(mu), bool(st.obstructed), plans, notes)
