"""Verification suites: exact identities, inequality theorems, and scans.

Every check compares integer polynomials exactly and is emitted as a
VerificationReport.  The report kind separates settled statements, whose
failure means a defect (identity, theorem), from conjectural or exploratory
ones, whose failure is a finding to record (conjecture, evidence).

Identity ids such as "Thm2.1" or "Eq3.4" are stable wire-format strings used
to aggregate reports; consumers should treat them as opaque labels.

Ball verification policy: complexes with at most FULL_CHECK_FACE_CAP faces
get the full homological certification; larger ones get a combinatorial
screen (purity, pseudomanifold ridges, Euler characteristics of the complex
and its boundary).  Results are memoized by facet label sets, so threaded
runs at worst duplicate work, never disagree.
"""

from __future__ import annotations

import dataclasses
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from .complexes import (
    SimplicialComplex,
    boundary_simplex,
    cross_polytope_boundary,
    cycle,
    example_5_2_ball,
    example_5_4_ball,
    fresh_label,
    is_induced_subcomplex,
    is_subcomplex,
    octahedron,
    path,
    simplex,
)
from .errors import ConsistencyError, PreconditionError
from .homology import (
    boundary_subcomplex,
    has_interior_vertex_property,
    interior_faces,
    is_cohen_macaulay,
    is_cohen_macaulay_star,
    is_homology_ball,
    is_homology_sphere,
    no_facet_on_union_boundaries,
)
from .invariants import (
    h_poly,
    h_vector,
    is_alternatingly_increasing,
    local_h,
    sphere_gamma,
    theta,
    theta_sd_closed_form,
)
from .polynomials import (
    IntPoly,
    derangement_poly,
    gamma_vector,
    is_gamma_positive,
    is_nonnegative,
    is_real_rooted,
    is_symmetric,
    is_unimodal,
    pnk,
    poly_geq,
    reverse,
    symmetric_decomposition,
)
from .subdivisions import (
    Triangulation,
    antiprism,
    barycentric,
    compose,
    edgewise,
    identity,
    stellar,
)

REPORT_KINDS = ("identity", "theorem", "conjecture", "evidence")
SUITES = ("locality", "theta", "kms", "monotone", "conjectures", "all")
FULL_CHECK_FACE_CAP = 700


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check on one instance.

    passed reflects the exact coefficientwise relation claimed; when the
    hypotheses of the statement do not hold, the report carries
    applicable=False and passed=True, with the reason in detail.
    """

    identity: str
    instance: str
    lhs: str
    rhs: str
    passed: bool
    kind: str = "identity"
    applicable: bool = True
    detail: str = ""

    def __post_init__(self):
        if self.kind not in REPORT_KINDS:
            raise PreconditionError(f"unknown report kind {self.kind!r}")

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)


def failures(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    """Reports that falsify a settled statement (identity or theorem)."""
    return [
        r for r in reports
        if r.applicable and not r.passed and r.kind in ("identity", "theorem")
    ]


def summarize(reports: Sequence[VerificationReport]) -> str:
    """Per-identity pass counts, one line each, plus a trailing total line."""
    groups: dict[str, list[VerificationReport]] = {}
    for r in reports:
        groups.setdefault(r.identity, []).append(r)
    lines = []
    for ident in sorted(groups):
        rs = groups[ident]
        applicable = [r for r in rs if r.applicable]
        passed = sum(1 for r in applicable if r.passed)
        line = (
            f"{ident:16s} {rs[0].kind:10s} "
            f"passed {passed}/{len(applicable)}"
        )
        skipped = len(rs) - len(applicable)
        if skipped:
            line += f" (+{skipped} inapplicable)"
        lines.append(line)
    bad = failures(reports)
    lines.append(
        f"total {len(reports)} reports, {len(bad)} identity/theorem failures"
    )
    return "\n".join(lines)


# ------------------------------------------------------------ memoized facts

_Key = frozenset

_BALL_MEMO: dict[_Key, SimplicialComplex | None] = {}
_SPHERE_MEMO: dict[_Key, bool] = {}
_THETA_MEMO: dict[_Key, IntPoly] = {}
_LOCAL_H_MEMO: dict[tuple[_Key, _Key], IntPoly] = {}
_SD_MEMO: dict[_Key, tuple[IntPoly, IntPoly | None]] = {}
_FLAGS_MEMO: dict[tuple[_Key, str | None], "TriangulationFlags"] = {}
_PROFILE_MEMO: dict[_Key, "BaseProfile"] = {}


def _key(c: SimplicialComplex) -> _Key:
    return c.facet_labelsets()


def _light_ball_screen(c: SimplicialComplex) -> SimplicialComplex | None:
    """Combinatorial screen used above the homology face cap.

    Accepts exactly the pure pseudomanifolds with nonempty boundary whose
    Euler characteristics match a ball and a sphere; does not certify
    homology.
    """
    if not c.is_pure():
        return None
    counts: dict[tuple[int, ...], int] = {}
    for facet in c.facets:
        for t in range(len(facet)):
            ridge = facet[:t] + facet[t + 1:]
            counts[ridge] = counts.get(ridge, 0) + 1
    if any(v > 2 for v in counts.values()):
        return None
    bd = boundary_subcomplex(c)
    if bd.is_void:
        return None
    if not (bd.is_empty and c.dim == 0) and bd.dim != c.dim - 1:
        return None
    if c.reduced_euler() != 0:
        return None
    expected = -1 if bd.is_empty else (-1) ** bd.dim
    if bd.reduced_euler() != expected:
        return None
    return bd


def verified_boundary(c: SimplicialComplex) -> SimplicialComplex | None:
    """Boundary of c when c passes the ball check in force at its size."""
    if c.is_void:
        raise PreconditionError("the void complex is not classifiable")
    key = _key(c)
    if key in _BALL_MEMO:
        return _BALL_MEMO[key]
    if c.is_empty:
        bd: SimplicialComplex | None = SimplicialComplex.from_facets([])
    elif len(c.faces()) <= FULL_CHECK_FACE_CAP:
        bd = is_homology_ball(c)
    else:
        bd = _light_ball_screen(c)
    _BALL_MEMO[key] = bd
    return bd


def _verified_sphere(c: SimplicialComplex) -> bool:
    key = _key(c)
    if key not in _SPHERE_MEMO:
        _SPHERE_MEMO[key] = is_homology_sphere(c)
    return _SPHERE_MEMO[key]


def theta_verified(c: SimplicialComplex) -> IntPoly:
    """theta of a verified ball, memoized; raises when c is not one."""
    key = _key(c)
    got = _THETA_MEMO.get(key)
    if got is not None:
        return got
    if c.is_empty:
        val = IntPoly.one()
    else:
        bd = verified_boundary(c)
        if bd is None:
            raise PreconditionError("not a verified homology ball")
        val = theta(c, bd)
    _THETA_MEMO[key] = val
    return val


def _local_h_cached(tri: Triangulation) -> IntPoly:
    key = (_key(tri.base), _key(tri.total))
    got = _LOCAL_H_MEMO.get(key)
    if got is None:
        got = local_h(tri)
        _LOCAL_H_MEMO[key] = got
    return got


def _sd_invariants(c: SimplicialComplex) -> tuple[IntPoly, IntPoly | None]:
    """(h, theta) of the barycentric subdivision of c; theta when c is a ball."""
    key = _key(c)
    got = _SD_MEMO.get(key)
    if got is None:
        sd = barycentric(c)
        h = h_poly(sd.total)
        th: IntPoly | None = None
        if not c.is_void and verified_boundary(c) is not None:
            th = theta_verified(sd.total)
        got = (h, th)
        _SD_MEMO[key] = got
    return got


@dataclasses.dataclass(frozen=True)
class BaseProfile:
    """Verified classification of a base complex, memoized per complex."""

    boundary: SimplicialComplex | None
    is_sphere: bool
    is_cm: bool
    is_cm_star: bool
    is_flag: bool

    @property
    def is_ball(self) -> bool:
        return self.boundary is not None


def base_profile(c: SimplicialComplex) -> BaseProfile:
    key = _key(c)
    got = _PROFILE_MEMO.get(key)
    if got is None:
        bd = verified_boundary(c)
        sphere = _verified_sphere(c)
        cm = is_cohen_macaulay(c)
        cm_star = is_cohen_macaulay_star(c) if cm else False
        got = BaseProfile(bd, sphere, cm, cm_star, c.is_flag())
        _PROFILE_MEMO[key] = got
    return got


# -------------------------------------------------- corpus and triangulations


def corpus() -> list[tuple[str, SimplicialComplex]]:
    """The fixed bases every suite runs over."""
    return [
        ("simplex0", simplex(["a"])),
        ("simplex1", simplex(["a", "b"])),
        ("simplex2", simplex(["a", "b", "c"])),
        ("simplex3", simplex(["a", "b", "c", "d"])),
        ("boundary2", boundary_simplex(["a", "b"])),
        ("boundary3", boundary_simplex(["a", "b", "c"])),
        ("boundary4", boundary_simplex(["a", "b", "c", "d"])),
        ("boundary5", boundary_simplex(["a", "b", "c", "d", "e"])),
        ("octahedron", octahedron()),
        ("path2", path(2)),
        ("path3", path(3)),
        ("cycle4", cycle(4)),
        ("cycle5", cycle(5)),
        ("cone_cycle4", cycle(4).cone("apex")),
        ("cone_octahedron", octahedron().cone("apex")),
        ("ball_5_2", example_5_2_ball()),
        ("ball_5_4", example_5_4_ball()),
    ]


def _first_facet(c: SimplicialComplex) -> tuple[str, ...]:
    return min(tuple(sorted(c.labels_of(f))) for f in c.facets)


def _stellar_first(c: SimplicialComplex) -> Triangulation:
    return stellar(c, _first_facet(c))


def _sd_of_stellar(c: SimplicialComplex) -> Triangulation:
    st = _stellar_first(c)
    return compose(barycentric(st.total), st)


def subdivision_kinds() -> list[tuple[str, Callable[[SimplicialComplex], Triangulation]]]:
    """Named triangulation constructors the suites apply to every base."""
    return [
        ("identity", identity),
        ("sd", barycentric),
        ("antiprism", antiprism),
        ("stellar", _stellar_first),
        ("esd2", lambda c: edgewise(c, 2)),
        ("esd3", lambda c: edgewise(c, 3)),
        ("sd.stellar", _sd_of_stellar),
    ]


_UNIFORM_MAKERS: dict[str, Callable[[SimplicialComplex], Triangulation]] = {
    "sd": barycentric,
    "antiprism": antiprism,
    "esd2": lambda c: edgewise(c, 2),
    "esd3": lambda c: edgewise(c, 3),
}


def _theta_simplex(size: int) -> IntPoly:
    if size == 0:
        return IntPoly.one()
    if size == 1:
        return IntPoly.zero()
    return IntPoly([0] + [-1] * (size - 1))


class RestrictionEngine:
    """theta and local h of the restrictions of one triangulation.

    The uniform subdivisions (sd, antiprism, edgewise) restrict to the same
    subdivision of the carrier simplex, so their invariants depend only on
    the carrier size; this is asserted against a freshly built copy once per
    size, then reused.  Restrictions equal to the carrier simplex itself have
    local h = 0 and the simplex theta.
    """

    def __init__(self, tri: Triangulation, kind: str | None = None):
        self._tri = tri
        self._maker = _UNIFORM_MAKERS.get(kind) if kind else None
        self._by_size: dict[int, tuple[IntPoly, IntPoly]] = {}

    def _uniform(self, labels: tuple[str, ...]) -> tuple[IntPoly, IntPoly] | None:
        if self._maker is None:
            return None
        size = len(labels)
        got = self._by_size.get(size)
        if got is None:
            fresh = self._maker(simplex(sorted(labels)))
            if self._tri.restriction(labels) != fresh:
                raise ConsistencyError(
                    f"restriction to {sorted(labels)} differs from the fresh"
                    " subdivision of its carrier simplex"
                )
            got = (theta_verified(fresh.total), _local_h_cached(fresh))
            self._by_size[size] = got
        return got

    def theta_of(self, labels: tuple[str, ...]) -> IntPoly:
        if not labels:
            return IntPoly.one()
        uniform = self._uniform(labels)
        if uniform is not None:
            return uniform[0]
        sub = self._tri.restriction(labels)
        if sub.total == sub.base:
            return _theta_simplex(len(labels))
        return theta_verified(sub.total)

    def local_h_of(self, labels: tuple[str, ...]) -> IntPoly:
        if not labels:
            return IntPoly.one()
        uniform = self._uniform(labels)
        if uniform is not None:
            return uniform[1]
        sub = self._tri.restriction(labels)
        if sub.total == sub.base:
            return IntPoly.zero()
        return _local_h_cached(sub)


@dataclasses.dataclass(frozen=True)
class TriangulationFlags:
    """Whether every restriction's theta is nonnegative / unimodal / gamma-positive."""

    positive: bool
    unimodal: bool
    gamma_positive: bool


def triangulation_theta_flags(
    tri: Triangulation, kind: str | None = None
) -> TriangulationFlags:
    memo_key = (_key(tri.base), _key(tri.total))
    cached = _FLAGS_MEMO.get((memo_key, kind))
    if cached is not None:
        return cached
    engine = RestrictionEngine(tri, kind)
    positive = unimodal = gamma = True
    for face in _sorted_faces(tri.base):
        labels = tri.base.labels_of(face)
        if not labels:
            continue
        t = engine.theta_of(tuple(sorted(labels)))
        positive = positive and is_nonnegative(t)
        unimodal = unimodal and is_nonnegative(t) and is_unimodal(t)
        gamma = gamma and is_gamma_positive(t, len(labels))
    flags = TriangulationFlags(positive, unimodal, gamma)
    _FLAGS_MEMO[(memo_key, kind)] = flags
    return flags


def _sorted_faces(c: SimplicialComplex):
    return sorted(c.faces(), key=lambda f: (len(f), tuple(sorted(c.labels_of(f)))))


# ----------------------------------------------------------- identity checks


def verify_locality(
    tri: Triangulation, instance: str = "", kind: str | None = None
) -> VerificationReport:
    """h of the total complex as the local-h weighted sum over base links."""
    base = tri.base
    if not base.is_pure():
        raise PreconditionError("the locality identity needs a pure base")
    engine = RestrictionEngine(tri, kind)
    lhs = h_poly(tri.total)
    rhs = IntPoly.zero()
    for face in _sorted_faces(base):
        labels = tuple(sorted(base.labels_of(face)))
        rhs = rhs + engine.local_h_of(labels) * h_poly(base.link(labels))
    return VerificationReport(
        "Thm2.1", instance, lhs.text(), rhs.text(), lhs == rhs
    )


def verify_theta_formula(
    tri: Triangulation, instance: str = "", kind: str | None = None
) -> VerificationReport:
    """h of the total complex as the theta-weighted sum over subdivided links."""
    base = tri.base
    if not base.is_pure():
        raise PreconditionError("the theta formula needs a pure base")
    engine = RestrictionEngine(tri, kind)
    lhs = h_poly(tri.total)
    rhs = IntPoly.zero()
    for face in _sorted_faces(base):
        labels = tuple(sorted(base.labels_of(face)))
        h_sd_link, _ = _sd_invariants(base.link(labels))
        rhs = rhs + engine.theta_of(labels) * h_sd_link
    return VerificationReport(
        "Eq3.3", instance, lhs.text(), rhs.text(), lhs == rhs
    )


def verify_kms(
    tri: Triangulation, instance: str = "", kind: str | None = None
) -> VerificationReport:
    """local h of a simplex triangulation as a theta-derangement convolution."""
    base = tri.base
    if not base.is_empty and len(base.facets) != 1:
        raise PreconditionError("the convolution needs a triangulated simplex")
    engine = RestrictionEngine(tri, kind)
    nverts = len(base.vertices)
    lhs = _local_h_cached(tri)
    rhs = IntPoly.zero()
    for face in _sorted_faces(base):
        labels = tuple(sorted(base.labels_of(face)))
        rhs = rhs + engine.theta_of(labels) * derangement_poly(nverts - len(labels))
    return VerificationReport(
        "Eq3.4", instance, lhs.text(), rhs.text(), lhs == rhs
    )


# -------------------------------------------------------------- ball battery


def _centered_unimodal(p: IntPoly, n: int) -> bool:
    """Nondecreasing up to the center of a window-n symmetric polynomial."""
    c = p.padded(n + 1)
    return all(c[i] <= c[i + 1] for i in range(n // 2))


def _interior_counts(c: SimplicialComplex, bd: SimplicialComplex) -> tuple[int, int]:
    verts = edges = 0
    for labels in interior_faces(c, bd):
        if len(labels) == 1:
            verts += 1
        elif len(labels) == 2:
            edges += 1
    return verts, edges


def ball_basics_reports(name: str, c: SimplicialComplex) -> list[VerificationReport]:
    """Symmetry, closed forms, positivity, and the symmetric decomposition of h.

    Emitted for every verified ball; statements whose hypotheses fail on the
    instance are reported as inapplicable.
    """
    bd = verified_boundary(c)
    if bd is None or c.is_empty:
        return []
    out: list[VerificationReport] = []
    n = c.dim + 1
    th = theta_verified(c)
    hp = h_poly(c)
    hbd = h_poly(bd)
    r, interior_edges = _interior_counts(c, bd)

    sym_ok = reverse(th, n) == th and th[0] == 0 and th[1] == r - 1
    out.append(VerificationReport(
        "Prop3.2", name, th.text(),
        f"window={n}, interior vertices={r}", sym_ok, kind="theorem",
        detail="symmetry, zero constant term, linear coefficient",
    ))

    if c.dim in (1, 2):
        expected = IntPoly([0, r - 1]) if c.dim == 1 else IntPoly([0, r - 1, r - 1])
        out.append(VerificationReport(
            "Ex3.3b", name, th.text(), expected.text(), th == expected,
            kind="theorem",
        ))
    if n >= 3:
        f0 = len(c.vertices)
        expected_c2 = interior_edges - f0 - (n - 2) * r + n - 1
        out.append(VerificationReport(
            "Ex3.3d", name, str(th[2]), str(expected_c2),
            th[2] == expected_c2, kind="theorem",
            detail="coefficient of x^2 from interior counts",
        ))

    ivp = has_interior_vertex_property(c, bd)
    if ivp:
        out.append(VerificationReport(
            "Prop3.6a", name, th.text(), "0", is_nonnegative(th),
            kind="theorem",
        ))
        link_ok = True
        checked = 0
        for face in _sorted_faces(bd):
            labels = tuple(sorted(bd.labels_of(face)))
            lk = c.link(labels)
            link_ok = link_ok and is_nonnegative(theta_verified(lk))
            checked += 1
        out.append(VerificationReport(
            "Prop3.6b", name, f"{checked} boundary faces", "0", link_ok,
            kind="theorem", detail="theta of every boundary-face link",
        ))
    else:
        out.append(VerificationReport(
            "Prop3.6a", name, th.text(), "0", True, kind="theorem",
            applicable=False, detail="no interior vertex property",
        ))

    dec = symmetric_decomposition(hp, n - 1)
    theta_shifted = IntPoly(th.coeffs[1:]) if th.coeffs else IntPoly.zero()
    eq51 = dec.a == hbd and dec.b == theta_shifted
    out.append(VerificationReport(
        "Eq5.1", name,
        f"a={dec.a.text()}; b={dec.b.text()}",
        f"h(bd)={hbd.text()}; theta/x={theta_shifted.text()}",
        eq51, kind="identity",
    ))

    hs = h_vector(c)
    top_heavy = all(hs[i] <= hs[n - 1 - i] for i in range((n - 1) // 2 + 1))
    out.append(VerificationReport(
        "Eq5.2", name, str(_centered_unimodal(th, n)), str(top_heavy),
        _centered_unimodal(th, n) == top_heavy, kind="theorem",
        detail="theta unimodality matches the h-vector inequalities",
    ))

    both_unimodal = _centered_unimodal(hbd, n - 1) and _centered_unimodal(th, n)
    alt = is_alternatingly_increasing(hp, n - 1)
    out.append(VerificationReport(
        "Eq5.3", name, str(alt), str(both_unimodal), alt == both_unimodal,
        kind="theorem",
        detail="alternatingly increasing h matches unimodal decomposition",
    ))

    induced = is_induced_subcomplex(bd, c)
    if induced:
        out.append(VerificationReport(
            "Thm5.1", name, th.text(), "unimodal",
            is_unimodal(th) and is_nonnegative(th), kind="theorem",
            detail="induced boundary",
        ))
        half = all(hs[i] <= hs[i + 1] for i in range((n - 1) // 2))
        out.append(VerificationReport(
            "Eq5.4", name, str(tuple(hs[: (n - 1) // 2 + 1])), "nondecreasing",
            half, kind="theorem",
        ))
    else:
        out.append(VerificationReport(
            "Thm5.1", name, th.text(), "unimodal", True, kind="theorem",
            applicable=False, detail="boundary is not induced",
        ))
    return out


# --------------------------------------------------------------- monotonicity


def verify_monotonicity_a(
    ball: SimplicialComplex, tri: Triangulation, instance: str = "",
    kind: str | None = None,
) -> VerificationReport:
    """theta grows under triangulation of a ball with interior vertices."""
    bd = verified_boundary(ball)
    if bd is None or ball.is_empty:
        raise PreconditionError("needs a verified ball of dimension >= 0")
    if tri.base != ball:
        raise PreconditionError("the triangulation must refine the given ball")
    if not has_interior_vertex_property(ball, bd):
        raise PreconditionError("the ball lacks the interior vertex property")
    lhs = theta_verified(tri.total)
    rhs = theta_verified(ball)
    return VerificationReport(
        "Thm4.1", instance, lhs.text(), rhs.text(), poly_geq(lhs, rhs),
        kind="theorem",
    )


def _monotone_proof_identities(
    ball: SimplicialComplex, tri: Triangulation, instance: str, kind: str | None
) -> list[VerificationReport]:
    """The two expansions of theta of a triangulated ball over base faces.

    Both hold for every ball, with no positivity hypotheses: one through
    local h and links, one through restriction thetas and subdivided links.
    """
    bd = verified_boundary(ball)
    engine = RestrictionEngine(tri, kind)
    interior = interior_faces(ball, bd)
    lhs = theta_verified(tri.total)

    via_local = theta_verified(ball)
    via_theta = _sd_invariants(ball)[1]
    assert via_theta is not None
    for face in _sorted_faces(ball):
        labels = tuple(sorted(ball.labels_of(face)))
        link = ball.link(labels)
        if face in interior:
            via_local = via_local + engine.local_h_of(labels) * h_poly(link)
            via_theta = via_theta + engine.theta_of(labels) * _sd_invariants(link)[0]
        elif labels:
            via_local = via_local + engine.local_h_of(labels) * theta_verified(link)
            sd_link_theta = _sd_invariants(link)[1]
            assert sd_link_theta is not None
            via_theta = via_theta + engine.theta_of(labels) * sd_link_theta
    return [
        VerificationReport(
            "Thm4.1proof", instance, lhs.text(), via_local.text(),
            lhs == via_local, kind="identity",
            detail="theta expansion through local h over links",
        ),
        VerificationReport(
            "Thm4.2proof", instance, lhs.text(), via_theta.text(),
            lhs == via_theta, kind="identity",
            detail="theta expansion through restriction thetas",
        ),
    ]


def verify_monotonicity_b(
    ball: SimplicialComplex, tri: Triangulation, instance: str = "",
    kind: str | None = None,
) -> VerificationReport:
    """theta of a theta-positive triangulation dominates the barycentric one."""
    bd = verified_boundary(ball)
    if bd is None or ball.is_empty:
        raise PreconditionError("needs a verified ball of dimension >= 0")
    if tri.base != ball:
        raise PreconditionError("the triangulation must refine the given ball")
    flags = triangulation_theta_flags(tri, kind)
    if not flags.positive:
        raise PreconditionError("the triangulation is not theta positive")
    lhs = theta_verified(tri.total)
    rhs = _sd_invariants(ball)[1]
    assert rhs is not None
    return VerificationReport(
        "Thm4.2", instance, lhs.text(), rhs.text(), poly_geq(lhs, rhs),
        kind="theorem",
    )


def _monotonicity_b_parts(
    ball: SimplicialComplex, tri: Triangulation, instance: str,
    flags: TriangulationFlags,
) -> list[VerificationReport]:
    n = ball.dim + 1
    lhs = theta_verified(tri.total)
    sd_theta = _sd_invariants(ball)[1]
    assert sd_theta is not None
    diff = lhs - sd_theta
    out = []
    if flags.unimodal:
        ok = (is_nonnegative(lhs) and is_unimodal(lhs)
              and is_nonnegative(diff) and is_unimodal(diff))
        out.append(VerificationReport(
            "Thm4.2a", instance, lhs.text(), diff.text(), ok, kind="theorem",
            detail="nonnegative and unimodal theta and difference",
        ))
    else:
        out.append(VerificationReport(
            "Thm4.2a", instance, "", "", True, kind="theorem",
            applicable=False, detail="not a theta unimodal triangulation",
        ))
    if flags.gamma_positive:
        ok = is_gamma_positive(lhs, n) and is_gamma_positive(diff, n)
        out.append(VerificationReport(
            "Thm4.2b", instance, lhs.text(), diff.text(), ok, kind="theorem",
            detail="gamma-positive theta and difference",
        ))
    else:
        out.append(VerificationReport(
            "Thm4.2b", instance, "", "", True, kind="theorem",
            applicable=False, detail="not a theta gamma-positive triangulation",
        ))
    return out


def verify_monotonicity_c(
    outer: SimplicialComplex, inner: SimplicialComplex, instance: str = "",
    expected_gap: IntPoly | None = None,
) -> VerificationReport:
    """theta comparison for a ball contained in a larger ball of equal dimension.

    When no facet of the outer ball lies entirely on the union of the two
    boundaries, theta of the outer ball dominates.  With expected_gap given,
    the exact identity theta(inner) = theta(outer) + gap is checked instead.
    """
    bd_outer = verified_boundary(outer)
    bd_inner = verified_boundary(inner)
    if bd_outer is None or bd_inner is None or outer.is_empty or inner.is_empty:
        raise PreconditionError("needs two verified balls")
    if not is_subcomplex(inner, outer):
        raise PreconditionError("the smaller ball must be a subcomplex")
    if inner.dim != outer.dim:
        raise PreconditionError("the balls must have equal dimension")
    t_outer = theta_verified(outer)
    t_inner = theta_verified(inner)
    if expected_gap is not None:
        lhs = t_inner
        rhs = t_outer + expected_gap
        return VerificationReport(
            "Rem4.7", instance, lhs.text(), rhs.text(), lhs == rhs,
            kind="identity", detail="exact gap after removing a pendant vertex",
        )
    if not no_facet_on_union_boundaries(outer, bd_outer, bd_inner):
        return VerificationReport(
            "Thm4.6", instance, t_outer.text(), t_inner.text(), True,
            kind="theorem", applicable=False,
            detail="a facet lies on the union of the boundaries",
        )
    return VerificationReport(
        "Thm4.6", instance, t_outer.text(), t_inner.text(),
        poly_geq(t_outer, t_inner), kind="theorem",
    )


def remark_4_7_instance() -> tuple[SimplicialComplex, SimplicialComplex, str]:
    """The canonical gap pair: the 4-fold edgewise cube of a tetrahedron.

    Returns (outer, inner, vertex): the corner vertex lies in a unique facet
    of the outer ball, and removing its star costs exactly x^2 of theta.
    """
    outer = edgewise(simplex(["a", "b", "c", "d"]), 4).total
    vertex = "a:4"
    containing = [f for f in outer.facets if vertex in outer.labels_of(f)]
    if len(containing) != 1:
        raise ConsistencyError("the corner vertex must lie in a unique facet")
    inner = outer.delete_vertex(vertex)
    return outer, inner, vertex


# ----------------------------------------------------------------- conjectures


def check_conjecture_5_3(
    c: SimplicialComplex, instance: str = ""
) -> VerificationReport:
    """gamma-positivity of theta for flag balls with induced boundary."""
    bd = verified_boundary(c) if not c.is_void else None
    reasons = []
    if bd is None or c.is_empty:
        reasons.append("not a verified ball")
    else:
        if not c.is_flag():
            reasons.append("not flag")
        if not is_induced_subcomplex(bd, c):
            reasons.append("boundary is not induced")
    if reasons:
        detail = ", ".join(reasons)
        if bd is not None and not c.is_empty:
            detail += f"; theta={theta_verified(c).text()}"
        return VerificationReport(
            "Conj5.3", instance, "", "", True, kind="conjecture",
            applicable=False, detail=detail,
        )
    th = theta_verified(c)
    n = c.dim + 1
    return VerificationReport(
        "Conj5.3", instance, th.text(), f"gamma-positive in window {n}",
        is_gamma_positive(th, n), kind="conjecture",
    )


def _gamma_poly(c: SimplicialComplex) -> IntPoly:
    return IntPoly(sphere_gamma(c).gammas)


def check_link_conjecture(
    c: SimplicialComplex, vertex: str, instance: str = ""
) -> VerificationReport:
    """Coefficientwise gamma domination of a flag sphere over a vertex link."""
    if not c.is_flag() or not _verified_sphere(c):
        return VerificationReport(
            "Prop5.5ii", instance, "", "", True, kind="conjecture",
            applicable=False, detail="not a verified flag sphere",
        )
    g_sphere = _gamma_poly(c)
    g_link = _gamma_poly(c.link((vertex,)))
    return VerificationReport(
        "Prop5.5ii", instance, g_sphere.text(), g_link.text(),
        poly_geq(g_sphere, g_link), kind="conjecture",
    )


def _link_conjecture_cross_checks(
    c: SimplicialComplex, vertex: str, instance: str
) -> list[VerificationReport]:
    """Ties the vertex-deletion ball to the link inequality on one instance.

    The deletion is a ball whose boundary is the vertex link, its theta is
    h of the sphere minus (1+x) times h of the link, and gamma-positivity of
    that theta is the same verdict as the link inequality.
    """
    out = []
    deleted = c.delete_vertex(vertex)
    bd = verified_boundary(deleted)
    link = c.link((vertex,))
    n = c.dim + 1
    boundary_is_link = bd == link
    th = theta_verified(deleted) if bd is not None else None
    if th is None or not boundary_is_link:
        out.append(VerificationReport(
            "Prop5.5proof", instance, "", "", False, kind="identity",
            detail="vertex deletion did not produce a ball bounded by the link",
        ))
        return out
    expected = h_poly(c) - IntPoly((1, 1)) * h_poly(link)
    gv = gamma_vector(th, n)
    gamma_of_theta = IntPoly(gv.gammas) if gv is not None else None
    gamma_diff = _gamma_poly(c) - _gamma_poly(link)
    out.append(VerificationReport(
        "Prop5.5proof", instance, th.text(), expected.text(),
        th == expected and gamma_of_theta == gamma_diff,
        kind="identity",
        detail="theta of the deletion from sphere and link h-polynomials; "
               "its gamma vector is the difference of theirs",
    ))
    ineq = poly_geq(_gamma_poly(c), _gamma_poly(link))
    gamma_ok = is_gamma_positive(th, n)
    out.append(VerificationReport(
        "Prop5.5equiv", instance, str(gamma_ok), str(ineq), gamma_ok == ineq,
        kind="theorem",
        detail="gamma-positivity of the deletion matches the link inequality",
    ))
    ball_verdict = check_conjecture_5_3(deleted, instance)
    out.append(VerificationReport(
        "Prop5.5equiv", instance, str(ball_verdict.passed), str(ineq),
        (not ball_verdict.applicable) or (ball_verdict.passed == ineq),
        kind="theorem", detail="deleted-ball conjecture verdict agreement",
    ))
    return out


def _prop_5_6_report(name: str, c: SimplicialComplex) -> VerificationReport | None:
    """Gamma-positive symmetric decomposition versus its two components."""
    bd = verified_boundary(c)
    if bd is None or c.is_empty or not c.is_flag():
        return None
    if not is_induced_subcomplex(bd, c):
        return None
    n = c.dim + 1
    dec = symmetric_decomposition(h_poly(c), n - 1)
    parts_gamma = (
        is_gamma_positive(dec.a, n - 1) and is_gamma_positive(dec.b, n - 2)
    )
    components = (
        is_gamma_positive(theta_verified(c), n)
        and is_gamma_positive(h_poly(bd), n - 1)
    )
    return VerificationReport(
        "Prop5.6equiv", name, str(parts_gamma), str(components),
        parts_gamma == components, kind="theorem",
        detail="decomposition gamma-positivity matches theta and boundary",
    )


def scan_theta_zero(
    instances: Iterable[tuple[str, SimplicialComplex]]
) -> list[tuple[str, SimplicialComplex]]:
    """Verified balls among the instances whose theta vanishes."""
    out = []
    for name, c in instances:
        if c.is_void or c.is_empty:
            continue
        bd = verified_boundary(c)
        if bd is None:
            continue
        if theta_verified(c).is_zero():
            out.append((name, c))
    return out


# ------------------------------------------------------------------ generators


def _rng(seed: int, klass: str, dim: int, index: int) -> random.Random:
    return random.Random(f"thetalab:{seed}:{klass}:{dim}:{index}")


def _facet_labels(c: SimplicialComplex) -> list[tuple[str, ...]]:
    return sorted(tuple(sorted(c.labels_of(f))) for f in c.facets)


def _attach_fresh(c: SimplicialComplex, rng: random.Random,
                  boundary_only: bool) -> SimplicialComplex:
    """Glue a new simplex along one ridge, using a fresh vertex."""
    pool = boundary_subcomplex(c) if boundary_only else None
    if pool is not None and not pool.is_void and pool.dim == c.dim - 1:
        ridges = _facet_labels(pool)
    else:
        ridges = sorted(
            tuple(sorted(c.labels_of(f))) for f in c.faces_of_dim(c.dim - 1)
        )
    ridge = rng.choice(ridges)
    new = fresh_label(c, "w")
    return SimplicialComplex.from_facets(_facet_labels(c) + [ridge + (new,)])


def _random_stellar(c: SimplicialComplex, rng: random.Random) -> SimplicialComplex:
    faces = [
        tuple(sorted(c.labels_of(f)))
        for f in _sorted_faces(c) if len(f) >= 1
    ]
    return stellar(c, rng.choice(faces)).total


def _grow_ball(rng: random.Random, dim: int, target_vertices: int,
               allow_stellar: bool = True) -> SimplicialComplex:
    c = simplex([f"v{i}" for i in range(dim + 1)])
    while len(c.vertices) < target_vertices:
        if allow_stellar and rng.random() < 0.3:
            c = _random_stellar(c, rng)
        else:
            c = _attach_fresh(c, rng, boundary_only=True)
    return c


def _sphere_from_ball(ball: SimplicialComplex, apex: str) -> SimplicialComplex:
    bd = boundary_subcomplex(ball)
    facets = _facet_labels(ball) + [
        tuple(sorted(bd.labels_of(f))) + (apex,) for f in bd.facets
    ]
    return SimplicialComplex.from_facets(facets)


def _suspension(c: SimplicialComplex, north: str, south: str) -> SimplicialComplex:
    facets = []
    for f in c.facets:
        labels = tuple(sorted(c.labels_of(f)))
        facets.append(labels + (north,))
        facets.append(labels + (south,))
    return SimplicialComplex.from_facets(facets)


def _grow_flag_sphere(rng: random.Random, dim: int,
                      target_vertices: int) -> SimplicialComplex:
    c = cycle(rng.randint(4, 6))
    for level in range(dim - 1):
        c = _suspension(c, f"n{level}", f"s{level}")
    while len(c.vertices) < target_vertices:
        edges = sorted(
            tuple(sorted(c.labels_of(f))) for f in c.faces_of_dim(1)
        )
        c = stellar(c, rng.choice(edges)).total
    return c


@dataclasses.dataclass(frozen=True)
class InstanceGenerator:
    """Seeded stream of verified random complexes of one class.

    Supported classes: ball, sphere, CM, flag-sphere, flag-ball.  Streams are
    reproducible: each instance is derived only from (seed, class, dimension,
    index), so splitting work across threads cannot reorder or change them.
    """

    seed: int
    klass: str
    max_dim: int = 3
    max_vertices: int = 12

    def _one(self, dim: int, index: int) -> SimplicialComplex:
        rng = _rng(self.seed, self.klass, dim, index)
        budget = min(self.max_vertices, dim + 2 + rng.randint(1, 5))
        if self.klass == "ball":
            c = _grow_ball(rng, dim, budget)
            if is_homology_ball(c) is None:
                raise ConsistencyError("ball growth produced a non-ball")
            return c
        if self.klass == "sphere":
            ball = _grow_ball(rng, dim, budget - 1)
            c = _sphere_from_ball(ball, fresh_label(ball, "apex"))
            if not is_homology_sphere(c):
                raise ConsistencyError("sphere construction failed")
            return c
        if self.klass == "CM":
            mode = rng.choice(["ball", "sphere", "loose"])
            if mode == "loose":
                for _ in range(6):
                    c = simplex([f"v{i}" for i in range(dim + 1)])
                    while len(c.vertices) < budget:
                        c = _attach_fresh(c, rng, boundary_only=False)
                    if is_cohen_macaulay(c):
                        return c
                mode = "ball"
            if mode == "sphere":
                ball = _grow_ball(rng, dim, budget - 1)
                return _sphere_from_ball(ball, fresh_label(ball, "apex"))
            return _grow_ball(rng, dim, budget)
        if self.klass == "flag-sphere":
            c = _grow_flag_sphere(rng, dim, budget)
            if not c.is_flag() or not is_homology_sphere(c):
                raise ConsistencyError("flag sphere construction failed")
            return c
        if self.klass == "flag-ball":
            sphere = _grow_flag_sphere(rng, dim, budget)
            vertex = rng.choice(sorted(sphere.vertex_labels))
            c = sphere.delete_vertex(vertex)
            if rng.random() < 0.4:
                edges = sorted(
                    tuple(sorted(c.labels_of(f))) for f in c.faces_of_dim(1)
                )
                c = stellar(c, rng.choice(edges)).total
            if not c.is_flag() or is_homology_ball(c) is None:
                raise ConsistencyError("flag ball construction failed")
            return c
        raise PreconditionError(f"unknown instance class {self.klass!r}")

    def instances(self, per_dim: int,
                  dims: Sequence[int] | None = None
                  ) -> list[tuple[str, SimplicialComplex]]:
        if dims is None:
            dims = range(1, self.max_dim + 1)
        out = []
        for dim in dims:
            for index in range(per_dim):
                name = f"{self.klass}[s{self.seed} d{dim} i{index}]"
                out.append((name, self._one(dim, index)))
        return out


def nested_ball_pairs(
    seed: int, max_dim: int, count: int
) -> list[tuple[str, SimplicialComplex, SimplicialComplex]]:
    """Pairs (name, inner, outer) of equal-dimension balls, inner inside outer.

    Grown by facet attachments only, so the earlier snapshot is a subcomplex
    of the later one.
    """
    out = []
    for dim in range(2, max_dim + 1):
        for index in range(count):
            rng = _rng(seed, "pair", dim, index)
            inner = _grow_ball(rng, dim, dim + 2 + rng.randint(0, 2),
                               allow_stellar=False)
            outer = inner
            extra = rng.randint(1, 3)
            for _ in range(extra):
                outer = _attach_fresh(outer, rng, boundary_only=True)
            name = f"pair[s{seed} d{dim} i{index}]"
            out.append((name, inner, outer))
    return out


# ------------------------------------------------------------------ the suites


def _triangulations_of(
    bases: list[tuple[str, SimplicialComplex]]
) -> list[tuple[str, str, SimplicialComplex, Triangulation]]:
    out = []
    for bname, base in bases:
        for kname, maker in subdivision_kinds():
            out.append((f"{kname}({bname})", kname, base, maker(base)))
    return out


def _bases(max_dim: int) -> list[tuple[str, SimplicialComplex]]:
    return [(n, c) for n, c in corpus() if c.dim is not None and c.dim <= max_dim]


def _generated_balls(seed: int, max_dim: int, samples: int):
    gen = InstanceGenerator(seed, "ball", max_dim)
    return gen.instances(samples, dims=range(1, max_dim + 1))


def _locality_tasks(seed: int, max_dim: int, samples: int) -> list[Callable]:
    bases = _bases(max_dim) + _generated_balls(seed, max_dim, max(1, samples // 2))

    def make(inst, kname, tri):
        return lambda: [verify_locality(tri, inst, kname)]

    return [
        make(inst, kname, tri)
        for inst, kname, base, tri in _triangulations_of(bases)
    ]


def _theta_tasks(seed: int, max_dim: int, samples: int) -> list[Callable]:
    bases = _bases(max_dim)
    generated = _generated_balls(seed, max_dim, samples)
    tasks: list[Callable] = []

    for inst, kname, base, tri in _triangulations_of(bases):
        tasks.append(lambda inst=inst, kname=kname, tri=tri:
                     [verify_theta_formula(tri, inst, kname)])
        tasks.append(lambda inst=inst, kname=kname, base=base, tri=tri:
                     _h_corollary_reports(inst, kname, base, tri))

    for name, c in bases + generated:
        tasks.append(lambda name=name, c=c: ball_basics_reports(name, c))

    tasks.append(lambda: _pnk_structure_reports(max_n=8))
    for name, c in bases:
        tasks.append(lambda name=name, c=c: _prop_2_3_reports(name, c))
    return tasks


def _h_corollary_reports(
    inst: str, kname: str, base: SimplicialComplex, tri: Triangulation
) -> list[VerificationReport]:
    """The h-polynomial conclusions drawn from theta classes of the cover."""
    profile = base_profile(base)
    n = base.dim + 1
    out: list[VerificationReport] = []
    flags = triangulation_theta_flags(tri, kname)
    h_total = h_poly(tri.total)
    h_sd = _sd_invariants(base)[0]
    diff = h_total - h_sd

    if profile.is_cm and flags.positive:
        out.append(VerificationReport(
            "Cor3.7a", inst, h_total.text(), h_sd.text(),
            poly_geq(h_total, h_sd), kind="theorem",
        ))
    if profile.is_cm and flags.unimodal:
        peaks = (n // 2,) if n % 2 == 0 else ((n - 1) // 2, (n + 1) // 2)
        out.append(VerificationReport(
            "Cor3.8a", inst, h_total.text(), f"peak in {peaks}",
            _peaked(h_total, n, peaks), kind="theorem",
        ))
        out.append(VerificationReport(
            "Cor3.8a-diff", inst, diff.text(), "unimodal",
            is_nonnegative(diff) and is_unimodal(diff), kind="theorem",
        ))
    if profile.is_sphere:
        if flags.unimodal:
            out.append(VerificationReport(
                "Cor3.9a", inst, h_total.text(), "unimodal",
                is_nonnegative(h_total) and is_unimodal(h_total),
                kind="theorem",
            ))
        if flags.gamma_positive:
            out.append(VerificationReport(
                "Cor3.9a-gamma", inst, h_total.text(),
                f"gamma-positive in window {n}",
                is_gamma_positive(h_total, n), kind="theorem",
            ))
            out.append(VerificationReport(
                "Cor3.9a-gamma-diff", inst, diff.text(),
                f"gamma-positive in window {n}",
                is_gamma_positive(diff, n), kind="theorem",
            ))
    if profile.is_cm_star and flags.unimodal:
        out.append(_decomposition_report(
            "Cor3.9b", inst, h_total, n, gamma=flags.gamma_positive))
    if profile.is_ball and flags.unimodal:
        out.append(_decomposition_report(
            "Cor3.9c", inst, h_total, n - 1, gamma=flags.gamma_positive))

    if kname == "antiprism":
        if profile.is_cm:
            peaks = (n // 2,) if n % 2 == 0 else ((n - 1) // 2, (n + 1) // 2)
            out.append(VerificationReport(
                "Cor6.1a", inst, h_total.text(), f"peak in {peaks}",
                is_nonnegative(h_total) and _peaked(h_total, n, peaks),
                kind="theorem",
            ))
        if profile.is_sphere:
            out.append(VerificationReport(
                "Cor6.1b", inst, h_total.text(),
                f"gamma-positive in window {n}",
                is_gamma_positive(h_total, n), kind="theorem",
            ))
        if profile.is_cm_star:
            out.append(_decomposition_report(
                "Cor6.1c", inst, h_total, n, gamma=True))
        if profile.is_ball:
            out.append(_decomposition_report(
                "Cor6.1d", inst, h_total, n - 1, gamma=True))
    return out


def _peaked(p: IntPoly, n: int, peaks: Sequence[int]) -> bool:
    c = p.padded(n + 1)
    for peak in peaks:
        up = all(c[i] <= c[i + 1] for i in range(peak))
        down = all(c[i] >= c[i + 1] for i in range(peak, n))
        if up and down:
            return True
    return False


def _decomposition_report(
    ident: str, inst: str, p: IntPoly, window: int, gamma: bool
) -> VerificationReport:
    try:
        dec = symmetric_decomposition(p, window)
    except (ConsistencyError, PreconditionError) as exc:
        return VerificationReport(
            ident, inst, p.text(), "", False, kind="theorem", detail=str(exc)
        )
    ok = (is_nonnegative(dec.a) and is_unimodal(dec.a)
          and is_nonnegative(dec.b) and is_unimodal(dec.b))
    if gamma:
        ok = ok and (dec.a.is_zero() or is_gamma_positive(dec.a, window))
        ok = ok and (dec.b.is_zero() or is_gamma_positive(dec.b, window - 1))
    return VerificationReport(
        ident, inst, f"a={dec.a.text()}", f"b={dec.b.text()}", ok,
        kind="theorem",
        detail="unimodal parts" + (" and gamma-positive" if gamma else ""),
    )


def _pnk_structure_reports(max_n: int) -> list[VerificationReport]:
    """Reversal symmetry and decomposability of the subdivision transform rows."""
    out = []
    for n in range(max_n + 1):
        row_ok = all(
            reverse(pnk(n, k), n) == pnk(n, n - k) for k in range(n + 1)
        )
        out.append(VerificationReport(
            "Prop2.2", f"p[{n},*]", f"{n + 1} polynomials",
            "reversal symmetry", row_ok, kind="theorem",
        ))
        lemma_ok = True
        for k in range((n + 1) // 2, n + 1):
            dec = symmetric_decomposition(pnk(n, k), n)
            lemma_ok = lemma_ok and is_nonnegative(dec.a) and is_nonnegative(dec.b)
            lemma_ok = lemma_ok and is_real_rooted(dec.a) and is_real_rooted(dec.b)
        out.append(VerificationReport(
            "Lem2.4", f"p[{n},*]", "symmetric decompositions",
            "nonnegative and real-rooted", lemma_ok, kind="theorem",
        ))
    return out


def _prop_2_3_reports(name: str, c: SimplicialComplex) -> list[VerificationReport]:
    """Three-part decomposition of h of the barycentric subdivision.

    Constructive witness: split each transform row at its own center and
    group the halves by the three centers of symmetry.
    """
    profile = base_profile(c)
    if not profile.is_cm or c.is_empty or c.is_void:
        return []
    n = c.dim + 1
    hs = h_vector(c)
    low = IntPoly.zero()
    mid = IntPoly.zero()
    high = IntPoly.zero()
    for k in range(n + 1):
        if hs[k] == 0:
            continue
        if 2 * k >= n:
            # p[n,k] = a + x b with a symmetric about n/2, b about (n-1)/2
            dec = symmetric_decomposition(pnk(n, k), n)
            mid = mid + dec.a * hs[k]
            high = high + IntPoly((0,) + dec.b.coeffs) * hs[k]
        else:
            # reversal carries the split of p[n,n-k] to p[n,k] = a + b
            dec = symmetric_decomposition(pnk(n, n - k), n)
            mid = mid + dec.a * hs[k]
            low = low + dec.b * hs[k]
    h_sd = _sd_invariants(c)[0]
    total_ok = low + mid + high == h_sd
    parts_ok = True
    for part, center in ((low, n - 1), (mid, n), (high, n + 1)):
        if part.is_zero():
            continue
        parts_ok = parts_ok and is_nonnegative(part) and is_unimodal(part)
        parts_ok = parts_ok and is_symmetric(part, center)
    peaks = (n // 2,) if n % 2 == 0 else ((n - 1) // 2, (n + 1) // 2)
    peak_ok = _peaked(h_sd, n, peaks)
    return [VerificationReport(
        "Prop2.3", name,
        f"low={low.text()}; mid={mid.text()}; high={high.text()}",
        h_sd.text(), total_ok and parts_ok and peak_ok, kind="theorem",
        detail="three symmetric unimodal parts with adjacent centers",
    )]


def _kms_tasks(seed: int, max_dim: int, samples: int) -> list[Callable]:
    simplex_bases = [
        (n, c) for n, c in _bases(max_dim) if len(c.facets) == 1
    ]
    tasks: list[Callable] = []
    for inst, kname, base, tri in _triangulations_of(simplex_bases):
        tasks.append(lambda inst=inst, kname=kname, tri=tri:
                     [verify_kms(tri, inst, kname)])
        tasks.append(lambda inst=inst, kname=kname, base=base, tri=tri:
                     _local_h_corollary_reports(inst, kname, base, tri))
    tasks.append(lambda: _derangement_reports(max_n=6))
    tasks.append(lambda: _iterated_local_h_reports(max_dim))
    return tasks


def _local_h_corollary_reports(
    inst: str, kname: str, base: SimplicialComplex, tri: Triangulation
) -> list[VerificationReport]:
    nverts = len(base.vertices)
    flags = triangulation_theta_flags(tri, kname)
    ell = _local_h_cached(tri)
    d_n = derangement_poly(nverts)
    out = []
    if flags.positive:
        out.append(VerificationReport(
            "Cor3.7b", inst, ell.text(), d_n.text(), poly_geq(ell, d_n),
            kind="theorem",
        ))
    if flags.unimodal:
        out.append(VerificationReport(
            "Cor3.8b", inst, ell.text(), "unimodal",
            is_nonnegative(ell) and is_unimodal(ell), kind="theorem",
        ))
    if flags.gamma_positive:
        out.append(VerificationReport(
            "Cor3.8b-gamma", inst, ell.text(),
            f"gamma-positive in window {nverts}",
            is_gamma_positive(ell, nverts), kind="theorem",
        ))
    return out


def _derangement_reports(max_n: int) -> list[VerificationReport]:
    out = []
    for n in range(max_n + 1):
        d = derangement_poly(n)
        out.append(VerificationReport(
            "d_n-gamma", f"d_{n}", d.text(),
            f"gamma-positive in window {n}", is_gamma_positive(d, n),
            kind="theorem",
        ))
    return out


def _iterated_local_h_reports(max_dim: int) -> list[VerificationReport]:
    """Local h of twice-subdivided simplexes: domination and gamma checks.

    Covers the unimodality and gamma-positivity statements for
    triangulations of triangulations, and the gamma-positivity of the
    antiprism of any simplex triangulation.
    """
    out = []
    inner_kinds = [
        ("identity", identity),
        ("stellar", _stellar_first),
        ("esd2", lambda c: edgewise(c, 2)),
    ]
    outer_kinds = [
        ("sd", barycentric, "sd"),
        ("antiprism", antiprism, "antiprism"),
        ("esd2", lambda c: edgewise(c, 2), "esd2"),
    ]
    for dim in range(1, max_dim + 1):
        base = simplex([f"v{i}" for i in range(dim + 1)])
        nverts = dim + 1
        for iname, imaker in inner_kinds:
            inner = imaker(base)
            sd_inner = compose(barycentric(inner.total), inner)
            ell_sd = _local_h_cached(sd_inner)
            for oname, omaker, okind in outer_kinds:
                if okind == "antiprism" and dim >= 3 and iname != "identity":
                    continue
                outer = omaker(inner.total)
                composed = compose(outer, inner)
                inst = f"{oname}({iname}(simplex{dim}))"
                ell = _local_h_cached(composed)
                flags = triangulation_theta_flags(outer, okind)
                if flags.unimodal:
                    ok = is_nonnegative(ell) and is_unimodal(ell)
                    diff = ell - ell_sd
                    ok = ok and is_nonnegative(diff) and is_unimodal(diff)
                    out.append(VerificationReport(
                        "Cor4.4", inst, ell.text(), ell_sd.text(), ok,
                        kind="theorem", detail="unimodal, dominates sd",
                    ))
                if flags.gamma_positive:
                    ok = is_gamma_positive(ell, nverts) and is_gamma_positive(
                        ell - ell_sd, nverts)
                    out.append(VerificationReport(
                        "Cor4.4-gamma", inst, ell.text(), ell_sd.text(), ok,
                        kind="theorem",
                    ))
                if okind == "antiprism":
                    out.append(VerificationReport(
                        "Cor6.2", inst, ell.text(),
                        f"gamma-positive in window {nverts}",
                        is_gamma_positive(ell, nverts), kind="theorem",
                    ))
    return out


def _monotone_tasks(seed: int, max_dim: int, samples: int) -> list[Callable]:
    bases = _bases(max_dim) + _generated_balls(seed, max_dim, max(1, samples // 2))
    ball_bases = []
    for name, c in bases:
        if not c.is_void and not c.is_empty and verified_boundary(c) is not None:
            ball_bases.append((name, c))

    tasks: list[Callable] = []
    for inst, kname, base, tri in _triangulations_of(ball_bases):
        tasks.append(lambda inst=inst, kname=kname, base=base, tri=tri:
                     _monotone_instance_reports(inst, kname, base, tri))
    for name, c in ball_bases:
        tasks.append(lambda name=name, c=c: _rem43_reports(name, c))
    tasks.append(_remark_4_7_reports)
    tasks.append(lambda: _pair_reports(seed, max_dim, samples))
    return tasks


def _monotone_instance_reports(
    inst: str, kname: str, base: SimplicialComplex, tri: Triangulation
) -> list[VerificationReport]:
    out = []
    try:
        out.append(verify_monotonicity_a(base, tri, inst, kname))
    except PreconditionError as exc:
        out.append(VerificationReport(
            "Thm4.1", inst, "", "", True, kind="theorem",
            applicable=False, detail=str(exc),
        ))
    out.extend(_monotone_proof_identities(base, tri, inst, kname))
    flags = triangulation_theta_flags(tri, kname)
    try:
        out.append(verify_monotonicity_b(base, tri, inst, kname))
    except PreconditionError as exc:
        out.append(VerificationReport(
            "Thm4.2", inst, "", "", True, kind="theorem",
            applicable=False, detail=str(exc),
        ))
    out.extend(_monotonicity_b_parts(base, tri, inst, flags))
    return out


def _rem43_reports(name: str, c: SimplicialComplex) -> list[VerificationReport]:
    bd = verified_boundary(c)
    closed = theta_sd_closed_form(c, bd)
    direct = _sd_invariants(c)[1]
    assert direct is not None
    out = [VerificationReport(
        "Rem4.3", name, closed.text(), direct.text(), closed == direct,
        kind="identity", detail="closed form against the built subdivision",
    )]
    out.append(VerificationReport(
        "Rem4.3ineq", name, direct.text(), theta_verified(c).text(),
        poly_geq(direct, theta_verified(c)), kind="theorem",
        detail="barycentric subdivision does not decrease theta",
    ))
    return out


def _remark_4_7_reports() -> list[VerificationReport]:
    outer, inner, vertex = remark_4_7_instance()
    gap = IntPoly((0, 0, 1))
    inst = f"esd4(simplex3) minus star({vertex})"
    out = [verify_monotonicity_c(outer, inner, inst, expected_gap=gap)]
    bd_outer = verified_boundary(outer)
    assert bd_outer is not None
    out.append(VerificationReport(
        "Rem4.7", inst, str(has_interior_vertex_property(outer, bd_outer)),
        "False", not has_interior_vertex_property(outer, bd_outer),
        kind="theorem",
        detail="the gap family never has the interior vertex property",
    ))
    return out


def _pair_reports(seed: int, max_dim: int, samples: int) -> list[VerificationReport]:
    pairs = list(nested_ball_pairs(seed, max_dim, samples))
    # barycentric labels depend only on the carrier face, so subdividing a
    # sub-ball yields a labeled subcomplex of the subdivided ball; every
    # facet then owns an interior facet barycenter, satisfying the
    # no-boundary-facet hypothesis nontrivially
    for name, inner, outer in list(pairs):
        pairs.append((
            f"sd-{name}", barycentric(inner).total, barycentric(outer).total,
        ))
    out = []
    for name, inner, outer in pairs:
        try:
            out.append(verify_monotonicity_c(outer, inner, name))
        except PreconditionError as exc:
            out.append(VerificationReport(
                "Thm4.6", name, "", "", True, kind="theorem",
                applicable=False, detail=str(exc),
            ))
            continue
        bd_inner = verified_boundary(inner)
        bd_outer = verified_boundary(outer)
        if bd_inner is None or bd_outer is None:
            continue
        both_ivp = (has_interior_vertex_property(inner, bd_inner)
                    and has_interior_vertex_property(outer, bd_outer))
        if both_ivp:
            holds = poly_geq(theta_verified(outer), theta_verified(inner))
            out.append(VerificationReport(
                "Q4.5", name, theta_verified(outer).text(),
                theta_verified(inner).text(), holds, kind="evidence",
                detail="both balls have the interior vertex property",
            ))
    return out


def _conjecture_tasks(seed: int, max_dim: int, samples: int) -> list[Callable]:
    tasks: list[Callable] = []

    flag_balls = [("ball_5_4", example_5_4_ball())]
    flag_balls += InstanceGenerator(seed, "flag-ball", max_dim).instances(
        samples, dims=range(2, max_dim + 1))
    for name, c in flag_balls:
        if c.dim is not None and c.dim > max_dim:
            continue
        tasks.append(lambda name=name, c=c: _conjecture_ball_reports(name, c))

    flag_spheres = [("octahedron", octahedron()),
                    ("cross4", cross_polytope_boundary(4)),
                    ("cycle5", cycle(5))]
    flag_spheres += InstanceGenerator(seed, "flag-sphere", max_dim).instances(
        samples, dims=range(1, max_dim + 1))
    for name, c in flag_spheres:
        if c.dim is not None and c.dim > max_dim:
            continue
        tasks.append(lambda name=name, c=c: _sphere_link_reports(name, c))

    tasks.append(lambda: _theta_zero_reports(seed, max_dim, samples))
    tasks.append(lambda: _real_rootedness_reports(max_dim))
    return tasks


def _conjecture_ball_reports(name: str, c: SimplicialComplex) -> list[VerificationReport]:
    out = [check_conjecture_5_3(c, name)]
    extra = _prop_5_6_report(name, c)
    if extra is not None:
        out.append(extra)
    return out


def _sphere_link_reports(name: str, c: SimplicialComplex) -> list[VerificationReport]:
    out = []
    vertices = sorted(c.vertex_labels)
    if c.dim is not None and c.dim >= 3 and len(vertices) > 4:
        rng = _rng(0, "linkpick", c.dim, len(vertices))
        vertices = sorted(rng.sample(vertices, 4))
    for v in vertices:
        inst = f"{name}@{v}"
        out.append(check_link_conjecture(c, v, inst))
        if out[-1].applicable:
            out.extend(_link_conjecture_cross_checks(c, v, inst))
    return out


def _theta_zero_reports(seed: int, max_dim: int, samples: int) -> list[VerificationReport]:
    instances = [(n, c) for n, c in _bases(max_dim)]
    instances.append(("esd4(simplex3)", edgewise(simplex(list("abcd")), 4).total))
    instances += _generated_balls(seed, max_dim, samples)
    hits = scan_theta_zero(instances)
    hit_names = {n for n, _ in hits}
    out = []
    for name, c in instances:
        if c.is_void or c.is_empty or verified_boundary(c) is None:
            continue
        out.append(VerificationReport(
            "Q3.10", name, theta_verified(c).text(), "0",
            True, kind="evidence",
            detail="theta vanishes" if name in hit_names else "theta is nonzero",
        ))
    return out


def _real_rootedness_reports(max_dim: int) -> list[VerificationReport]:
    """Real-rootedness scan of local h under repeated subdivisions."""
    out = []
    inner_kinds = [
        ("identity", identity),
        ("stellar", _stellar_first),
        ("esd2", lambda c: edgewise(c, 2)),
    ]
    for dim in range(1, max_dim + 1):
        base = simplex([f"v{i}" for i in range(dim + 1)])
        for iname, imaker in inner_kinds:
            inner = imaker(base)
            targets = [("sd", compose(barycentric(inner.total), inner))]
            if dim <= 2 or iname == "identity":
                targets.append(
                    ("antiprism", compose(antiprism(inner.total), inner)))
            for oname, composed in targets:
                ell = _local_h_cached(composed)
                inst = f"{oname}({iname}(simplex{dim}))"
                out.append(VerificationReport(
                    "Q6.3", inst, ell.text(), "real-rooted",
                    is_real_rooted(ell), kind="evidence",
                ))
    return out


def scan_reports(
    kind: str, seed: int = 0, max_dim: int = 3, samples: int = 3
) -> list[VerificationReport]:
    """Evidence reports for one exploratory scan: theta-zero or real-rooted."""
    if kind == "theta-zero":
        return _theta_zero_reports(seed, max_dim, samples)
    if kind == "real-rooted":
        return _real_rootedness_reports(max_dim)
    raise PreconditionError(
        f"unknown scan kind {kind!r}; use theta-zero or real-rooted")


# ------------------------------------------------------------------- execution


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        raw = os.environ.get("THETA_LAB_THREADS", "")
        if raw:
            try:
                threads = int(raw)
            except ValueError:
                raise PreconditionError(
                    f"THETA_LAB_THREADS must be an integer, got {raw!r}"
                ) from None
        else:
            threads = 1
    if threads < 1:
        raise PreconditionError("thread count must be at least 1")
    return threads


def _execute(tasks: list[Callable], threads: int) -> list[VerificationReport]:
    if threads <= 1:
        chunks = [task() for task in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda task: task(), tasks))
    return [r for chunk in chunks for r in chunk]


def run_suite(
    suite: str = "all",
    seed: int = 0,
    max_dim: int = 3,
    samples: int = 3,
    threads: int | None = None,
) -> list[VerificationReport]:
    """Run one named suite (or all of them) and return its reports.

    Reports come back in a deterministic order for fixed arguments,
    independently of the thread count.
    """
    if suite not in SUITES:
        raise PreconditionError(f"unknown suite {suite!r}; choose from {SUITES}")
    if max_dim < 1:
        raise PreconditionError("max_dim must be at least 1")
    threads = _resolve_threads(threads)
    tasks: list[Callable] = []
    if suite in ("locality", "all"):
        tasks += _locality_tasks(seed, max_dim, samples)
    if suite in ("theta", "all"):
        tasks += _theta_tasks(seed, max_dim, samples)
    if suite in ("kms", "all"):
        tasks += _kms_tasks(seed, max_dim, samples)
    if suite in ("monotone", "all"):
        tasks += _monotone_tasks(seed, max_dim, samples)
    if suite in ("conjectures", "all"):
        tasks += _conjecture_tasks(seed, max_dim, samples)
    return _execute(tasks, threads)
