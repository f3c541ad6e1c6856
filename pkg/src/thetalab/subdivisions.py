"""Triangulations of simplicial complexes with explicit carrier maps.

A Triangulation records a base complex, a total complex refining it, and the
carrier of every face of the total complex: the base face it lives in.  The
carrier of a face always equals the union of the carriers of its vertices,
which is what lets the file format round-trip from vertex data alone.

Constructors: identity, barycentric, antiprism, stellar, edgewise, compose.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Mapping

from .complexes import (
    Face,
    SimplicialComplex,
    _SECTION_TOKEN,
    _ARROW,
    _COMMENT,
    _EMPTY_FACE_TOKEN,
    fresh_label,
    parse_facet_text,
    simplex,
)
from .errors import (
    FileFormatError,
    InvalidTriangulationError,
    MalformedFaceError,
    NotAFaceError,
    PreconditionError,
)

LabelSet = frozenset[str]


def _labelset(complex_: SimplicialComplex, face: Face) -> LabelSet:
    return frozenset(complex_.labels_of(face))


class Triangulation:
    """A total complex refining a base complex, with face carriers."""

    __slots__ = ("_base", "_total", "_carrier")

    def __init__(
        self,
        base: SimplicialComplex,
        total: SimplicialComplex,
        carrier: Mapping[Iterable[str] | Face, Iterable[str] | Face],
        *,
        validate: bool = True,
    ):
        self._base = base
        self._total = total
        norm: dict[LabelSet, LabelSet] = {}
        for key, value in carrier.items():
            kface = total._face_arg(tuple(key))
            vface = base._face_arg(tuple(value))
            kset = _labelset(total, kface)
            if kset in norm and norm[kset] != _labelset(base, vface):
                raise InvalidTriangulationError(
                    f"conflicting carriers for face {sorted(kset)}"
                )
            norm[kset] = _labelset(base, vface)
        self._carrier = norm
        expected = {_labelset(total, f) for f in total.faces()} if not total.is_void else set()
        if set(norm) != expected:
            missing = expected - set(norm)
            extra = set(norm) - expected
            raise InvalidTriangulationError(
                f"carrier map must cover every face of the total complex exactly"
                f" ({len(missing)} missing, {len(extra)} extra)"
            )
        if validate:
            self.validate()

    @property
    def base(self) -> SimplicialComplex:
        return self._base

    @property
    def total(self) -> SimplicialComplex:
        return self._total

    def carrier_of(self, face) -> Face:
        """Carrier of a total face, as a face (id tuple) of the base."""
        kface = self._total._face_arg(face if isinstance(face, tuple) else tuple(face))
        labels = self._carrier[_labelset(self._total, kface)]
        return self._base.face(sorted(labels))

    def carrier_labels(self, face) -> tuple[str, ...]:
        kface = self._total._face_arg(face if isinstance(face, tuple) else tuple(face))
        return tuple(sorted(self._carrier[_labelset(self._total, kface)]))

    @property
    def carrier_map(self) -> dict[LabelSet, LabelSet]:
        """Carrier assignments keyed by label sets (copy)."""
        return dict(self._carrier)

    def validate(self) -> None:
        """Check the triangulation axioms, raising on any violation.

        Besides bookkeeping (carriers are base faces, the empty face maps to
        itself, carriers are unions of vertex carriers), this checks that the
        restriction to every base face is pure of the right dimension and has
        the Euler characteristic of a ball, with vertices restricting to
        single points.
        """
        base, total = self._base, self._total
        if base.is_void != total.is_void:
            raise InvalidTriangulationError("exactly one of base and total is void")
        if total.is_void:
            return
        car = self._carrier
        if car[frozenset()] != frozenset():
            raise InvalidTriangulationError("the empty face must carry to the empty face")
        vertex_carrier = {
            ls: car[ls] for ls in car if len(ls) == 1
        }
        for ls, value in car.items():
            if len(ls) <= 1:
                continue
            union: set[str] = set()
            for v in ls:
                union |= vertex_carrier[frozenset((v,))]
            if frozenset(union) != value:
                raise InvalidTriangulationError(
                    f"carrier of {sorted(ls)} is {sorted(value)} but its vertex"
                    f" carriers union to {sorted(union)}"
                )
        buckets: dict[LabelSet, list[LabelSet]] = {}
        for ls, value in car.items():
            buckets.setdefault(value, []).append(ls)
        if buckets.get(frozenset(), []) != [frozenset()]:
            raise InvalidTriangulationError(
                "only the empty face may have an empty carrier"
            )
        for bface in base.faces():
            fset = _labelset(base, bface)
            if not fset:
                continue
            members: list[LabelSet] = []
            for k in range(len(bface) + 1):
                for sub in itertools.combinations(sorted(fset), k):
                    members.extend(buckets.get(frozenset(sub), ()))
            # members are downward closed (carriers are vertex unions), so a
            # face is maximal exactly when no one-vertex extension is present
            size = len(fset)
            dropped: set[LabelSet] = set()
            for m in members:
                for v in m:
                    dropped.add(m - {v})
            has_top = False
            for m in members:
                if len(m) == size:
                    has_top = True
                elif len(m) > size:
                    raise InvalidTriangulationError(
                        f"restriction to {sorted(fset)} has a face of dimension"
                        f" above dim {size - 1}"
                    )
                elif m and m not in dropped:
                    raise InvalidTriangulationError(
                        f"restriction to {sorted(fset)} is not pure:"
                        f" {sorted(m)} is maximal"
                    )
            if not has_top:
                raise InvalidTriangulationError(
                    f"restriction to {sorted(fset)} has no face of full dimension"
                )
            euler = sum(-1 if len(m) % 2 == 0 else 1 for m in members if m)
            if euler != 1:
                raise InvalidTriangulationError(
                    f"restriction to {sorted(fset)} has reduced Euler"
                    f" characteristic {euler - 1}, expected 0"
                )
            if size == 1 and sum(1 for m in members if m) != 1:
                raise InvalidTriangulationError(
                    f"restriction to the vertex {sorted(fset)} must be a single point"
                )

    def restriction(self, face) -> "Triangulation":
        """The induced triangulation of a base face (a simplex)."""
        bface = self._base._face_arg(face if isinstance(face, tuple) else tuple(face))
        fset = _labelset(self._base, bface)
        inside = [ls for ls, value in self._carrier.items() if value <= fset]
        # inside is downward closed, so maximal faces are those that are not
        # one vertex short of another member
        dropped: set[LabelSet] = set()
        for ls in inside:
            for v in ls:
                dropped.add(ls - {v})
        maximal = [ls for ls in inside if ls and ls not in dropped]
        if not maximal and inside:
            maximal = [frozenset()]
        total = SimplicialComplex.from_facets([sorted(m) for m in maximal])
        sub_base = simplex(sorted(fset))
        carrier = {tuple(sorted(ls)): tuple(sorted(self._carrier[ls])) for ls in inside}
        return Triangulation(sub_base, total, carrier, validate=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Triangulation)
            and self._base == other._base
            and self._total == other._total
            and self._carrier == other._carrier
        )

    def __hash__(self) -> int:
        return hash((self._base, self._total))

    def __repr__(self) -> str:
        b = len(self._base.facets) if not self._base.is_void else 0
        t = len(self._total.facets) if not self._total.is_void else 0
        return f"Triangulation({b} base facets -> {t} total facets)"


# ------------------------------------------------------------- constructors


def identity(complex_: SimplicialComplex) -> Triangulation:
    """The trivial triangulation: every face is its own carrier."""
    if complex_.is_void:
        return Triangulation(complex_, complex_, {}, validate=False)
    carrier = {}
    for f in complex_.faces():
        labels = tuple(sorted(complex_.labels_of(f)))
        carrier[labels] = labels
    return Triangulation(complex_, complex_, carrier, validate=False)


def _register_label(mapping: dict[str, LabelSet], label: str, value: LabelSet) -> None:
    if label in mapping and mapping[label] != value:
        raise PreconditionError(
            f"base labels make the subdivision label {label!r} ambiguous"
        )
    mapping[label] = value


def barycentric(complex_: SimplicialComplex) -> Triangulation:
    """The barycentric subdivision: vertices are nonempty faces, faces are chains."""
    if complex_.is_void or complex_.is_empty:
        return identity(complex_)
    vertex_carrier: dict[str, LabelSet] = {}

    def vlabel(idface: Face) -> str:
        labels = sorted(complex_.labels_of(idface))
        lab = "{" + ",".join(labels) + "}"
        _register_label(vertex_carrier, lab, frozenset(labels))
        return lab

    chains: list[tuple[str, ...]] = []
    for facet in complex_.facets:
        for perm in itertools.permutations(facet):
            acc: list[int] = []
            chain = []
            for v in perm:
                acc.append(v)
                chain.append(vlabel(tuple(sorted(acc))))
            chains.append(tuple(sorted(chain)))
    total = SimplicialComplex.from_facets(chains)
    carrier: dict[tuple[str, ...], tuple[str, ...]] = {(): ()}
    for f in total.faces():
        labels = total.labels_of(f)
        if not labels:
            continue
        union: set[str] = set()
        for lab in labels:
            union |= vertex_carrier[lab]
        carrier[tuple(sorted(labels))] = tuple(sorted(union))
    return Triangulation(complex_, total, carrier)


def _maximal_cliques(nodes: list, adjacency: dict) -> list[frozenset]:
    """Bron-Kerbosch with pivoting; adjacency maps node -> set of neighbours."""
    cliques: list[frozenset] = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adjacency[u] & p))
        for v in list(p - adjacency[pivot]):
            expand(r | {v}, p & adjacency[v], x & adjacency[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(nodes), set())
    return cliques


def antiprism(complex_: SimplicialComplex) -> Triangulation:
    """The antiprism triangulation.

    Vertices are pointed faces (F, v) with v in F; a set of them is a face
    when the F's form a chain and, for F properly inside G, the point of G
    lies outside F.  Facets are collected per base facet as the maximal
    cliques of that pairwise relation.
    """
    if complex_.is_void or complex_.is_empty:
        return identity(complex_)
    vertex_carrier: dict[str, LabelSet] = {}

    def node_label(fset: frozenset[int], point: int) -> str:
        labels = sorted(complex_.labels_of(tuple(sorted(fset))))
        lab = "({" + ",".join(labels) + "}," + complex_.table.label(point) + ")"
        _register_label(vertex_carrier, lab, frozenset(labels))
        return lab

    def compatible(a: tuple[frozenset[int], int], b: tuple[frozenset[int], int]) -> bool:
        fa, va = a
        fb, vb = b
        if fa == fb:
            return True
        if fa < fb:
            return vb not in fa
        if fb < fa:
            return va not in fb
        return False

    facet_sets: set[frozenset[str]] = set()
    for facet in complex_.facets:
        nodes = [
            (frozenset(sub), v)
            for k in range(1, len(facet) + 1)
            for sub in itertools.combinations(facet, k)
            for v in sub
        ]
        adjacency = {
            n: {m for m in nodes if m != n and compatible(n, m)} for n in nodes
        }
        for clique in _maximal_cliques(nodes, adjacency):
            facet_sets.add(frozenset(node_label(f, v) for f, v in clique))
    total = SimplicialComplex.from_facets([sorted(fs) for fs in facet_sets])
    carrier: dict[tuple[str, ...], tuple[str, ...]] = {(): ()}
    for f in total.faces():
        labels = total.labels_of(f)
        if not labels:
            continue
        union: set[str] = set()
        for lab in labels:
            union |= vertex_carrier[lab]
        carrier[tuple(sorted(labels))] = tuple(sorted(union))
    return Triangulation(complex_, total, carrier)


def stellar(
    complex_: SimplicialComplex, face, new_label: str | None = None
) -> Triangulation:
    """Stellar subdivision: cone a new vertex over the star of a face."""
    fids = complex_._face_arg(face if isinstance(face, tuple) else tuple(face))
    if not fids:
        raise PreconditionError("stellar subdivision needs a nonempty face")
    if new_label is None:
        new_label = fresh_label(complex_)
    elif new_label in complex_.table:
        raise MalformedFaceError(f"label {new_label!r} already names a base vertex")
    face_labels = set(complex_.labels_of(fids))
    fset = set(fids)
    facets: list[tuple[str, ...]] = []
    for facet in complex_.facets:
        flabels = complex_.labels_of(facet)
        if fset <= set(facet):
            for w in sorted(face_labels):
                rest = [lab for lab in flabels if lab != w]
                facets.append(tuple(sorted(rest + [new_label])))
        else:
            facets.append(tuple(sorted(flabels)))
    total = SimplicialComplex.from_facets(facets)
    carrier: dict[tuple[str, ...], tuple[str, ...]] = {}
    for f in total.faces():
        labels = total.labels_of(f)
        if new_label in labels:
            others = [lab for lab in labels if lab != new_label]
            carrier[tuple(sorted(labels))] = tuple(sorted(face_labels | set(others)))
        else:
            carrier[tuple(sorted(labels))] = tuple(sorted(labels))
    return Triangulation(complex_, total, carrier)


def edgewise(complex_: SimplicialComplex, r: int) -> Triangulation:
    """The r-fold edgewise subdivision.

    Vertices are integer weightings of base vertices with total weight r and
    support in a face.  Two weightings are compatible when the difference of
    their partial-sum vectors, taken in the base's vertex order, has entries
    all in {0,1} or all in {0,-1}.
    """
    if int(r) != r or r < 1:
        raise PreconditionError(f"edgewise subdivision needs an integer r >= 1, got {r}")
    r = int(r)
    if complex_.is_void or complex_.is_empty or r == 1:
        return identity(complex_)
    order = sorted(complex_.vertices)
    pos = {v: i for i, v in enumerate(order)}
    m = len(order)
    vertex_carrier: dict[str, LabelSet] = {}

    def node_label(u: tuple[int, ...]) -> str:
        parts = [
            f"{complex_.table.label(order[i])}:{u[i]}" for i in range(m) if u[i]
        ]
        lab = "+".join(parts)
        support = frozenset(
            complex_.table.label(order[i]) for i in range(m) if u[i]
        )
        _register_label(vertex_carrier, lab, support)
        return lab

    def iota(u: tuple[int, ...]) -> tuple[int, ...]:
        acc = 0
        out = []
        for value in u:
            acc += value
            out.append(acc)
        return tuple(out)

    def compatible(iu: tuple[int, ...], iw: tuple[int, ...]) -> bool:
        diff = [a - b for a, b in zip(iu, iw)]
        return all(d in (0, 1) for d in diff) or all(d in (0, -1) for d in diff)

    facet_sets: set[frozenset[str]] = set()
    for facet in complex_.facets:
        slots = sorted(pos[v] for v in facet)
        nodes: list[tuple[int, ...]] = []
        for combo in itertools.combinations_with_replacement(slots, r):
            u = [0] * m
            for i in combo:
                u[i] += 1
            nodes.append(tuple(u))
        iotas = {u: iota(u) for u in nodes}
        adjacency = {
            u: {w for w in nodes if w != u and compatible(iotas[u], iotas[w])}
            for u in nodes
        }
        for clique in _maximal_cliques(nodes, adjacency):
            facet_sets.add(frozenset(node_label(u) for u in clique))
    total = SimplicialComplex.from_facets([sorted(fs) for fs in facet_sets])
    carrier: dict[tuple[str, ...], tuple[str, ...]] = {(): ()}
    for f in total.faces():
        labels = total.labels_of(f)
        if not labels:
            continue
        union: set[str] = set()
        for lab in labels:
            union |= vertex_carrier[lab]
        carrier[tuple(sorted(labels))] = tuple(sorted(union))
    return Triangulation(complex_, total, carrier)


def compose(outer: Triangulation, inner: Triangulation) -> Triangulation:
    """Compose refinements: outer triangulates inner's total complex.

    The result triangulates inner's base by outer's total; the carrier of a
    face is the inner carrier of its outer carrier.
    """
    if outer.base != inner.total:
        raise PreconditionError(
            "compose needs outer.base equal to inner.total (same labels)"
        )
    inner_map = inner.carrier_map
    outer_map = outer.carrier_map
    carrier = {
        tuple(sorted(k)): tuple(sorted(inner_map[v])) for k, v in outer_map.items()
    }
    return Triangulation(inner.base, outer.total, carrier)


@dataclasses.dataclass(frozen=True)
class ThetaClass:
    """Which sign properties the theta polynomials of all restrictions share."""

    positive: bool
    unimodal: bool
    gamma_positive: bool


def theta_class(tri: Triangulation) -> ThetaClass:
    """Classify a triangulation by the theta polynomials of its restrictions.

    positive means every restriction has nonnegative theta, unimodal
    additionally requires unimodal coefficients, and gamma_positive asks for
    gamma-positivity with respect to half the carrier size.  Every nonempty
    restriction must be a verified homology ball (theta is undefined
    otherwise); a PreconditionError names the first offending base face.
    """
    from .homology import is_homology_ball
    from .invariants import theta
    from .polynomials import is_gamma_positive, is_nonnegative, is_unimodal

    positive = unimodal = gamma_positive = True
    for face in sorted(tri.base.faces(), key=len):
        labels = tri.base.labels_of(face)
        if not labels:
            continue
        sub = tri.restriction(labels)
        boundary = is_homology_ball(sub.total)
        if boundary is None:
            raise PreconditionError(
                "theta_class needs every nonempty restriction to be a "
                f"homology ball; the restriction to {sorted(labels)} is not"
            )
        t = theta(sub.total, boundary)
        positive = positive and is_nonnegative(t)
        unimodal = unimodal and is_nonnegative(t) and is_unimodal(t)
        gamma_positive = gamma_positive and is_gamma_positive(t, len(labels))
    return ThetaClass(positive, unimodal, gamma_positive)


# --------------------------------------------------------------- file format


def format_triangulation_text(tri: Triangulation) -> str:
    """Render: total facet lines, a '%' separator, then carrier lines.

    Carrier lines are written for every facet and every vertex of the total
    complex; all other carriers are recovered as unions of vertex carriers.
    """
    from .complexes import format_facet_text

    lines = [format_facet_text(tri.total).rstrip("\n")]
    lines.append(_SECTION_TOKEN)
    total = tri.total
    written: set[frozenset[str]] = set()

    def carrier_line(labels: tuple[str, ...]) -> str:
        lhs = " ".join(labels) if labels else _EMPTY_FACE_TOKEN
        rhs_labels = tri.carrier_labels(labels if labels else ())
        rhs = " ".join(rhs_labels) if rhs_labels else _EMPTY_FACE_TOKEN
        return f"{lhs} {_ARROW} {rhs}"

    if not total.is_void:
        entries = []
        for f in total.facets:
            entries.append(tuple(sorted(total.labels_of(f))))
        for v in sorted(total.vertex_labels):
            entries.append((v,))
        for labels in entries:
            key = frozenset(labels)
            if key in written or not labels:
                continue
            written.add(key)
            lines.append(carrier_line(labels))
    return "\n".join(line for line in lines if line != "") + "\n"


def parse_triangulation_text(text: str) -> Triangulation:
    """Parse the triangulation format written by format_triangulation_text."""
    total = parse_facet_text(text)
    carrier_lines: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    seen_section = False
    for raw in text.splitlines():
        line = raw.split(_COMMENT, 1)[0].strip()
        if not line:
            continue
        if line == _SECTION_TOKEN:
            if seen_section:
                raise FileFormatError("more than one '%' section separator")
            seen_section = True
            continue
        if not seen_section:
            continue
        parts = line.split()
        if parts.count(_ARROW) != 1:
            raise FileFormatError(f"carrier line needs exactly one '{_ARROW}': {line!r}")
        idx = parts.index(_ARROW)
        lhs_tokens, rhs_tokens = parts[:idx], parts[idx + 1 :]
        if not lhs_tokens or not rhs_tokens:
            raise FileFormatError(f"carrier line needs both sides: {line!r}")
        lhs = () if lhs_tokens == [_EMPTY_FACE_TOKEN] else tuple(sorted(lhs_tokens))
        rhs = () if rhs_tokens == [_EMPTY_FACE_TOKEN] else tuple(sorted(rhs_tokens))
        carrier_lines.append((lhs, rhs))
    if not seen_section:
        raise FileFormatError("triangulation text needs a '%' separator section")

    if total.is_void:
        if carrier_lines:
            raise FileFormatError("carrier lines given for a void total complex")
        return Triangulation(SimplicialComplex.from_facets([]), total, {}, validate=False)
    try:
        base = SimplicialComplex.from_facets([rhs for _, rhs in carrier_lines] or [()])
    except MalformedFaceError as exc:
        raise FileFormatError(f"bad carrier face: {exc}") from exc

    given: dict[frozenset[str], tuple[str, ...]] = {}
    for lhs, rhs in carrier_lines:
        try:
            total._face_arg(lhs)
        except (NotAFaceError, MalformedFaceError) as exc:
            raise FileFormatError(f"carrier line for a non-face: {' '.join(lhs)}") from exc
        key = frozenset(lhs)
        if key in given and given[key] != rhs:
            raise FileFormatError(
                f"conflicting carrier lines for face {' '.join(lhs) or _EMPTY_FACE_TOKEN}"
            )
        given[key] = rhs

    vertex_carrier: dict[str, frozenset[str]] = {}
    for v in sorted(total.vertex_labels):
        key = frozenset((v,))
        if key not in given:
            raise FileFormatError(
                f"missing carrier line for vertex {v!r}; vertex carriers are required"
            )
        vertex_carrier[v] = frozenset(given[key])

    carrier: dict[tuple[str, ...], tuple[str, ...]] = {(): ()}
    for f in total.faces():
        labels = total.labels_of(f)
        if not labels:
            continue
        key = frozenset(labels)
        if key in given:
            carrier[tuple(sorted(labels))] = given[key]
        else:
            union: set[str] = set()
            for v in labels:
                union |= vertex_carrier[v]
            carrier[tuple(sorted(labels))] = tuple(sorted(union))
    if frozenset() in given and given[frozenset()] != ():
        raise FileFormatError("the empty face must carry to the empty face")
    return Triangulation(base, total, carrier)


def write_triangulation_file(path, tri: Triangulation) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_triangulation_text(tri))


def read_triangulation_file(path) -> Triangulation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_triangulation_text(fh.read())
