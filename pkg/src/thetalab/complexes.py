"""Finite abstract simplicial complexes with labeled vertices.

A complex is stored by its inclusion-maximal faces (facets).  Vertices carry
string labels; internally a face is a strictly increasing tuple of dense
integer ids so that subset tests stay cheap and all iteration orders are
deterministic.  Two degenerate complexes are kept distinct throughout the
library: the void complex, which has no faces at all, and the empty complex
whose single face is the empty face (dimension -1).  They behave differently
under every invariant downstream, so conflating them is always a bug.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import (
    FileFormatError,
    MalformedFaceError,
    NotAFaceError,
    PreconditionError,
)

Face = tuple[int, ...]

_COMMENT = "#"
_EMPTY_FACE_TOKEN = "@"
_SECTION_TOKEN = "%"
_ARROW = "->"


def _validate_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise MalformedFaceError(f"vertex label must be a nonempty string, got {label!r}")
    if label in (_EMPTY_FACE_TOKEN, _SECTION_TOKEN, _ARROW) or label.startswith(_COMMENT):
        raise MalformedFaceError(f"label {label!r} collides with facet file syntax")
    if any(ch.isspace() for ch in label):
        raise MalformedFaceError(f"label {label!r} contains whitespace")
    return label


class LabelTable:
    """Bijection between vertex labels and the dense ids 0..len-1."""

    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]):
        self._labels = tuple(_validate_label(lab) for lab in labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise MalformedFaceError("duplicate vertex labels")

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise NotAFaceError(f"unknown vertex label {label!r}") from None

    def label(self, vid: int) -> str:
        return self._labels[vid]

    def face(self, labels: Iterable[str]) -> Face:
        ids = sorted(self.id(lab) for lab in labels)
        face = tuple(ids)
        if any(a == b for a, b in zip(face, face[1:])):
            raise MalformedFaceError(f"face {tuple(labels)!r} repeats a vertex")
        return face

    def labels_of(self, face: Face) -> tuple[str, ...]:
        return tuple(self._labels[v] for v in face)

    def __len__(self) -> int:
        return len(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelTable) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"LabelTable({list(self._labels)!r})"


def _as_id_face(face: Iterable[int]) -> Face:
    ids = sorted(face)
    if any(not isinstance(v, int) or v < 0 for v in ids):
        raise MalformedFaceError(f"vertex ids must be nonnegative integers, got {ids!r}")
    out = tuple(ids)
    if any(a == b for a, b in zip(out, out[1:])):
        raise MalformedFaceError(f"face {out!r} repeats a vertex")
    return out


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    # distinct faces of equal size never contain one another, so domination
    # is only tested against the strictly larger faces already kept
    ordered = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    larger = 0
    cur_len: int | None = None
    for f in ordered:
        if len(f) != cur_len:
            larger = len(kept)
            cur_len = len(f)
        fs = frozenset(f)
        if not any(fs <= kept_sets[i] for i in range(larger)):
            kept.append(f)
            kept_sets.append(fs)
    return tuple(sorted(kept))


class SimplicialComplex:
    """An abstract simplicial complex given by its facets.

    Instances are immutable; every derived complex is a new object.  Equality
    and hashing compare facets as sets of label sets, so complexes built along
    different routes agree whenever their faces agree.
    """

    __slots__ = ("_table", "_facets", "_all_faces", "_by_dim", "_facet_labelsets")

    def __init__(self, table: LabelTable, facets: tuple[Face, ...]):
        # Internal constructor: `from_facets` is the validated entry point.
        self._table = table
        self._facets = facets
        self._all_faces: frozenset[Face] | None = None
        self._by_dim: dict[int, tuple[Face, ...]] | None = None
        self._facet_labelsets: frozenset[frozenset[str]] | None = None

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable], labels=None) -> "SimplicialComplex":
        """Build a complex from candidate facets.

        Without `labels`, facets are iterables of string labels and the label
        table is the sorted set of labels that occur.  With `labels` (a
        LabelTable or a sequence of labels fixing the id order), facets are
        iterables of integer ids.  Non-maximal entries are absorbed; ids are
        re-densified so only vertices that actually occur remain.
        """
        raw = [tuple(f) for f in facets]
        if labels is None:
            seen: set[str] = set()
            for f in raw:
                for lab in f:
                    seen.add(_validate_label(lab))
            table = LabelTable(sorted(seen))
            id_faces = [table.face(f) for f in raw]
        else:
            table = labels if isinstance(labels, LabelTable) else LabelTable(labels)
            id_faces = [_as_id_face(f) for f in raw]
            for f in id_faces:
                if f and f[-1] >= len(table):
                    raise MalformedFaceError(f"vertex id {f[-1]} outside label table")
        maximal = _maximal(id_faces)
        used = sorted({v for f in maximal for v in f})
        if len(used) != len(table):
            # keep only used vertices, preserving the original id order
            remap = {old: new for new, old in enumerate(used)}
            table = LabelTable(table.label(v) for v in used)
            maximal = tuple(sorted(tuple(remap[v] for v in f) for f in maximal))
        return cls(table, maximal)

    # ---------------------------------------------------------------- basics

    @property
    def table(self) -> LabelTable:
        return self._table

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_empty(self) -> bool:
        return self._facets == ((),)

    @property
    def dim(self) -> int | None:
        """Dimension, or None for the void complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self._facets) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(len(self._table)))

    @property
    def vertex_labels(self) -> tuple[str, ...]:
        return self._table.labels

    def face(self, labels: Iterable[str]) -> Face:
        return self._table.face(labels)

    def labels_of(self, face: Face) -> tuple[str, ...]:
        return self._table.labels_of(face)

    def faces(self) -> frozenset[Face]:
        """All faces, including the empty face for non-void complexes."""
        if self._all_faces is None:
            acc: set[Face] = set()
            if self._facets:
                acc.add(())
            for facet in self._facets:
                for k in range(1, len(facet) + 1):
                    acc.update(itertools.combinations(facet, k))
            self._all_faces = frozenset(acc)
        return self._all_faces

    def faces_of_dim(self, d: int) -> tuple[Face, ...]:
        if self._by_dim is None:
            by_dim: dict[int, list[Face]] = {}
            for f in self.faces():
                by_dim.setdefault(len(f) - 1, []).append(f)
            self._by_dim = {d_: tuple(sorted(fs)) for d_, fs in by_dim.items()}
        return self._by_dim.get(d, ())

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{dim}); the void complex has the empty f-vector."""
        if self.is_void:
            return ()
        return tuple(len(self.faces_of_dim(d)) for d in range(-1, self.dim + 1))

    def reduced_euler(self) -> int:
        """Alternating face count, with the empty face contributing -1."""
        if self.is_void:
            return 0
        return sum((-1) ** d * len(self.faces_of_dim(d)) for d in range(-1, self.dim + 1))

    def __contains__(self, face: Face) -> bool:
        return tuple(face) in self.faces()

    def _face_arg(self, face) -> Face:
        """Accept a face as ids or as labels and return the id form."""
        face = tuple(face)
        if face and all(isinstance(v, str) for v in face):
            face = self._table.face(face)
        else:
            face = _as_id_face(face)
        if face not in self.faces():
            raise NotAFaceError(f"{self.labels_of(face) if face else '()'} is not a face")
        return face

    # ------------------------------------------------------------ operations

    def link(self, face) -> "SimplicialComplex":
        face = self._face_arg(face)
        fs = frozenset(face)
        rest = [tuple(v for v in facet if v not in fs)
                for facet in self._facets if fs <= frozenset(facet)]
        labels = self._table
        return SimplicialComplex.from_facets(
            [labels.labels_of(f) for f in rest])

    def induced(self, vertices) -> "SimplicialComplex":
        """Induced subcomplex on a vertex subset (ids or labels)."""
        vs = set()
        for v in vertices:
            vs.add(self._table.id(v) if isinstance(v, str) else v)
        for v in vs:
            if not (0 <= v < len(self._table)):
                raise NotAFaceError(f"vertex id {v} outside complex")
        cut = [tuple(v for v in facet if v in vs) for facet in self._facets]
        return SimplicialComplex.from_facets([self._table.labels_of(f) for f in cut])

    def delete_vertex(self, vertex) -> "SimplicialComplex":
        """All faces not containing the vertex (the antistar)."""
        v = self._table.id(vertex) if isinstance(vertex, str) else vertex
        if (v,) not in self.faces():
            raise NotAFaceError(f"vertex {vertex!r} not in complex")
        cut = [tuple(u for u in facet if u != v) for facet in self._facets]
        return SimplicialComplex.from_facets([self._table.labels_of(f) for f in cut])

    def cone(self, apex_label: str) -> "SimplicialComplex":
        if self.is_void:
            raise PreconditionError("cannot cone the void complex")
        _validate_label(apex_label)
        if apex_label in self._table:
            raise MalformedFaceError(f"apex label {apex_label!r} already used")
        new_facets = [self._table.labels_of(f) + (apex_label,) for f in self._facets]
        return SimplicialComplex.from_facets(new_facets)

    def is_pure(self) -> bool:
        if self.is_void:
            return True
        sizes = {len(f) for f in self._facets}
        return len(sizes) == 1

    def is_flag(self) -> bool:
        """True when every pairwise-connected vertex set is a face.

        Walks cliques of the 1-skeleton in id order and stops at the first
        clique that is not a face, so the cost is bounded by the face count
        on flag inputs.
        """
        if self.is_void:
            raise PreconditionError("flagness is undefined for the void complex")
        faces = self.faces()
        nbr: dict[int, set[int]] = {v: set() for v in self.vertices}
        for (a, b) in self.faces_of_dim(1):
            nbr[a].add(b)
            nbr[b].add(a)

        def extend(clique: Face, candidates: set[int]) -> bool:
            for v in sorted(candidates):
                new = clique + (v,)
                if new not in faces:
                    return False
                if not extend(new, candidates & {u for u in nbr[v] if u > v}):
                    return False
            return True

        return extend((), {v for v in self.vertices})

    # ------------------------------------------------------------- identity

    def facet_labelsets(self) -> frozenset[frozenset[str]]:
        if self._facet_labelsets is None:
            self._facet_labelsets = frozenset(
                frozenset(self._table.labels_of(f)) for f in self._facets)
        return self._facet_labelsets

    def face_labelsets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self._table.labels_of(f)) for f in self.faces())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self.is_void or other.is_void:
            return self.is_void and other.is_void
        return self.facet_labelsets() == other.facet_labelsets()

    def __hash__(self) -> int:
        return hash(self.facet_labelsets())

    def __repr__(self) -> str:
        if self.is_void:
            return "<SimplicialComplex VOID>"
        return f"<SimplicialComplex dim={self.dim} f={self.f_vector()}>"


# -------------------------------------------------------------- module level


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Union of two complexes, matching vertices by label."""
    facets = [a.labels_of(f) for f in a.facets] + [b.labels_of(f) for f in b.facets]
    return SimplicialComplex.from_facets(facets)


def is_subcomplex(inner: SimplicialComplex, outer: SimplicialComplex) -> bool:
    if inner.is_void:
        return True
    outer_faces = outer.face_labelsets()
    return all(frozenset(inner.labels_of(f)) in outer_faces for f in inner.facets)


def is_induced_subcomplex(inner: SimplicialComplex, outer: SimplicialComplex) -> bool:
    """Whether `inner` equals the induced subcomplex of `outer` on its vertices."""
    if not is_subcomplex(inner, outer):
        raise PreconditionError("first argument is not a subcomplex of the second")
    if inner.is_void:
        return False
    return outer.induced(inner.vertex_labels) == inner


def fresh_label(complex_: SimplicialComplex, stem: str = "w") -> str:
    if stem not in complex_.table:
        return stem
    i = 0
    while f"{stem}{i}" in complex_.table:
        i += 1
    return f"{stem}{i}"


# -------------------------------------------------------------- generators


def simplex(labels: Iterable[str]) -> SimplicialComplex:
    """The full simplex on the given vertex labels; the empty complex for none."""
    return SimplicialComplex.from_facets([tuple(labels)])


def boundary_simplex(labels: Iterable[str]) -> SimplicialComplex:
    labs = tuple(labels)
    if not labs:
        raise PreconditionError("boundary of the empty simplex is void; not representable")
    return SimplicialComplex.from_facets(itertools.combinations(labs, len(labs) - 1))


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope: an (n-1)-sphere on 2n vertices."""
    if n < 1:
        raise PreconditionError("need at least one antipodal pair")
    pairs = [(f"x{i}", f"y{i}") for i in range(1, n + 1)]
    facets = [tuple(choice) for choice in itertools.product(*pairs)]
    return SimplicialComplex.from_facets(facets)


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def path(k: int) -> SimplicialComplex:
    """Path with k edges on vertices v0..vk; a single point for k = 0."""
    if k < 0:
        raise PreconditionError("edge count must be nonnegative")
    if k == 0:
        return simplex(["v0"])
    return SimplicialComplex.from_facets(
        [(f"v{i}", f"v{i+1}") for i in range(k)])


def cycle(k: int) -> SimplicialComplex:
    if k < 3:
        raise PreconditionError("cycles need at least three vertices")
    return SimplicialComplex.from_facets(
        [(f"v{i}", f"v{(i+1) % k}") for i in range(k)])


def _glued_tetrahedra() -> SimplicialComplex:
    return SimplicialComplex.from_facets([("a", "b", "c", "d"), ("b", "c", "d", "e")])


def example_5_2_ball() -> SimplicialComplex:
    """Two glued tetrahedra with both original facets stellarly subdivided.

    A 3-ball on 7 vertices and 8 facets whose boundary is not an induced
    subcomplex, yet every facet contains one of the two interior vertices.
    """
    from .subdivisions import stellar

    start = _glued_tetrahedra()
    once = stellar(start, ("a", "b", "c", "d"), "u").total
    return stellar(once, ("b", "c", "d", "e"), "v").total


def example_5_4_ball() -> SimplicialComplex:
    """Union of cones over two octahedral spheres glued along a triangle.

    A flag 3-ball on 11 vertices and 16 facets whose theta polynomial is
    symmetric but not gamma-positive; its boundary is not induced (the glue
    triangle is interior).
    """
    shared = ("f1", "f2", "f3")

    def octa(others):
        pairs = list(zip(shared, others))
        return SimplicialComplex.from_facets(
            tuple(choice) for choice in itertools.product(*pairs))

    s1 = octa(("a1", "a2", "a3"))
    s2 = octa(("b1", "b2", "b3"))
    return union(s1.cone("u1"), s2.cone("u2"))


# ------------------------------------------------------------- facet files


def parse_facet_text(text: str) -> SimplicialComplex:
    """Parse the facet file format.

    One facet per line as whitespace-separated labels; '#' starts a comment;
    a lone '@' denotes the empty face.  A file with no facet lines at all is
    the void complex.  Parsing stops at a '%' line so the leading section of
    a triangulation file reads as a facet file.
    """
    facets: list[tuple[str, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(_COMMENT, 1)[0].strip()
        if not line:
            continue
        if line == _SECTION_TOKEN:
            break
        tokens = line.split()
        if tokens == [_EMPTY_FACE_TOKEN]:
            facets.append(())
            continue
        if _EMPTY_FACE_TOKEN in tokens:
            raise FileFormatError(f"line {lineno}: '@' cannot appear inside a facet")
        if len(set(tokens)) != len(tokens):
            raise FileFormatError(f"line {lineno}: facet repeats a vertex")
        for tok in tokens:
            try:
                _validate_label(tok)
            except MalformedFaceError as exc:
                raise FileFormatError(f"line {lineno}: {exc}") from None
        facets.append(tuple(tokens))
    return SimplicialComplex.from_facets(facets)


def format_facet_text(complex_: SimplicialComplex) -> str:
    if complex_.is_void:
        return ""
    lines = []
    for facet in complex_.facets:
        lines.append(" ".join(complex_.labels_of(facet)) if facet else _EMPTY_FACE_TOKEN)
    return "\n".join(sorted(lines)) + "\n"


def read_facet_file(path) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_facet_text(fh.read())


def write_facet_file(complex_: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_facet_text(complex_))
