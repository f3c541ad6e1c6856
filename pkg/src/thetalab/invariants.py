"""Face-enumeration invariants: h, interior h, theta, and local h.

theta is always computed two independent ways (boundary subtraction and the
partial-sum formula) and a ConsistencyError is raised if they disagree, so a
successful call certifies its own arithmetic.
"""

from __future__ import annotations

from .complexes import SimplicialComplex
from .errors import ConsistencyError, PreconditionError
from .homology import boundary_subcomplex, interior_faces
from .polynomials import GammaVector, IntPoly, gamma_vector, pnk
from .subdivisions import Triangulation


def h_poly(complex_: SimplicialComplex) -> IntPoly:
    """The h-polynomial; zero for the void complex, one for the empty complex."""
    if complex_.is_void:
        return IntPoly.zero()
    n = complex_.dim + 1
    fvec = complex_.f_vector()
    one_minus_x = IntPoly((1, -1))
    acc = IntPoly.zero()
    for i in range(n + 1):
        acc = acc + (one_minus_x ** (n - i)).shift(i) * fvec[i]
    return acc


def h_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Coefficients h_0..h_n with n = dim + 1; () for the void complex."""
    if complex_.is_void:
        return ()
    return h_poly(complex_).padded(complex_.dim + 2)


def h_interior(
    complex_: SimplicialComplex, boundary: SimplicialComplex | None = None
) -> IntPoly:
    """h-polynomial of the interior faces (those not in the boundary)."""
    if complex_.is_void:
        return IntPoly.zero()
    if boundary is None:
        boundary = boundary_subcomplex(complex_)
    n = complex_.dim + 1
    counts = [0] * (n + 1)
    for labels in interior_faces(complex_, boundary):
        counts[len(labels)] += 1
    one_minus_x = IntPoly((1, -1))
    acc = IntPoly.zero()
    for i in range(n + 1):
        acc = acc + (one_minus_x ** (n - i)).shift(i) * counts[i]
    return acc


def theta(
    complex_: SimplicialComplex, boundary: SimplicialComplex | None = None
) -> IntPoly:
    """theta = h(Delta) - h(boundary of Delta), for ball-like complexes.

    The same value is recomputed from the partial sums of the h-vector and
    the two must agree.  The empty complex has theta = 1; complexes with a
    void (missing) boundary other than the empty complex are rejected.
    """
    if complex_.is_void:
        raise PreconditionError("theta of the void complex is undefined")
    if complex_.is_empty:
        return IntPoly.one()
    if boundary is None:
        boundary = boundary_subcomplex(complex_)
    if boundary.is_void:
        raise PreconditionError(
            "theta needs a complex with nonempty boundary (a triangulated ball)"
        )
    direct = h_poly(complex_) - h_poly(boundary)
    n = complex_.dim + 1
    hs = h_vector(complex_)
    coeffs = [0] * n
    for i in range(1, n):
        top = sum(hs[n - j] for j in range(1, i + 1))
        bottom = sum(hs[j] for j in range(i))
        coeffs[i] = top - bottom
    partial = IntPoly(coeffs)
    if hs[n] == 0 and partial != direct:
        raise ConsistencyError(
            f"theta routes disagree: boundary subtraction gives {direct.text()},"
            f" partial sums give {partial.text()}"
        )
    if hs[n] != 0:
        raise PreconditionError(
            "theta needs the top h-coefficient to vanish (a ball-like complex)"
        )
    return direct


def local_h(tri: Triangulation) -> IntPoly:
    """Local h-polynomial of a triangulation of a simplex.

    Inclusion-exclusion of the h-polynomials of the restrictions to all
    subsets of the vertex set.
    """
    base = tri.base
    if base.is_void:
        raise PreconditionError("local h needs a triangulation of a simplex")
    if not base.is_empty and len(base.facets) != 1:
        raise PreconditionError(
            "local h is defined for triangulations of a single simplex"
        )
    nverts = len(base.vertices)
    acc = IntPoly.zero()
    for face in base.faces():
        sign = -1 if (nverts - len(face)) % 2 else 1
        acc = acc + h_poly(tri.restriction(face).total) * sign
    return acc


def sphere_gamma(complex_: SimplicialComplex) -> GammaVector:
    """Gamma vector of the (symmetric) h-polynomial of a homology sphere."""
    if complex_.is_void:
        raise PreconditionError("gamma of the void complex is undefined")
    h = h_poly(complex_)
    n = complex_.dim + 1
    gv = gamma_vector(h, n)
    if gv is None:
        raise PreconditionError(
            "h-polynomial is not symmetric; gamma needs a homology sphere"
        )
    return gv


def h_sd_via_pnk(complex_: SimplicialComplex) -> IntPoly:
    """h-polynomial of the barycentric subdivision, via the p transform."""
    if complex_.is_void:
        return IntPoly.zero()
    n = complex_.dim + 1
    hs = h_vector(complex_)
    acc = IntPoly.zero()
    for k in range(n + 1):
        acc = acc + pnk(n, k) * hs[k]
    return acc


def theta_sd_closed_form(
    complex_: SimplicialComplex, boundary: SimplicialComplex | None = None
) -> IntPoly:
    """theta of the barycentric subdivision of a ball, from the ball's h-vector.

    theta(sd Delta) = sum_{i=0}^{n-1} (h_n+...+h_{n-i} + x*(h_n+...+h_{i+1}))
    * p_{n-1,i}.
    """
    if complex_.is_void or complex_.is_empty:
        raise PreconditionError("needs a ball of dimension at least 0")
    if boundary is None:
        boundary = boundary_subcomplex(complex_)
    if boundary.is_void:
        raise PreconditionError("needs a complex with nonempty boundary")
    n = complex_.dim + 1
    hs = h_vector(complex_)
    acc = IntPoly.zero()
    for i in range(n):
        const = sum(hs[j] for j in range(n - i, n + 1))
        lin = sum(hs[j] for j in range(i + 1, n + 1))
        acc = acc + IntPoly((const, lin)) * pnk(n - 1, i)
    return acc


def is_alternatingly_increasing(p: IntPoly, n: int) -> bool:
    """Whether c_0 <= c_n <= c_1 <= c_{n-1} <= ... for coefficients up to x^n."""
    if p.degree is not None and p.degree > n:
        raise PreconditionError(f"degree {p.degree} exceeds window {n}")
    c = p.padded(n + 1)
    order = []
    lo, hi = 0, n
    while lo <= hi:
        order.append(c[lo])
        if hi != lo:
            order.append(c[hi])
        lo, hi = lo + 1, hi - 1
    return all(a <= b for a, b in zip(order, order[1:]))
