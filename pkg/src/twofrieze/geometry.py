"""Lifting patterns to closed vertex chains in 3-space and back.

A width-m pattern corresponds to a cyclic sequence of n = m + 4 integer
vectors whose consecutive triples all have determinant 1.  The lift seeds
the first three vertices with the standard basis and grows the rest by the
order-3 linear recurrence whose coefficients are read off the top row of
the grid; the inverse map recovers every entry as a 3x3 determinant of
vertices.  The two coefficient/entry alignments are chosen together so
that ``polygon_to_fragment(lift_to_polygon(f)) == f`` holds exactly, with
no residual column shift.
"""

from __future__ import annotations

from .errors import MonodromyNotIdentity, NonPositive, NotUnimodular, InternalContradiction
from .frieze import Fragment, check_local_rule


class Polygon:
    """Cyclic tuple of integer 3-vectors (index i wraps mod n)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vertices = tuple(tuple(int(x) for x in v) for v in vertices)
        if any(len(v) != 3 for v in vertices):
            raise ValueError("vertices must be 3-vectors")
        if len(vertices) < 4:
            raise ValueError("need at least 4 vertices")
        self.vertices = vertices

    def __len__(self):
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i % len(self.vertices)]

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Polygon({self.vertices!r})"


def det3(u, v, w) -> int:
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - v[0] * (u[1] * w[2] - u[2] * w[1])
            + w[0] * (u[1] * v[2] - u[2] * v[1]))


def check_normalization(poly: Polygon) -> list[int]:
    """Indices i (0-based) where det(V_i, V_{i+1}, V_{i+2}) != 1."""
    return [i for i in range(len(poly))
            if det3(poly[i], poly[i + 1], poly[i + 2]) != 1]


def apply_sl3(matrix, poly: Polygon) -> Polygon:
    """Image of the chain under an integer matrix acting on column vectors."""
    out = []
    for v in poly.vertices:
        out.append(tuple(sum(matrix[r][c] * v[c] for c in range(3)) for r in range(3)))
    return Polygon(out)


def transition_matrix(src: Polygon, dst: Polygon):
    """Integer matrix A with A * src[i] = dst[i] for i = 0, 1, 2, if one exists.

    Requires det(src[0..2]) == 1 so the solve stays integral; returns the
    3x3 matrix (det +1 when both chains are normalized).
    """
    if det3(src[0], src[1], src[2]) != 1:
        raise NotUnimodular("source triple must have determinant 1")
    s = [src[0], src[1], src[2]]
    # inverse of the unimodular column matrix [s0 s1 s2] is its adjugate
    inv = [[s[1][1] * s[2][2] - s[1][2] * s[2][1],
            s[0][2] * s[2][1] - s[0][1] * s[2][2],
            s[0][1] * s[1][2] - s[0][2] * s[1][1]],
           [s[1][2] * s[2][0] - s[1][0] * s[2][2],
            s[0][0] * s[2][2] - s[0][2] * s[2][0],
            s[0][2] * s[1][0] - s[0][0] * s[1][2]],
           [s[1][0] * s[2][1] - s[1][1] * s[2][0],
            s[0][1] * s[2][0] - s[0][0] * s[2][1],
            s[0][0] * s[1][1] - s[0][1] * s[1][0]]]
    d = [dst[0], dst[1], dst[2]]
    return tuple(tuple(sum(d[k][r] * inv[k][c] for k in range(3)) for c in range(3))
                 for r in range(3))


def _recurrence_coeffs(frag: Fragment, i: int):
    """Coefficients (a_i, b_i) of V_i = a_i V_{i-1} - b_i V_{i-2} + V_{i-3}.

    Both are read from the top nontrivial row; the offset aligns vertex
    index 1 with the column window used by polygon_to_fragment.
    """
    top = frag.rows[0] if frag.width else (1,) * frag.period
    p = frag.period
    return top[(2 * i - 3) % p], top[(2 * i - 4) % p]


def lift_to_polygon(frag: Fragment) -> Polygon:
    """Vertex chain of the pattern, seeded with the standard basis.

    Generates n = width + 4 vertices by the recurrence and checks that
    continuing for three more steps reproduces the seed triple (the
    monodromy around one period must be the identity).  All consecutive
    determinants equal 1 by construction once monodromy holds.
    """
    n = frag.width + 4
    verts = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for i in range(4, n + 4):
        a, b = _recurrence_coeffs(frag, i)
        v1, v2, v3 = verts[-1], verts[-2], verts[-3]
        verts.append(tuple(a * v1[t] - b * v2[t] + v3[t] for t in range(3)))
    if verts[n:n + 3] != verts[0:3]:
        raise MonodromyNotIdentity(
            f"chain of length {n} does not close: got {verts[n:n + 3]}")
    return Polygon(verts[:n])


def polygon_to_fragment(poly: Polygon) -> Fragment:
    """Pattern whose entries are the 3x3 vertex determinants.

    The chain must satisfy the unit-determinant normalization; entries
    must come out positive.  The resulting grid always satisfies the local
    rule (checked, violation reported as InternalContradiction).
    """
    bad = check_normalization(poly)
    if bad:
        raise NotUnimodular(f"determinant != 1 at indices {bad}")
    n = len(poly)
    m = n - 4
    period = 2 * n
    rows = []
    for d in range(m):
        row = []
        for c in range(period):
            ch = c + 3  # column offset aligning vertex 1 with lift_to_polygon
            if (ch + d) % 2 == 0:
                i = (ch + d) // 2
                j = (ch - d) // 2
                value = det3(poly[j - 3 - 1], poly[j - 2 - 1], poly[i - 1])
            else:
                i = (ch + d + 1) // 2
                j = (ch - d + 1) // 2
                value = det3(poly[i - 1 - 1], poly[i - 1], poly[j - 3 - 1])
            if value < 1:
                raise NonPositive(f"entry at row {d + 1}, column {c} is {value}")
            row.append(value)
        rows.append(row)
    frag = Fragment(m, rows)
    violations = check_local_rule(frag)
    if violations:
        raise InternalContradiction(
            f"determinant grid breaks the local rule at {violations[:3]}")
    return frag
