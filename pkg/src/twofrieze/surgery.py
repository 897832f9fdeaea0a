"""Seam surgery on patterns: glue two of them into a wider one, or cut one down.

All three operations assemble two seed columns for the result and complete
them; the completed grid is re-verified in full rather than trusted, so a
failure of a guaranteed operation surfaces as InternalContradiction with
the operands in the message.
"""

from __future__ import annotations

from .errors import (
    ConditionViolated,
    FriezeError,
    InternalContradiction,
    PairMismatch,
)
from .frieze import Fragment, check_local_rule, complete_from_columns


class CutSite:
    """Location of a horizontal cut: keep rows 1..row of columns col, col+1.

    Derived values: x, y are the entries at (row, col) and (row, col+1);
    u, v sit directly beneath them.  ``row`` must be strictly inside the
    pattern so that u and v exist.
    """

    __slots__ = ("row", "col")

    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col

    def values(self, frag: Fragment):
        if not 1 <= self.row < frag.width:
            raise ValueError(f"cut row must be in 1..{frag.width - 1}")
        p = frag.period
        c0 = self.col % p
        c1 = (self.col + 1) % p
        x = frag.rows[self.row - 1][c0]
        y = frag.rows[self.row - 1][c1]
        u = frag.rows[self.row][c0]
        v = frag.rows[self.row][c1]
        return x, y, u, v

    def __repr__(self):
        return f"CutSite(row={self.row}, col={self.col})"


def _complete_verified(width, col0, col1, context):
    try:
        out = complete_from_columns(width, col0, col1)
    except FriezeError as exc:
        raise InternalContradiction(
            f"{context}: completion failed ({type(exc).__name__}: {exc}); "
            f"seeds {col0} | {col1}") from exc
    violations = check_local_rule(out)
    if violations:
        raise InternalContradiction(
            f"{context}: result breaks the local rule at {violations[:3]}")
    return out


def glue_over_ones(f1: Fragment, c1: int, f2: Fragment, c2: int) -> Fragment:
    """Stack columns (c1, c1+1) of f1, a row pair of 1s, and columns
    (c2, c2+1) of f2 into the seed columns of a width m + l + 1 pattern.

    Always succeeds on valid inputs; the width-0 pattern is a legal operand
    and acts as a near-identity (the seam row of 1s still widens the result).
    """
    col0 = list(f1.column(c1)) + [1] + list(f2.column(c2))
    col1 = list(f1.column(c1 + 1)) + [1] + list(f2.column(c2 + 1))
    return _complete_verified(f1.width + f2.width + 1, col0, col1, "glue over ones")


def cut_above(frag: Fragment, site: CutSite) -> Fragment:
    """Cut away everything below the pair (x, y) at the site.

    Allowed exactly when u = 1 (mod y) and v = 1 (mod x); otherwise no
    integral pattern of width ``site.row`` contains the truncated columns,
    and ConditionViolated reports the failing congruence.  The result's
    bottom nontrivial row contains (x, y) at the site columns.
    """
    x, y, u, v = site.values(frag)
    if (u - 1) % y:
        raise ConditionViolated(f"u={u} mod y={y}", u % y)
    if (v - 1) % x:
        raise ConditionViolated(f"v={v} mod x={x}", v % x)
    col0 = [frag.rows[r][site.col % frag.period] for r in range(site.row)]
    col1 = [frag.rows[r][(site.col + 1) % frag.period] for r in range(site.row)]
    return _complete_verified(site.row, col0, col1, "cut")


def glue_over_pair(f1: Fragment, c1: int, f2: Fragment, c2: int) -> Fragment:
    """Glue f1 above f2 along a shared pair (x, y): f1's bottom row at
    columns (c1, c1+1) must equal f2's top row at (c2, c2+1).

    With r, s the entries directly above the pair in f1 and u, v directly
    below it in f2, the gluing is integral exactly when
    u = r = 1 (mod y) and v = s = 1 (mod x).  The seed columns of the
    result are f1's columns with f2's columns (minus the shared pair)
    appended, giving width m + l - 1.
    """
    if f1.width < 1 or f2.width < 1:
        raise PairMismatch("both operands need at least one nontrivial row")
    x1 = f1.rows[-1][c1 % f1.period]
    y1 = f1.rows[-1][(c1 + 1) % f1.period]
    x2 = f2.rows[0][c2 % f2.period]
    y2 = f2.rows[0][(c2 + 1) % f2.period]
    if (x1, y1) != (x2, y2):
        raise PairMismatch(f"pairs differ: ({x1},{y1}) vs ({x2},{y2})")
    x, y = x1, y1
    r = f1.rows[-2][c1 % f1.period] if f1.width >= 2 else 1
    s = f1.rows[-2][(c1 + 1) % f1.period] if f1.width >= 2 else 1
    u = f2.rows[1][c2 % f2.period] if f2.width >= 2 else 1
    v = f2.rows[1][(c2 + 1) % f2.period] if f2.width >= 2 else 1
    for label, value, modulus in (("u", u, y), ("r", r, y), ("v", v, x), ("s", s, x)):
        if (value - 1) % modulus:
            raise ConditionViolated(
                f"{label}={value} mod {'y' if modulus == y else 'x'}={modulus}",
                value % modulus)
    col0 = [f1.rows[t][c1 % f1.period] for t in range(f1.width)] + \
           [f2.rows[t][c2 % f2.period] for t in range(1, f2.width)]
    col1 = [f1.rows[t][(c1 + 1) % f1.period] for t in range(f1.width)] + \
           [f2.rows[t][(c2 + 1) % f2.period] for t in range(1, f2.width)]
    return _complete_verified(f1.width + f2.width - 1, col0, col1, "glue over pair")


def find_pair(frag: Fragment, x: int, y: int, where: str = "bottom") -> list[int]:
    """Columns c where the pair (x, y) occurs in the bottom (or top) row and
    the one-sided congruences for gluing at that seam hold.

    For the upper operand of a seam gluing use where="bottom" (checks the
    entries above the pair); for the lower operand use where="top" (checks
    the entries below).
    """
    if frag.width < 1:
        return []
    if where == "bottom":
        row, inner = frag.rows[-1], (frag.rows[-2] if frag.width >= 2 else None)
    elif where == "top":
        row, inner = frag.rows[0], (frag.rows[1] if frag.width >= 2 else None)
    else:
        raise ValueError("where must be 'bottom' or 'top'")
    p = frag.period
    out = []
    for c in range(p):
        if row[c] != x or row[(c + 1) % p] != y:
            continue
        a = inner[c] if inner is not None else 1
        b = inner[(c + 1) % p] if inner is not None else 1
        if (a - 1) % y == 0 and (b - 1) % x == 0:
            out.append(c)
    return out
