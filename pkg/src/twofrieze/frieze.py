"""The closed 2-frieze grid: representation, local rule, propagation.

Grid convention
---------------
A pattern of width ``m`` is stored as one fundamental period: an
``m x 2n`` matrix of positive integers with ``n = m + 4``, bordered above
and below by virtual rows of 1s.  Row 1 is the top nontrivial row and
columns are indexed cyclically mod ``2n``.  Entries at integer and
half-integer positions of the doubly-indexed picture occupy alternating
columns of this flattened grid: the cell labeled ``(i, j)`` (both integer
or both half-integer, with ``i - j`` between -1 and ``m``) lands at
flattened row ``i - j + 1`` and column ``i + j mod 2n``.

The local rule, flattened: for every cell,

    rows[r][c-1] * rows[r][c+1] - rows[r-1][c] * rows[r+1][c] = rows[r][c]

with ``rows[0][.] = rows[m+1][.] = 1`` and cyclic column wrap.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    DivisionByZero,
    IndexOutOfStripe,
    NonIntegral,
    NonPositive,
    NotClosed,
    NotDivisible,
)
from .exact import LaurentPoly


class Fragment:
    """One period of an integral closed 2-frieze; immutable value object.

    Equality is entrywise on the chosen column window.  Shift-equivalence
    is deliberately not built in; it lives in the symmetry module.
    """

    __slots__ = ("width", "rows", "_hash")

    def __init__(self, width: int, rows):
        if width < 0:
            raise ValueError("width must be nonnegative")
        period = 2 * (width + 4)
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if len(rows) != width:
            raise ValueError(f"expected {width} rows, got {len(rows)}")
        for row in rows:
            if len(row) != period:
                raise ValueError(f"rows must have {period} entries")
            if any(v < 1 for v in row):
                raise ValueError("entries must be positive integers")
        self.width = width
        self.rows = rows
        self._hash = None

    @property
    def period(self) -> int:
        return 2 * (self.width + 4)

    def column(self, c: int):
        c %= self.period
        return tuple(row[c] for row in self.rows)

    def shifted(self, k: int) -> "Fragment":
        p = self.period
        k %= p
        return Fragment(self.width, [row[k:] + row[:k] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Fragment):
            return NotImplemented
        return self.width == other.width and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.width, self.rows))
        return self._hash

    def __repr__(self):
        return f"Fragment(width={self.width}, rows={self.rows!r})"


class SymbolicFragment:
    """Same shape as Fragment with Laurent-polynomial entries."""

    __slots__ = ("width", "rows")

    def __init__(self, width: int, rows):
        period = 2 * (width + 4)
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != width or any(len(row) != period for row in rows):
            raise ValueError("bad symbolic grid shape")
        self.width = width
        self.rows = rows

    @property
    def period(self) -> int:
        return 2 * (self.width + 4)

    def __eq__(self, other):
        if not isinstance(other, SymbolicFragment):
            return NotImplemented
        return self.width == other.width and self.rows == other.rows

    def evaluate(self, point) -> Fragment:
        """Entrywise exact substitution; the result must be integral."""
        rows = []
        for row in self.rows:
            out = []
            for p in row:
                v = p.evaluate(point)
                if v.denominator != 1:
                    raise NonIntegral(f"entry {p} evaluates to {v}")
                out.append(int(v))
            rows.append(out)
        return Fragment(self.width, rows)


class RuleViolation(NamedTuple):
    row: int  # 1-based nontrivial row
    col: int  # 0-based column
    lhs: object  # stored center entry
    rhs: object  # left*right - up*down recomputed from neighbors


def check_local_rule(frag: Fragment) -> list[RuleViolation]:
    """All cells where the flattened local rule fails (empty if valid)."""
    m, p, rows = frag.width, frag.period, frag.rows
    bad = []
    for r in range(m):
        row = rows[r]
        up = rows[r - 1] if r > 0 else None
        down = rows[r + 1] if r < m - 1 else None
        for c in range(p):
            left = row[(c - 1) % p]
            right = row[(c + 1) % p]
            u = up[c] if up is not None else 1
            d = down[c] if down is not None else 1
            rhs = left * right - u * d
            if rhs != row[c]:
                bad.append(RuleViolation(r + 1, c, row[c], rhs))
    return bad


def propagate(width: int, col0, col1, count: int):
    """Propagate ``count`` columns rightward over exact rationals.

    Returns the list of columns (each a tuple of Fractions), starting with
    the two seeds.  Entries must stay nonzero; a zero divisor raises
    DivisionByZero naming the offending cell.
    """
    cols = [tuple(Fraction(v) for v in col0), tuple(Fraction(v) for v in col1)]
    if len(cols[0]) != width or len(cols[1]) != width:
        raise ValueError("seed columns must have one entry per row")
    one = Fraction(1)
    for c in range(2, count):
        prev, prev2 = cols[c - 1], cols[c - 2]
        new = []
        for r in range(width):
            up = prev[r - 1] if r > 0 else one
            down = prev[r + 1] if r < width - 1 else one
            if prev2[r] == 0:
                raise DivisionByZero(f"zero entry at row {r + 1}, column {c - 2}")
            new.append((prev[r] + up * down) / prev2[r])
        cols.append(tuple(new))
    return cols


def complete_from_columns(width: int, col0, col1) -> Fragment:
    """The unique closed pattern containing the two given consecutive columns.

    Seeds may be rationals; the completed grid must consist of positive
    integers.  Non-integers are rejected only after the whole period is
    propagated, but the reported cell is the earliest offender in
    column-major order.
    """
    period = 2 * (width + 4)
    for c, col in enumerate((col0, col1)):
        for r, v in enumerate(col):
            if Fraction(v) <= 0:
                raise NonPositive(f"seed entry at row {r + 1}, column {c} is {v}")
    cols = propagate(width, col0, col1, period + 2)
    for c in range(period):
        for r in range(width):
            v = cols[c][r]
            if v <= 0:
                raise NonPositive(f"entry at row {r + 1}, column {c} is {v}")
            if v.denominator != 1:
                raise NonIntegral(f"entry at row {r + 1}, column {c} is {v}")
    if cols[period] != cols[0] or cols[period + 1] != cols[1]:
        c = period if cols[period] != cols[0] else period + 1
        r = next(r for r in range(width) if cols[c][r] != cols[c - period][r])
        raise NotClosed(f"column {c} does not reproduce column {c - period} "
                        f"(first differs at row {r + 1})")
    rows = [[int(cols[c][r]) for c in range(period)] for r in range(width)]
    return Fragment(width, rows)


def seed_zigzag(width: int, values):
    """Distribute 2m values over the two seed columns in the zigzag layout.

    Column 0 reads values 1, m+2, 3, m+4, ... down the rows; column 1 reads
    m+1, 2, m+3, 4, ...; so value 1 sits in the top-left cell.
    """
    values = list(values)
    m = width
    if len(values) != 2 * m:
        raise ValueError("need exactly 2*width values")
    col0 = [values[r] if r % 2 == 0 else values[m + r] for r in range(m)]
    col1 = [values[m + r] if r % 2 == 0 else values[r] for r in range(m)]
    return col0, col1


def complete_symbolic(width: int) -> SymbolicFragment:
    """The formal pattern in the variables x1..x_{2m}.

    Propagation runs over the Laurent ring with exact division; every entry
    comes out a Laurent polynomial (NotDivisible here means a broken
    invariant upstream, not a user error).
    """
    m = width
    nv = 2 * m
    xs = [LaurentPoly.variable(i, nv) for i in range(1, nv + 1)]
    col0, col1 = seed_zigzag(m, xs)
    period = 2 * (m + 4)
    one = LaurentPoly.const(nv, 1)
    cols = [tuple(col0), tuple(col1)]
    for c in range(2, period + 2):
        prev, prev2 = cols[c - 1], cols[c - 2]
        new = []
        for r in range(m):
            up = prev[r - 1] if r > 0 else one
            down = prev[r + 1] if r < m - 1 else one
            new.append((prev[r] + up * down).div_exact(prev2[r]))
        cols.append(tuple(new))
    if cols[period] != cols[0] or cols[period + 1] != cols[1]:
        raise NotDivisible("formal propagation failed to close; internal error")
    rows = [[cols[c][r] for c in range(period)] for r in range(m)]
    return SymbolicFragment(m, rows)


def minimal_period(frag: Fragment) -> int:
    """Smallest divisor p of the period with column shift by p the identity."""
    p = frag.period
    for d in range(1, p + 1):
        if p % d:
            continue
        if all(row[(c + d) % p] == row[c] for row in frag.rows for c in range(p)):
            return d
    return p


def entry_at(frag: Fragment, i, j):
    """Entry at position (i, j) of the doubly-indexed picture.

    ``i`` and ``j`` must be both integers or both half-integers with
    ``-1 <= i - j <= width``; the two boundary diagonals return 1.
    """
    i, j = Fraction(i), Fraction(j)
    d = i - j
    c = i + j
    if d.denominator != 1 or c.denominator != 1:
        raise IndexOutOfStripe(f"({i}, {j}) is not a grid cell")
    d, c = int(d), int(c)
    if not -1 <= d <= frag.width:
        raise IndexOutOfStripe(f"({i}, {j}) lies outside the band")
    if d == -1 or d == frag.width:
        return 1
    return frag.rows[d][c % frag.period]


# -- serialization ----------------------------------------------------------


def to_json(frag: Fragment) -> str:
    return json.dumps(
        {"width": frag.width, "period": frag.period,
         "rows": [list(row) for row in frag.rows]}
    ) + "\n"


def from_json(text: str) -> Fragment:
    data = json.loads(text)
    frag = Fragment(data["width"], data["rows"])
    if data.get("period", frag.period) != frag.period:
        raise ValueError("period field inconsistent with width")
    return frag


def to_text(frag: Fragment, pretty: bool = False) -> str:
    """Whitespace-separated grid; pretty form adds the border rows of 1s."""
    rows = [list(row) for row in frag.rows]
    if pretty:
        border = [1] * frag.period
        rows = [border] + rows + [border]
    widths = [max(len(str(rows[r][c])) for r in range(len(rows)))
              for c in range(frag.period)]
    lines = [" ".join(str(v).rjust(w) for v, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Fragment:
    """Parse a plain or pretty grid; the period/width relation disambiguates
    whether border rows are present."""
    rows = [[int(tok) for tok in line.split()] for line in text.splitlines()
            if line.strip()]
    if not rows:
        raise ValueError("empty grid")
    ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise ValueError("ragged grid")
    if ncols == 2 * (len(rows) - 2 + 4) and \
            all(v == 1 for v in rows[0]) and all(v == 1 for v in rows[-1]):
        return Fragment(len(rows) - 2, rows[1:-1])
    if ncols == 2 * (len(rows) + 4):
        return Fragment(len(rows), rows)
    raise ValueError("grid shape matches neither bordered nor bare layout")
