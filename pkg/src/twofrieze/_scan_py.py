"""Pure-Python scan kernel: exhaustive search over bounded seed columns.

``scan`` enumerates every pair of seed columns with entries in
``1..bound`` whose completion is an integral closed pattern, pruning a
candidate as soon as a propagated entry fails to divide.  The compiled
kernel in ``_scan.pyx`` implements the same contract; both must return
the same multiset of grids (order may differ).
"""

from __future__ import annotations


def complete_grid(width: int, col0, col1):
    """Integer completion of two seed columns, or None if it fails.

    Returns the flattened row-major grid (a tuple of width * period ints)
    when every propagated entry divides exactly and the columns close up
    after one period.
    """
    m = width
    period = 2 * (m + 4)
    cols = [tuple(col0), tuple(col1)]
    for _ in range(2, period + 2):
        prev, prev2 = cols[-1], cols[-2]
        new = []
        for r in range(m):
            up = prev[r - 1] if r > 0 else 1
            down = prev[r + 1] if r < m - 1 else 1
            q, rem = divmod(prev[r] + up * down, prev2[r])
            if rem:
                return None
            new.append(q)
        cols.append(tuple(new))
    if cols[period] != cols[0] or cols[period + 1] != cols[1]:
        return None
    return tuple(cols[c][r] for r in range(m) for c in range(period))


def scan(width: int, bound: int, first_lo: int = 1, first_hi: int | None = None):
    """All valid grids whose seed columns have entries in 1..bound.

    ``first_lo``/``first_hi`` restrict the top-left entry, which is the
    unit of work parallel callers shard on.  Candidates are pruned level
    by level while the second column is being chosen: fixing rows up to t
    makes the propagated entry at row t-1 checkable.
    """
    m = width
    if m < 1:
        raise ValueError("width must be at least 1")
    if first_hi is None:
        first_hi = bound
    results = []
    col0 = [0] * m
    col1 = [0] * m

    def fill_col1(t):
        if t == m:
            grid = complete_grid(m, col0, col1)
            if grid is not None:
                results.append(grid)
            return
        last = t == m - 1
        for v in range(1, bound + 1):
            col1[t] = v
            if t >= 1:
                up = col1[t - 2] if t >= 2 else 1
                if (col1[t - 1] + up * v) % col0[t - 1]:
                    continue
            if last:
                up = col1[m - 2] if m >= 2 else 1
                if (v + up) % col0[m - 1]:
                    continue
            fill_col1(t + 1)

    def fill_col0(t):
        if t == m:
            fill_col1(0)
            return
        lo, hi = (first_lo, first_hi) if t == 0 else (1, bound)
        for v in range(lo, hi + 1):
            col0[t] = v
            fill_col0(t + 1)

    fill_col0(0)
    return results
