# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel; same contract as twofrieze._scan_py.scan.

Arithmetic runs in 64-bit machine integers.  Any candidate whose
propagation climbs past 2^31 (so that a following product could overflow)
is re-checked with Python big integers instead of being dropped; valid
patterns at sane bounds never get near the guard, so the slow path is
exercised only by near-miss candidates.

Grids are stack-allocated for widths up to 8 (periods up to 24 columns),
which covers everything the search front end asks of the compiled path.
"""

from twofrieze._scan_py import complete_grid

cdef long long GUARD = 1 << 31


cdef int _finish(long long *col0, long long *col1, int m, list results,
                 list deferred) except -1:
    cdef long long grid[8][26]
    cdef long long up, down, num, q
    cdef int period = 2 * (m + 4)
    cdef int r, c
    for r in range(m):
        grid[r][0] = col0[r]
        grid[r][1] = col1[r]
    for c in range(2, period + 2):
        for r in range(m):
            up = grid[r - 1][c - 1] if r > 0 else 1
            down = grid[r + 1][c - 1] if r < m - 1 else 1
            num = grid[r][c - 1] + up * down
            q = num // grid[r][c - 2]
            if q * grid[r][c - 2] != num:
                return 0
            if q > GUARD:
                deferred.append((tuple([col0[i] for i in range(m)]),
                                 tuple([col1[i] for i in range(m)])))
                return 0
            grid[r][c] = q
    for r in range(m):
        if grid[r][period] != grid[r][0] or grid[r][period + 1] != grid[r][1]:
            return 0
    results.append(tuple([grid[r][c] for r in range(m) for c in range(period)]))
    return 0


cdef int _fill_col1(long long *col0, long long *col1, int t, int m, int bound,
                    list results, list deferred) except -1:
    cdef long long v, up
    cdef int last = t == m - 1
    if t == m:
        _finish(col0, col1, m, results, deferred)
        return 0
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
        _fill_col1(col0, col1, t + 1, m, bound, results, deferred)
    return 0


cdef int _fill_col0(long long *col0, long long *col1, int t, int m,
                    int first_lo, int first_hi, int bound,
                    list results, list deferred) except -1:
    cdef long long v
    cdef long long lo = first_lo if t == 0 else 1
    cdef long long hi = first_hi if t == 0 else bound
    if t == m:
        _fill_col1(col0, col1, 0, m, bound, results, deferred)
        return 0
    for v in range(lo, hi + 1):
        col0[t] = v
        _fill_col0(col0, col1, t + 1, m, first_lo, first_hi, bound,
                   results, deferred)
    return 0


def scan(int width, int bound, int first_lo=1, first_hi=None):
    """All valid grids whose seed columns have entries in 1..bound;
    see twofrieze._scan_py.scan for the full contract."""
    cdef long long col0[8]
    cdef long long col1[8]
    cdef int hi = bound if first_hi is None else <int> first_hi
    if width < 1 or width > 8:
        raise ValueError("compiled kernel supports widths 1..8")
    if bound < 1 or bound > 100000:
        raise ValueError("bound out of range for the compiled kernel")
    results = []
    deferred = []
    _fill_col0(col0, col1, 0, width, first_lo, hi, bound, results, deferred)
    for c0, c1 in deferred:
        grid = complete_grid(width, c0, c1)
        if grid is not None:
            results.append(grid)
    return results
