"""Quiver mutation, seeds, the bipartite belt, and unitary-pattern evaluation.

A quiver on N vertices is encoded by its skew-symmetric exchange matrix:
``b[i][j]`` is the number of arrows i -> j minus the number j -> i
(0-based internally; the public API numbers vertices 1..N to match the
grid layout and the CLI).  Mutation sequences are applied left to right:
``(2, 4)`` means "mutate at 2, then at 4".
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .errors import CapExceeded, InternalContradiction, NotBipartite
from .exact import LaurentPoly
from .frieze import Fragment, complete_from_columns, seed_zigzag


class Quiver:
    __slots__ = ("matrix", "_hash")

    def __init__(self, matrix):
        matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        n = len(matrix)
        for i, row in enumerate(matrix):
            if len(row) != n:
                raise ValueError("matrix must be square")
            if matrix[i][i] != 0:
                raise ValueError("no loops allowed")
            for j in range(n):
                if matrix[i][j] != -matrix[j][i]:
                    raise ValueError("matrix must be skew-symmetric")
        self.matrix = matrix
        self._hash = None

    @property
    def n(self) -> int:
        return len(self.matrix)

    def arrows(self):
        """Derived drawn-graph view: (source, target, multiplicity), 1-based."""
        out = []
        for i, row in enumerate(self.matrix):
            for j, v in enumerate(row):
                if v > 0:
                    out.append((i + 1, j + 1, v))
        return out

    def mutate(self, k: int) -> "Quiver":
        """Matrix mutation at vertex k (1-based)."""
        k -= 1
        b = self.matrix
        n = self.n
        new = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == k or j == k:
                    row.append(-b[i][j])
                elif b[i][k] > 0 and b[k][j] > 0:
                    row.append(b[i][j] + b[i][k] * b[k][j])
                elif b[i][k] < 0 and b[k][j] < 0:
                    row.append(b[i][j] - b[i][k] * b[k][j])
                else:
                    row.append(b[i][j])
            new.append(row)
        return Quiver(new)

    def opposite(self) -> "Quiver":
        return Quiver([[-v for v in row] for row in self.matrix])

    def bipartite_classes(self):
        """2-coloring of the underlying graph; vertex 1 gets '+'.

        Returns (plus, minus) as 1-based tuples; raises NotBipartite when
        no such coloring exists.
        """
        n = self.n
        color = [0] * n
        for start in range(n):
            if color[start]:
                continue
            color[start] = 1
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(n):
                    if self.matrix[i][j] == 0:
                        continue
                    if color[j] == 0:
                        color[j] = -color[i]
                        queue.append(j)
                    elif color[j] == color[i]:
                        raise NotBipartite("graph has an odd cycle")
        plus = tuple(i + 1 for i in range(n) if color[i] == 1)
        minus = tuple(i + 1 for i in range(n) if color[i] == -1)
        return plus, minus

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.matrix)
        return self._hash

    def __repr__(self):
        return f"Quiver({self.matrix!r})"


def quiver_qm(m: int) -> Quiver:
    """The 2 x m grid quiver attached to width-m patterns.

    Vertices 1..m form the top row, m+1..2m the bottom row.  Horizontal
    arrows run odd -> even along the top and even -> odd along the bottom;
    vertical arrows point up at odd columns and down at even columns, so
    the orientation of the last square depends on the parity of m.  The
    graph is bipartite with vertex 1 in the '+' class.
    """
    if m < 1:
        raise ValueError("width must be at least 1")
    b = [[0] * (2 * m) for _ in range(2 * m)]

    def arrow(i, j):
        b[i - 1][j - 1] += 1
        b[j - 1][i - 1] -= 1

    for col in range(1, m):
        if col % 2:
            arrow(col, col + 1)
            arrow(m + col + 1, m + col)
        else:
            arrow(col + 1, col)
            arrow(m + col, m + col + 1)
    for col in range(1, m + 1):
        if col % 2:
            arrow(m + col, col)
        else:
            arrow(col, m + col)
    return Quiver(b)


class Seed:
    """A quiver plus one attached value per vertex.

    Values are either Laurent polynomials (symbolic mode) or exact
    rationals (numeric mode).  ``history`` records the mutation sequence
    from whatever seed this one was grown from; it is what makes seeds
    produced by enumeration replayable.
    """

    __slots__ = ("quiver", "vars", "history")

    def __init__(self, quiver: Quiver, vars, history=()):
        vars = tuple(vars)
        if len(vars) != quiver.n:
            raise ValueError("one value per vertex required")
        self.quiver = quiver
        self.vars = vars
        self.history = tuple(history)

    @property
    def symbolic(self) -> bool:
        return bool(self.vars) and isinstance(self.vars[0], LaurentPoly)

    def mutate(self, k: int) -> "Seed":
        """Exchange the value at vertex k (1-based) and mutate the quiver."""
        n = self.quiver.n
        if not 1 <= k <= n:
            raise ValueError(f"vertex {k} out of range 1..{n}")
        col = [self.quiver.matrix[i][k - 1] for i in range(n)]
        if self.symbolic:
            p_in = LaurentPoly.const(self.vars[0].nvars, 1)
            p_out = LaurentPoly.const(self.vars[0].nvars, 1)
        else:
            p_in = Fraction(1)
            p_out = Fraction(1)
        for i in range(n):
            if col[i] > 0:
                p_in = p_in * self.vars[i] ** col[i]
            elif col[i] < 0:
                p_out = p_out * self.vars[i] ** (-col[i])
        total = p_in + p_out
        if self.symbolic:
            new_var = total.div_exact(self.vars[k - 1])
        else:
            new_var = total / Fraction(self.vars[k - 1])
        vars = list(self.vars)
        vars[k - 1] = new_var
        return Seed(self.quiver.mutate(k), vars, self.history + (k,))

    def mutate_sequence(self, seq) -> "Seed":
        seed = self
        for k in seq:
            seed = seed.mutate(k)
        return seed

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return self.quiver == other.quiver and self.vars == other.vars

    def __hash__(self):
        return hash((self.quiver, self.vars))

    def __repr__(self):
        return f"Seed(vars={self.vars!r}, history={self.history!r})"


def initial_seed(m: int) -> Seed:
    """The symbolic seed (x1, ..., x_{2m}) on the grid quiver."""
    nv = 2 * m
    return Seed(quiver_qm(m), [LaurentPoly.variable(i, nv) for i in range(1, nv + 1)])


def mu_plus(seed: Seed) -> Seed:
    """Composite mutation over the '+' sign class (an involution)."""
    plus, _ = seed.quiver.bipartite_classes()
    return seed.mutate_sequence(plus)


def mu_minus(seed: Seed) -> Seed:
    """Composite mutation over the '-' sign class (an involution)."""
    _, minus = seed.quiver.bipartite_classes()
    return seed.mutate_sequence(minus)


def bar_sequence(seq, m: int):
    """Swap the roles of top and bottom vertices: i <-> i + m (mod 2m)."""
    return tuple((k - 1 + m) % (2 * m) + 1 for k in seq)


def ev_point(m: int, seq) -> tuple:
    """Values of x1..x_{2m} at the point where the cluster reached by ``seq``
    is identically 1.

    Computed by reverse mutation: push the quiver forward through the
    sequence, attach the all-ones values, and replay the sequence backwards
    (each single mutation is an involution).  Every intermediate value is a
    positive integer; a failed division would contradict the Laurent
    property and raises InternalContradiction.
    """
    quiver = quiver_qm(m)
    for k in seq:
        quiver = quiver.mutate(k)
    vals = [1] * (2 * m)
    for k in reversed(tuple(seq)):
        col = [quiver.matrix[i][k - 1] for i in range(2 * m)]
        p_in = 1
        p_out = 1
        for i, c in enumerate(col):
            if c > 0:
                p_in *= vals[i] ** c
            elif c < 0:
                p_out *= vals[i] ** (-c)
        q, r = divmod(p_in + p_out, vals[k - 1])
        if r:
            raise InternalContradiction(
                f"reverse mutation at {k} left remainder for sequence {seq}")
        vals[k - 1] = q
        quiver = quiver.mutate(k)
    return tuple(vals)


def eval_ev(m: int, seq) -> Fragment:
    """The integral pattern obtained by setting the cluster reached by
    ``seq`` to all ones; its first two columns carry the x-values in the
    zigzag layout."""
    col0, col1 = seed_zigzag(m, ev_point(m, seq))
    return complete_from_columns(m, col0, col1)


def cluster_key(vars) -> tuple:
    """Deduplication key: sorted canonical text forms of the variables."""
    return tuple(sorted(str(v) for v in vars))


def enumerate_clusters(m: int, cap: int | None = None,
                       depth: int | None = None) -> list[Seed]:
    """Breadth-first closure of the initial seed under single mutations,
    one representative seed per distinct cluster.

    Guaranteed to terminate for m <= 4 (finite mutation type); pass a cap
    or a depth bound (maximum mutation-sequence length) otherwise.
    """
    start = initial_seed(m)
    seen = {cluster_key(start.vars)}
    out = [start]
    queue = deque([start])
    while queue:
        seed = queue.popleft()
        if depth is not None and len(seed.history) >= depth:
            continue
        for k in range(1, 2 * m + 1):
            nxt = seed.mutate(k)
            key = cluster_key(nxt.vars)
            if key in seen:
                continue
            if cap is not None and len(out) >= cap:
                raise CapExceeded(f"more than {cap} clusters")
            seen.add(key)
            out.append(nxt)
            queue.append(nxt)
    return out


def cluster_equivalent(c: Seed, d: Seed) -> bool:
    """True when forcing c's variables to 1 forces d's variables to 1.

    Both seeds must have been reached from the same initial seed so their
    histories replay against the same grid quiver.  The check is numeric:
    take the x-point where c is all ones and push it through d's history.
    """
    m2 = c.quiver.n
    if d.quiver.n != m2:
        raise ValueError("seeds live on different vertex sets")
    m = m2 // 2
    point = ev_point(m, c.history)
    quiver = quiver_qm(m)
    vals = [Fraction(v) for v in point]
    for k in d.history:
        col = [quiver.matrix[i][k - 1] for i in range(m2)]
        p_in = Fraction(1)
        p_out = Fraction(1)
        for i, cc in enumerate(col):
            if cc > 0:
                p_in *= vals[i] ** cc
            elif cc < 0:
                p_out *= vals[i] ** (-cc)
        vals[k - 1] = (p_in + p_out) / vals[k - 1]
        quiver = quiver.mutate(k)
    return all(v == 1 for v in vals)


def reachable_value_multisets(m: int, values, cap: int = 200_000) -> set:
    """All value multisets reachable from a numeric seed by mutations.

    Explores the full (quiver, values) state graph breadth-first; raises
    CapExceeded if it fails to close within ``cap`` states.
    """
    start = (quiver_qm(m), tuple(Fraction(v) for v in values))
    seen = {start}
    queue = deque([start])
    multisets = set()
    while queue:
        quiver, vals = queue.popleft()
        multisets.add(tuple(sorted(vals)))
        for k in range(1, 2 * m + 1):
            col = [quiver.matrix[i][k - 1] for i in range(2 * m)]
            p_in = Fraction(1)
            p_out = Fraction(1)
            for i, c in enumerate(col):
                if c > 0:
                    p_in *= vals[i] ** c
                elif c < 0:
                    p_out *= vals[i] ** (-c)
            new_vals = list(vals)
            new_vals[k - 1] = (p_in + p_out) / vals[k - 1]
            state = (quiver.mutate(k), tuple(new_vals))
            if state not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"state space exceeded {cap}")
                seen.add(state)
                queue.append(state)
    return multisets
