"""Bounded exhaustive search for integral patterns, orbit counting, and
unitary classification.

Completeness caveat: there is no a-priori bound on seed entries, so counts
are always reported relative to the searched bound B ("complete w.r.t.
bound B").  For width 2, B = 10 is empirically ample: all 51 patterns have
first-column entries at most 6.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _kernel
from .cluster import enumerate_clusters, eval_ev
from .errors import CapExceeded
from .frieze import Fragment
from .symmetry import canonical_form, orbit


@dataclass(frozen=True)
class SearchConfig:
    width: int
    bound: int
    workers: int = 1
    cap: int | None = None

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        if self.width < 1:
            raise ValueError("width must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def _scan_slice(args):
    width, bound, lo, hi = args
    return _kernel.scan(width, bound, lo, hi)


def _seed_signature(width, grid):
    period = 2 * (width + 4)
    col0 = tuple(grid[r * period] for r in range(width))
    col1 = tuple(grid[r * period + 1] for r in range(width))
    return col0 + col1


def enumerate_fragments(cfg: SearchConfig) -> list[Fragment]:
    """Every valid pattern whose two seed columns have entries <= bound.

    Results are deduplicated entrywise and returned sorted by seed columns,
    so the output is independent of backend and worker scheduling.
    """
    if cfg.workers == 1:
        grids = _kernel.scan(cfg.width, cfg.bound)
    else:
        slices = [(cfg.width, cfg.bound, lo, lo) for lo in range(1, cfg.bound + 1)]
        grids = []
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for chunk in pool.map(_scan_slice, slices):
                grids.extend(chunk)
    grids = sorted(set(grids), key=lambda g: _seed_signature(cfg.width, g))
    if cfg.cap is not None and len(grids) > cfg.cap:
        raise CapExceeded(f"{len(grids)} results exceed cap {cfg.cap}")
    period = 2 * (cfg.width + 4)
    return [
        Fragment(cfg.width, [grid[r * period:(r + 1) * period]
                             for r in range(cfg.width)])
        for grid in grids
    ]


@dataclass(frozen=True)
class OrbitClass:
    representative: Fragment  # canonical form
    size: int  # full orbit size under the dihedral group
    members: int  # how many of the input fragments fall in this orbit


def count_orbits(frags) -> list[OrbitClass]:
    """Group fragments by canonical form; deterministic order by representative."""
    groups: dict[Fragment, int] = {}
    for frag in frags:
        rep = canonical_form(frag)
        groups[rep] = groups.get(rep, 0) + 1
    return [
        OrbitClass(rep, len(orbit(rep)), members)
        for rep, members in sorted(groups.items(), key=lambda kv: kv[0].rows)
    ]


@dataclass
class UnitaryReport:
    """Partition of a fragment set by membership in the evaluation image.

    ``witnesses`` maps each fragment found in the image to the mutation
    sequence realizing it.  Fragments without a witness are certified
    non-unitary only if the cluster search was exhaustive; otherwise their
    status is unknown.
    """

    witnesses: dict = field(default_factory=dict)
    non_unitary: set = field(default_factory=set)
    unknown: set = field(default_factory=set)
    exhaustive: bool = False


def classify_unitary(frags, depth: int | None = None,
                     cluster_cap: int | None = None) -> UnitaryReport:
    """Search mutation sequences whose evaluation hits each fragment.

    ``depth=None`` explores the full cluster set (finite for widths up to
    4); a depth bound turns missing fragments into "unknown" rather than
    certified non-unitary.
    """
    frags = list(frags)
    if not frags:
        return UnitaryReport(exhaustive=True)
    widths = {f.width for f in frags}
    if len(widths) != 1:
        raise ValueError("fragments must share one width")
    m = widths.pop()
    image: dict[Fragment, tuple] = {}
    for seed in enumerate_clusters(m, cap=cluster_cap, depth=depth):
        frag = eval_ev(m, seed.history)
        if frag not in image:
            image[frag] = seed.history
    report = UnitaryReport(exhaustive=depth is None)
    for frag in frags:
        if frag in image:
            report.witnesses[frag] = image[frag]
        elif report.exhaustive:
            report.non_unitary.add(frag)
        else:
            report.unknown.add(frag)
    return report


def sample_unitary_fragments(width: int, count: int, length: int = 20,
                             seed: int = 0) -> list[Fragment]:
    """Canonical forms of patterns evaluated from random mutation sequences.

    Sequences avoid immediate repeats (which cancel); the RNG seed makes
    runs reproducible.  Returns one canonical form per sequence, in
    generation order, duplicates included.
    """
    rng = random.Random(seed)
    out = []
    vertices = list(range(1, 2 * width + 1))
    for _ in range(count):
        seq = []
        prev = None
        while len(seq) < length:
            k = rng.choice(vertices)
            if k == prev:
                continue
            seq.append(k)
            prev = k
        out.append(canonical_form(eval_ev(width, seq)))
    return out
