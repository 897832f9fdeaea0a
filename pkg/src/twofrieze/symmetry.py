"""Dihedral action on fragments: column shift, reflection, orbits, canonical forms.

The generators act per row: ``tau`` shifts every row cyclically left by
one entry, ``sigma`` reverses every row around column 0 (entry at column c
moves to column -c mod 2n).  Together they generate a dihedral group of
order ``2 * period`` on fragments.
"""

from __future__ import annotations

from .frieze import Fragment


def tau(frag: Fragment, k: int = 1) -> Fragment:
    """Cyclic column shift left by k (k may be negative)."""
    return frag.shifted(k)


def sigma(frag: Fragment) -> Fragment:
    """Reflection: each row (a1, a2, ..., a_{2n}) becomes (a1, a_{2n}, ..., a2)."""
    p = frag.period
    return Fragment(frag.width,
                    [tuple(row[(-c) % p] for c in range(p)) for row in frag.rows])


class DihedralElement:
    """Group element tau^shift * sigma^reflected acting on fragments of a fixed period."""

    __slots__ = ("period", "shift", "reflected")

    def __init__(self, period: int, shift: int = 0, reflected: bool = False):
        self.period = period
        self.shift = shift % period
        self.reflected = bool(reflected)

    def act(self, frag: Fragment) -> Fragment:
        if frag.period != self.period:
            raise ValueError("period mismatch")
        out = sigma(frag) if self.reflected else frag
        return tau(out, self.shift)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if self.period != other.period:
            raise ValueError("period mismatch")
        # sigma * tau^s = tau^-s * sigma
        shift = self.shift + (-other.shift if self.reflected else other.shift)
        return DihedralElement(self.period, shift, self.reflected ^ other.reflected)

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return DihedralElement(self.period, self.shift, True)
        return DihedralElement(self.period, -self.shift, False)

    def __eq__(self, other):
        if not isinstance(other, DihedralElement):
            return NotImplemented
        return (self.period, self.shift, self.reflected) == \
               (other.period, other.shift, other.reflected)

    def __hash__(self):
        return hash((self.period, self.shift, self.reflected))

    def __repr__(self):
        return f"DihedralElement(period={self.period}, shift={self.shift}, " \
               f"reflected={self.reflected})"


def group_elements(period: int):
    """All 2*period elements of the dihedral group for this period."""
    for reflected in (False, True):
        for shift in range(period):
            yield DihedralElement(period, shift, reflected)


def orbit(frag: Fragment) -> set[Fragment]:
    """The set {g . frag} over the whole dihedral group; its size divides 2*period."""
    out = set()
    g = frag
    h = sigma(frag)
    for _ in range(frag.period):
        out.add(g)
        out.add(h)
        g = tau(g)
        h = tau(h)
    return out


def canonical_form(frag: Fragment) -> Fragment:
    """Lexicographically least orbit member under row-major entry comparison.

    Idempotent and constant on orbits, so it serves as the deduplication
    key when counting patterns up to symmetry.
    """
    return min(orbit(frag), key=lambda f: f.rows)
