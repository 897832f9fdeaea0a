"""Bundled reference patterns used by the test suite and the docs.

Seven golden files ship with the package:

- ``width2_a`` .. ``width2_d``: the four width-2 patterns with nonconstant
  rows, one per symmetry class (orbit sizes 6, 12, 24, 8);
- ``width2_e``: the constant width-2 pattern of 2s (orbit size 1);
- ``width3_seam``: the width-3 pattern obtained by gluing width2_c and
  width2_d along their shared pair (2, 1);
- ``width4_grid``: a width-4 pattern, also reachable by gluing width2_e
  with the unique width-1 pattern over a pair of 1s.

Each file is stored in the canonical single-line JSON emitted by
``frieze.to_json``, so parse -> serialize round-trips byte for byte.
"""

from __future__ import annotations

from importlib import resources

from .frieze import Fragment, from_json

NAMES = (
    "width2_a",
    "width2_b",
    "width2_c",
    "width2_d",
    "width2_e",
    "width3_seam",
    "width4_grid",
)


def names() -> tuple[str, ...]:
    return NAMES


def path(name: str):
    if name not in NAMES:
        raise KeyError(f"unknown corpus entry {name!r}")
    return resources.files(__package__).joinpath("corpus_data", f"{name}.json")


def load(name: str) -> Fragment:
    return from_json(path(name).read_text())


def fragments() -> dict[str, Fragment]:
    return {name: load(name) for name in NAMES}
