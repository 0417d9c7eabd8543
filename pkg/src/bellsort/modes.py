"""Single-photon mode labels for the two-arm multi-path interferometers.

A photon occupies one mode identified by (arm, path, polarization). The two
input arms are labelled "A" and "B"; after the beam-splitter stage the same
labels denote the two output ports (detectors keep the uppercase names).
Paths are integers in ``[0, d)``. Polarization is ``None`` for path-only
states, ``"H"``/``"V"`` in the linear basis, and ``"+"``/``"-"`` in the
diagonal basis used by the polarization analyzers.

Modes are totally ordered by (arm, path, polarization rank) so that
unordered photon pairs have a canonical storage order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

ARM_FIRST = "A"
ARM_SECOND = "B"
ARMS = (ARM_FIRST, ARM_SECOND)

POL_LINEAR = ("H", "V")
POL_DIAGONAL = ("+", "-")

_POL_RANK = {None: 0, "H": 0, "V": 1, "+": 0, "-": 1}


@total_ordering
@dataclass(frozen=True)
class Mode:
    """One bosonic mode: which arm, which path, which polarization slot."""

    arm: str
    path: int
    pol: str | None = None

    def __post_init__(self) -> None:
        if self.arm not in ARMS:
            raise ValueError(f"unknown arm {self.arm!r}, expected one of {ARMS}")
        if not isinstance(self.path, int) or self.path < 0:
            raise ValueError(f"path index must be a nonnegative integer, got {self.path!r}")
        if self.pol not in (None, "H", "V", "+", "-"):
            raise ValueError(f"unknown polarization {self.pol!r}")

    @property
    def sort_key(self) -> tuple:
        return (self.arm, self.path, _POL_RANK[self.pol], self.pol or "")

    def __lt__(self, other: "Mode") -> bool:
        if not isinstance(other, Mode):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def label(self) -> str:
        return f"{self.arm}{self.path}{self.pol or ''}"

    def __repr__(self) -> str:
        return f"Mode({self.label})"


def path_modes(dim: int) -> tuple[Mode, ...]:
    """Canonical path-only mode basis: A0..A(d-1), B0..B(d-1)."""
    return tuple(Mode(arm, x) for arm in ARMS for x in range(dim))


def polarized_modes(dim: int, basis: tuple[str, str] = POL_LINEAR) -> tuple[Mode, ...]:
    """Canonical polarized mode basis, polarization minor within each path."""
    return tuple(Mode(arm, x, p) for arm in ARMS for x in range(dim) for p in basis)


def canonical_pair(m1: Mode, m2: Mode) -> tuple[Mode, Mode]:
    """Order an unordered photon pair canonically (m1 <= m2)."""
    return (m1, m2) if m1 <= m2 else (m2, m1)
