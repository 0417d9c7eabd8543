"""Detector outcomes, exact Born-rule distributions, and seeded sampling.

One detector sits on every output mode; labels follow the output arm and
path (``A0`` .. ``B3``) with a ``+``/``-`` suffix in the ancilla-assisted
setup (``A0+`` .. ``B3-``). A photon-number-resolving detector (PNRD)
reports the full click multiset, so ``A0 A0`` is a valid outcome; a
threshold detector only reports click/no-click and collapses that outcome
to the singleton ``A0``.

Sampling uses numpy's seeded PCG64 generator; identical (seed, shots) give
bit-identical counts.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .modes import Mode
from .states import NORM_TOL, TwoPhotonState

MODEL_PNRD = "pnrd"
MODEL_THRESHOLD = "threshold"
MODELS = (MODEL_PNRD, MODEL_THRESHOLD)

RNG_ALGORITHM = "PCG64"

_DETECTOR_RE = re.compile(r"^([AB])(\d+)([+-]?)$")
_PROB_TOL = 1e-9


@dataclass(frozen=True, order=True)
class DetectorId:
    """One detector: output arm, path, and optional +/- polarization port."""

    arm: str
    path: int
    pol: str | None = None

    @classmethod
    def from_mode(cls, mode: Mode) -> "DetectorId":
        if mode.pol in ("H", "V"):
            raise ValueError(
                f"mode {mode.label} is not in a detector basis (apply the 45-degree analyzers first)"
            )
        return cls(mode.arm, mode.path, mode.pol)

    @classmethod
    def from_label(cls, label: str) -> "DetectorId":
        match = _DETECTOR_RE.match(label)
        if not match:
            raise ValueError(f"not a detector label: {label!r}")
        arm, path, pol = match.groups()
        return cls(arm, int(path), pol or None)

    @property
    def label(self) -> str:
        return f"{self.arm}{self.path}{self.pol or ''}"

    def __repr__(self) -> str:
        return f"DetectorId({self.label})"


@dataclass(frozen=True)
class Outcome:
    """A detection event: the sorted clicks, with multiplicity under PNRD."""

    clicks: tuple[DetectorId, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.clicks) <= 2:
            raise ValueError("an outcome carries one or two clicks")
        object.__setattr__(self, "clicks", tuple(sorted(self.clicks)))

    @classmethod
    def pair(cls, d1: DetectorId, d2: DetectorId) -> "Outcome":
        return cls((d1, d2))

    @classmethod
    def from_label(cls, label: str) -> "Outcome":
        return cls(tuple(DetectorId.from_label(part) for part in label.split()))

    @property
    def label(self) -> str:
        return " ".join(d.label for d in self.clicks)

    @property
    def is_single_click(self) -> bool:
        return len(self.clicks) == 1

    @property
    def is_bunched(self) -> bool:
        return len(self.clicks) == 2 and self.clicks[0] == self.clicks[1]

    def collapse_multiplicity(self) -> "Outcome":
        """The threshold-detector view: drop repeated clicks."""
        return Outcome(tuple(sorted(set(self.clicks))))

    def __repr__(self) -> str:
        return f"Outcome({self.label})"


@dataclass(frozen=True)
class OutcomeDistribution:
    """Exact probability map over detection outcomes for one detector model."""

    model: str
    probs: Mapping[Outcome, float] = field(repr=False)

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ValueError(f"unknown detector model {self.model!r}")
        cleaned = {o: float(p) for o, p in self.probs.items() if p > 0.0}
        if any(p < 0 for p in self.probs.values()):
            raise ValueError("negative probability")
        total = sum(cleaned.values())
        if abs(total - 1.0) > _PROB_TOL:
            raise ValueError(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "probs", MappingProxyType(cleaned))

    @property
    def support(self) -> frozenset[Outcome]:
        return frozenset(self.probs)

    def sorted_items(self) -> list[tuple[Outcome, float]]:
        """Deterministic (label-sorted) iteration order, used for sampling and rendering."""
        return sorted(self.probs.items(), key=lambda kv: kv[0].label)

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "probs": {o.label: p for o, p in self.sorted_items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OutcomeDistribution":
        probs = {Outcome.from_label(label): p for label, p in data["probs"].items()}
        return cls(data["model"], probs)


def outcome_distribution(state: TwoPhotonState, model: str = MODEL_PNRD) -> OutcomeDistribution:
    """Born-rule outcome probabilities of a post-network two-photon state.

    PNRD weights: P({m, m}) = |psi(m, m)|**2 and P({m1, m2}) =
    2 |psi(m1, m2)|**2 for distinct modes. The threshold model additionally
    collapses bunched outcomes to single clicks, merging probability.
    """
    if model not in MODELS:
        raise ValueError(f"unknown detector model {model!r}")
    deviation = abs(state.norm() - 1.0)
    if deviation > 1e-6:
        raise ValueError(f"state is not normalized (norm off by {deviation:.3e})")
    probs: dict[Outcome, float] = {}
    for (m1, m2), a in state.amps.items():
        weight = 1.0 if m1 == m2 else 2.0
        outcome = Outcome.pair(DetectorId.from_mode(m1), DetectorId.from_mode(m2))
        if model == MODEL_THRESHOLD:
            outcome = outcome.collapse_multiplicity()
        probs[outcome] = probs.get(outcome, 0.0) + weight * abs(a) ** 2
    total = sum(probs.values())
    return OutcomeDistribution(model, {o: p / total for o, p in probs.items()})


def sample(dist: OutcomeDistribution, shots: int, seed: int) -> Counter[Outcome]:
    """Draw i.i.d. detection outcomes; returns the outcome multiset.

    The generator is numpy's PCG64 seeded with ``seed``; identical
    (seed, shots) pairs reproduce identical counts.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    items = dist.sorted_items()
    pvals = np.array([p for _, p in items])
    pvals = pvals / pvals.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, pvals)
    return Counter({o: int(c) for (o, _), c in zip(items, counts) if c})
