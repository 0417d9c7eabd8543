"""Distinguishability partition of Bell states and channel capacities.

Two encoded states can be told apart by a measurement setup exactly when
their detection-outcome supports are disjoint, so the distinguishable
groups are the connected components of the confusability graph (states as
vertices, edges where supports intersect). The channel capacity of the
resulting superdense-coding scheme is log2 of the number of usable groups.

Policies: ``strict`` counts every group. ``loss_conservative`` models
threshold (non-number-resolving) detectors that cannot certify two-photon
arrival: any group whose support contains a single-click outcome is
quarantined and excluded from the capacity count. With the beam-splitter
setup this drops exactly the bunched group (7 -> 6 usable groups); with
the ancilla-assisted setup 12 -> 11.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .detection import MODEL_PNRD, MODEL_THRESHOLD, Outcome, outcome_distribution
from .networks import SETUP_FIG1, SETUP_FIG2, evolve
from .states import SinglePhotonUnitary, TwoPhotonState

POLICY_STRICT = "strict"
POLICY_LOSS_CONSERVATIVE = "loss_conservative"
POLICIES = (POLICY_STRICT, POLICY_LOSS_CONSERVATIVE)


@dataclass(frozen=True)
class StateGroup:
    """One distinguishable group: its members and their shared outcome support."""

    index: int
    members: tuple[str, ...]
    support: frozenset[Outcome]
    quarantined: bool = False

    @property
    def needs_number_resolution(self) -> bool:
        return any(o.is_bunched for o in self.support)


@dataclass(frozen=True)
class GroupTable:
    """A partition of state labels into groups with pairwise disjoint supports."""

    setup: str
    model: str
    policy: str
    groups: tuple[StateGroup, ...]

    def __post_init__(self) -> None:
        seen_members: set[str] = set()
        seen_outcomes: set[Outcome] = set()
        for group in self.groups:
            if seen_members & set(group.members):
                raise ValueError("groups do not partition the state labels")
            if seen_outcomes & group.support:
                raise ValueError("group supports are not pairwise disjoint")
            seen_members |= set(group.members)
            seen_outcomes |= group.support

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for group in self.groups for label in group.members)

    @property
    def usable_groups(self) -> tuple[StateGroup, ...]:
        return tuple(g for g in self.groups if not g.quarantined)

    def group_of(self, label: str) -> StateGroup:
        for group in self.groups:
            if label in group.members:
                return group
        raise KeyError(label)

    def decoder(self) -> dict[Outcome, int]:
        """Outcome -> group index map; total over the union of supports."""
        return {o: g.index for g in self.groups for o in g.support}

    def to_dict(self) -> dict:
        return {
            "setup": self.setup,
            "model": self.model,
            "policy": self.policy,
            "groups": [
                {
                    "id": g.index,
                    "members": list(g.members),
                    "outcomes": sorted(o.label for o in g.support),
                    "quarantined": g.quarantined,
                }
                for g in self.groups
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GroupTable":
        groups = tuple(
            StateGroup(
                index=g["id"],
                members=tuple(g["members"]),
                support=frozenset(Outcome.from_label(lbl) for lbl in g["outcomes"]),
                quarantined=g.get("quarantined", False),
            )
            for g in data["groups"]
        )
        return cls(data["setup"], data["model"], data["policy"], groups)


def classify(
    states: Sequence[tuple[str, TwoPhotonState]],
    network: SinglePhotonUnitary,
    model: str = MODEL_PNRD,
    policy: str = POLICY_STRICT,
) -> GroupTable:
    """Partition labelled states into distinguishable groups under a setup.

    Evolves every state, computes its outcome support, and returns the
    connected components of the confusability graph, numbered by first
    appearance in the input order.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    if not states:
        raise ValueError("no states to classify")
    labels = [label for label, _ in states]
    if len(set(labels)) != len(labels):
        raise ValueError("state labels must be unique")
    supports = [
        outcome_distribution(evolve(state, network), model).support for _, state in states
    ]

    parent = list(range(len(states)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(states)):
        for k in range(i + 1, len(states)):
            if supports[i] & supports[k]:
                ri, rk = find(i), find(k)
                if ri != rk:
                    parent[max(ri, rk)] = min(ri, rk)

    components: dict[int, list[int]] = {}
    for i in range(len(states)):
        components.setdefault(find(i), []).append(i)

    setup = SETUP_FIG2 if any(m.pol for m in network.in_modes) else SETUP_FIG1
    groups = []
    for index, root in enumerate(sorted(components), start=1):
        member_ids = components[root]
        support = frozenset().union(*(supports[i] for i in member_ids))
        quarantined = (
            policy == POLICY_LOSS_CONSERVATIVE
            and model == MODEL_THRESHOLD
            and any(o.is_single_click for o in support)
        )
        groups.append(
            StateGroup(
                index=index,
                members=tuple(labels[i] for i in member_ids),
                support=support,
                quarantined=quarantined,
            )
        )
    return GroupTable(setup, model, policy, tuple(groups))


def channel_capacity(table: GroupTable) -> float:
    """Superdense-coding capacity in bits per photon: log2(usable groups)."""
    usable = len(table.usable_groups)
    if usable == 0:
        raise ValueError("no usable groups, capacity undefined")
    return math.log2(usable)
