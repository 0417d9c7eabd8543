"""The two measurement interferometers and bosonic two-photon evolution.

Setup ``fig1`` is the bare two-photon interference measurement: one 50:50
beam splitter per path couples the two arms, acting as the Hadamard
|x>_A -> (|x>_a + |x>_b)/sqrt(2), |x>_B -> (|x>_a - |x>_b)/sqrt(2) on every
path x. Indistinguishable photons bunch (same output arm) when their joint
path state is exchange-symmetric and anti-bunch when it is antisymmetric,
which is all the information this setup extracts beyond the path pair.

Setup ``fig2`` adds a polarization ancilla pair (|HH> + |VV>)/sqrt(2) and
three stages:

1. ``pbs0_rail_swap`` -- polarizing beam splitters at 0 degrees between the
   paired path rails (0, 1) and (2, 3) of each arm: H transmits (path
   unchanged), V reflects into the partner rail (path x -> x XOR 1). Every
   Bell state is an eigenstate of the two-photon rail swap with eigenvalue
   (-1)**n, so the stage rewrites the phase bit n into the sign of the
   ancilla: |HH> + VV> -> |HH> + (-1)**n |VV>, paths unchanged.
2. ``bs_hadamard`` -- the fig1 beam splitters, identity on polarization.
3. ``pbs45_basis_change`` -- polarizing beam splitters at 45 degrees on
   every output rail, relabelling H/V to the diagonal detector basis
   |+> = (|H>+|V>)/sqrt(2), |-> = (|H>-|V>)/sqrt(2). The ancilla sign then
   shows up as same-sign (+/+, -/-) versus opposite-sign (+/-) detector
   pairs.

Evolution is exact: the symmetric two-photon amplitude matrix transforms as
psi -> U psi U^T, which keeps bosonic exchange statistics (and hence the
bunching interference) automatic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .modes import ARMS, Mode, POL_DIAGONAL, POL_LINEAR, path_modes, polarized_modes
from .states import SinglePhotonUnitary, TwoPhotonState

SETUP_FIG1 = "fig1"
SETUP_FIG2 = "fig2"
SETUPS = (SETUP_FIG1, SETUP_FIG2)

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class NetworkStage:
    """One optical element layer: its kind, the mode subsets it couples, its unitary."""

    kind: str
    couples: tuple[tuple[Mode, ...], ...]
    unitary: SinglePhotonUnitary


@dataclass(frozen=True)
class NetworkSpec:
    """Ordered stage list of a measurement setup; stages[0] is applied first."""

    setup: str
    dim: int
    stages: tuple[NetworkStage, ...]

    def unitary(self) -> SinglePhotonUnitary:
        composed = self.stages[0].unitary
        for stage in self.stages[1:]:
            composed = stage.unitary @ composed
        return composed


def _arm_hadamard(modes: tuple[Mode, ...]) -> SinglePhotonUnitary:
    """Beam splitter between arms on every (path, pol) rail pair.

    Convention: the first arm carries the + superposition and the second
    the - superposition; all derived supports are invariant under moving
    the minus sign to the first arm instead.
    """
    index = {m: i for i, m in enumerate(modes)}
    mat = np.zeros((len(modes), len(modes)))
    for mode in modes:
        if mode.arm != ARMS[0]:
            continue
        partner = Mode(ARMS[1], mode.path, mode.pol)
        i_a, i_b = index[mode], index[partner]
        mat[i_a, i_a] = _INV_SQRT2
        mat[i_b, i_a] = _INV_SQRT2
        mat[i_a, i_b] = _INV_SQRT2
        mat[i_b, i_b] = -_INV_SQRT2
    return SinglePhotonUnitary(modes, modes, mat)


def _bs_stage(modes: tuple[Mode, ...]) -> NetworkStage:
    couples = tuple(
        (m, Mode(ARMS[1], m.path, m.pol)) for m in modes if m.arm == ARMS[0]
    )
    return NetworkStage("bs_hadamard", couples, _arm_hadamard(modes))


def _pbs0_stage(dim: int) -> NetworkStage:
    """PBS at 0 degrees between paired rails: H stays, V hops path x -> x XOR 1."""
    modes = polarized_modes(dim, POL_LINEAR)
    index = {m: i for i, m in enumerate(modes)}
    mat = np.zeros((len(modes), len(modes)))
    for mode in modes:
        if mode.pol == "H":
            mat[index[mode], index[mode]] = 1.0
        else:
            hopped = Mode(mode.arm, mode.path ^ 1, "V")
            mat[index[hopped], index[mode]] = 1.0
    couples = tuple(
        (Mode(arm, x, "V"), Mode(arm, x + 1, "V")) for arm in ARMS for x in range(0, dim, 2)
    )
    return NetworkStage("pbs0_rail_swap", couples, SinglePhotonUnitary(modes, modes, mat))


def _pbs45_stage(dim: int) -> NetworkStage:
    """PBS at 45 degrees on every rail: relabels H/V into the +/- basis."""
    modes_in = polarized_modes(dim, POL_LINEAR)
    modes_out = polarized_modes(dim, POL_DIAGONAL)
    idx_in = {m: i for i, m in enumerate(modes_in)}
    idx_out = {m: i for i, m in enumerate(modes_out)}
    mat = np.zeros((len(modes_out), len(modes_in)))
    for arm in ARMS:
        for x in range(dim):
            h, v = idx_in[Mode(arm, x, "H")], idx_in[Mode(arm, x, "V")]
            plus, minus = idx_out[Mode(arm, x, "+")], idx_out[Mode(arm, x, "-")]
            mat[plus, h] = _INV_SQRT2
            mat[plus, v] = _INV_SQRT2
            mat[minus, h] = _INV_SQRT2
            mat[minus, v] = -_INV_SQRT2
    couples = tuple((Mode(arm, x, "H"), Mode(arm, x, "V")) for arm in ARMS for x in range(dim))
    return NetworkStage("pbs45_basis_change", couples, SinglePhotonUnitary(modes_in, modes_out, mat))


def fig1_spec(dim: int) -> NetworkSpec:
    if dim < 2:
        raise ValueError(f"need at least two paths, got dimension {dim}")
    return NetworkSpec(SETUP_FIG1, dim, (_bs_stage(path_modes(dim)),))


def fig2_spec() -> NetworkSpec:
    dim = 4
    stages = (
        _pbs0_stage(dim),
        _bs_stage(polarized_modes(dim, POL_LINEAR)),
        _pbs45_stage(dim),
    )
    return NetworkSpec(SETUP_FIG2, dim, stages)


def build_fig1_network(dim: int) -> SinglePhotonUnitary:
    """The beam-splitter-only measurement network for d paths (2d modes)."""
    return fig1_spec(dim).unitary()


def build_fig2_network() -> SinglePhotonUnitary:
    """The ancilla-assisted network: PBS@0 rail swap, beam splitters, PBS@45.

    Maps the 16 polarized input modes (H/V basis) onto the 16 detector
    modes (+/- basis).
    """
    return fig2_spec().unitary()


def network_for_setup(setup: str, dim: int = 4) -> SinglePhotonUnitary:
    if setup == SETUP_FIG1:
        return build_fig1_network(dim)
    if setup == SETUP_FIG2:
        if dim != 4:
            raise ValueError("the ancilla-assisted setup is defined for dimension 4")
        return build_fig2_network()
    raise ValueError(f"unknown setup {setup!r}, expected one of {SETUPS}")


def evolve(state: TwoPhotonState, network: SinglePhotonUnitary) -> TwoPhotonState:
    """Propagate a two-photon state through a mode unitary.

    The symmetric amplitude function transforms as
    psi'(o1, o2) = sum over i1, i2 of U[o1, i1] U[o2, i2] psi(i1, i2),
    computed as the matrix sandwich U psi U^T. Norm is preserved and
    amplitudes below 1e-12 are pruned.
    """
    missing = state.modes() - set(network.in_modes)
    if missing:
        labels = ", ".join(sorted(m.label for m in missing))
        raise ValueError(f"state modes not covered by the network input basis: {labels}")
    psi = state.to_matrix(tuple(network.in_modes))
    out = network.matrix @ psi @ network.matrix.T
    return TwoPhotonState.from_matrix(state.dim, tuple(network.out_modes), out)
