"""Shared test helpers: an independent first-quantized oracle and generators.

The oracle deliberately avoids the library's matrix-sandwich evolution: it
expands a state into the ordered two-photon basis |i1>|i2> (symmetrizing the
stored upper-triangle amplitudes), applies kron(U, U), and reads the
symmetric amplitudes back. Agreement between the two paths is itself one of
the required properties.
"""

from __future__ import annotations

import numpy as np

from bellsort import SinglePhotonUnitary, TwoPhotonState
from bellsort.modes import Mode


def first_quantized_vector(state: TwoPhotonState, basis: tuple[Mode, ...]) -> np.ndarray:
    """Ordered-basis expansion of the symmetric amplitude function."""
    size = len(basis)
    index = {m: i for i, m in enumerate(basis)}
    vec = np.zeros(size * size, dtype=complex)
    for (m1, m2), amp in state.amps.items():
        i, k = index[m1], index[m2]
        vec[i * size + k] = amp
        vec[k * size + i] = amp
    return vec


def oracle_evolve(state: TwoPhotonState, network: SinglePhotonUnitary) -> dict:
    """Evolve via kron(U, U) on the ordered expansion; returns canonical amplitudes."""
    in_basis = tuple(network.in_modes)
    out_basis = tuple(network.out_modes)
    vec = first_quantized_vector(state, in_basis)
    out = np.kron(network.matrix, network.matrix) @ vec
    size = len(out_basis)
    amps: dict[tuple[Mode, Mode], complex] = {}
    for i in range(size):
        for k in range(i, size):
            amp = out[i * size + k]
            if abs(amp) > 1e-12:
                amps[(out_basis[i], out_basis[k])] = amp
    return amps


def oracle_inner(a: TwoPhotonState, b: TwoPhotonState, basis: tuple[Mode, ...]) -> complex:
    """Physical two-photon inner product <a|b> from the ordered expansions."""
    return complex(np.vdot(first_quantized_vector(a, basis), first_quantized_vector(b, basis)))


def random_two_photon_state(
    dim: int, basis: tuple[Mode, ...], rng: np.random.Generator
) -> TwoPhotonState:
    size = len(basis)
    raw = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    sym = (raw + raw.T) / 2.0
    sym /= np.linalg.norm(sym)
    amps = {
        (basis[i], basis[k]): sym[i, k]
        for i in range(size)
        for k in range(i, size)
        if abs(sym[i, k]) > 1e-12
    }
    return TwoPhotonState.from_amplitudes(dim, amps)


def random_unitary(modes: tuple, rng: np.random.Generator) -> SinglePhotonUnitary:
    size = len(modes)
    raw = rng.normal(size=(size, size)) + 1j * rng.normal(size=(size, size))
    q, r = np.linalg.qr(raw)
    q = q @ np.diag(np.diag(r) / np.abs(np.diag(r)))
    return SinglePhotonUnitary(tuple(modes), tuple(modes), q)
