"""Two-photon states, the generalized Bell family, and the encoding unitaries.

The d-dimensional Bell states of a photon pair shared between arms A and B
are indexed by (j, n, m): j pairs path x in arm A with path ``x XOR j`` in
arm B, n is a phase bit on odd paths and m a sign bit on the upper path
block. For d = 4 this gives the 16 states

    |psi(j, n, m)> = (1/2) * sum_x (-1)**(n*x0 + m*x1) |x>_A |x XOR j>_B

with x0, x1 the low/high bits of x; for d = 2 the four standard Bell states
(m is fixed to 0). The same XOR pairing defines the local encoding unitary
U(j, n, m)|x> = (-1)**(n*x0 + m*x1) |x XOR j>, which maps the reference
state |psi(0, 0, 0)> onto any other member of the family when applied to
one photon.

States are stored as symmetric amplitude functions over unordered mode
pairs. A Fock state with photons in distinct modes m1, m2 has psi(m1, m2) =
psi(m2, m1) = 1/sqrt(2); a doubly occupied mode has psi(m, m) = 1. With
this convention the Born weights are |psi(m, m)|**2 for a bunched pair and
2*|psi(m1, m2)|**2 otherwise, and single-photon unitaries act as
psi -> U psi U^T on the amplitude matrix.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from .modes import (
    ARM_FIRST,
    ARM_SECOND,
    Mode,
    POL_DIAGONAL,
    POL_LINEAR,
    canonical_pair,
    path_modes,
    polarized_modes,
)

# Pruning / tolerance conventions shared across the package.
AMP_PRUNE = 1e-12
NORM_TOL = 1e-9
PHASE_TOL = 1e-9
UNITARY_TOL = 1e-10

_LABEL_RE = re.compile(r"^psi(\d)(\d)(\d)$")


@dataclass(frozen=True)
class BellIndex:
    """Index (j, n, m) of one member of the Bell family.

    j: pairing class, pairs arm-A path x with arm-B path x XOR j.
    n: phase bit, sign (-1)**n on odd paths.
    m: sign bit, sign (-1)**m on the upper path block (fixed to 0 for d=2).
    """

    j: int
    n: int
    m: int = 0

    def __post_init__(self) -> None:
        if self.n not in (0, 1) or self.m not in (0, 1):
            raise ValueError(f"n and m must be bits, got n={self.n}, m={self.m}")
        if self.j < 0:
            raise ValueError(f"j must be nonnegative, got {self.j}")

    def validate_for(self, dim: int) -> None:
        if self.j >= dim:
            raise ValueError(f"pairing index j={self.j} out of range for dimension {dim}")
        if dim == 2 and self.m != 0:
            raise ValueError("dimension 2 has only 4 Bell states; m must be 0")

    @property
    def label(self) -> str:
        return f"psi{self.j}{self.n}{self.m}"

    @classmethod
    def from_label(cls, label: str) -> "BellIndex":
        match = _LABEL_RE.match(label)
        if not match:
            raise ValueError(f"not a Bell state label: {label!r} (expected e.g. 'psi210')")
        return cls(*(int(g) for g in match.groups()))

    @classmethod
    def parse(cls, text: str) -> "BellIndex":
        """Parse the CLI syntax 'j,n,m'."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'j,n,m', got {text!r}")
        try:
            j, n, m = (int(p.strip()) for p in parts)
        except ValueError as exc:
            raise ValueError(f"expected integers in 'j,n,m', got {text!r}") from exc
        return cls(j, n, m)


def all_bell_indices(dim: int) -> tuple[BellIndex, ...]:
    """Enumeration order used everywhere: j major, then n, then m."""
    ms = (0,) if dim == 2 else (0, 1)
    return tuple(BellIndex(j, n, m) for j in range(dim) for n in (0, 1) for m in ms)


def _sign(x: int, n: int, m: int) -> int:
    return 1 - 2 * ((n * (x & 1) + m * ((x >> 1) & 1)) & 1)


def _require_power_of_two(dim: int) -> None:
    if dim < 2 or dim & (dim - 1):
        raise ValueError(
            f"dimension must be a power of two >= 2 for the XOR pairing, got {dim}"
        )


@dataclass(frozen=True)
class TwoPhotonState:
    """Symmetric two-photon amplitude function over canonically ordered pairs.

    ``amps`` maps pairs (m1, m2) with m1 <= m2 to the symmetric wavefunction
    value psi(m1, m2). The squared norm is
    sum over m1 < m2 of 2|psi|**2 plus sum over m of |psi(m, m)|**2,
    and must equal 1 within 1e-9. Amplitudes below 1e-12 are pruned.
    Instances are immutable; construct via :meth:`from_amplitudes` or
    :meth:`from_kets`.
    """

    dim: int
    amps: Mapping[tuple[Mode, Mode], complex] = field(repr=False)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pols = set()
        for (m1, m2) in self.amps:
            if m2 < m1:
                raise ValueError(f"non-canonical pair ({m1.label}, {m2.label})")
            for m in (m1, m2):
                if m.path >= self.dim:
                    raise ValueError(f"mode {m.label} outside dimension {self.dim}")
                pols.add(m.pol)
        if not pols:
            raise ValueError("state has no amplitudes")
        if pols not in ({None}, {"H", "V"}, {"H"}, {"V"}, {"+", "-"}, {"+"}, {"-"}):
            raise ValueError(f"mixed polarization labelling {sorted(map(str, pols))}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_amplitudes(
        cls,
        dim: int,
        amps: Mapping[tuple[Mode, Mode], complex],
        *,
        normalize: bool = False,
        require_normalized: bool = True,
    ) -> "TwoPhotonState":
        """Build a state from symmetric-wavefunction values.

        Keys may be given in either order; duplicates of the same unordered
        pair are rejected. With ``normalize`` the amplitudes are rescaled to
        unit norm, otherwise the norm must already be 1 within 1e-9.
        """
        canon: dict[tuple[Mode, Mode], complex] = {}
        for (m1, m2), a in amps.items():
            key = canonical_pair(m1, m2)
            if key in canon:
                raise ValueError(f"duplicate amplitude for pair ({key[0].label}, {key[1].label})")
            canon[key] = complex(a)
        norm = _norm_of(canon)
        if normalize:
            if norm == 0.0:
                raise ValueError("cannot normalize the zero state")
            canon = {k: a / norm for k, a in canon.items()}
        elif require_normalized and abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state norm {norm} deviates from 1 by more than {NORM_TOL}")
        canon = {k: a for k, a in canon.items() if abs(a) >= AMP_PRUNE}
        return cls(dim, MappingProxyType(canon))

    @classmethod
    def from_kets(
        cls,
        dim: int,
        kets: Iterable[tuple[Mode, Mode, complex]],
        *,
        normalize: bool = False,
    ) -> "TwoPhotonState":
        """Build a state from Fock-ket terms ``c * |1_m1, 1_m2>``.

        Each term puts one photon in ``m1`` and one in ``m2`` with amplitude
        ``c``; repeated pairs accumulate. For distinct modes the stored
        symmetric amplitude is ``c / sqrt(2)``, for ``m1 == m2`` the term
        means ``c * |2_m>`` and is stored as ``c``.
        """
        acc: dict[tuple[Mode, Mode], complex] = {}
        for m1, m2, c in kets:
            key = canonical_pair(m1, m2)
            stored = complex(c) if m1 == m2 else complex(c) / math.sqrt(2.0)
            acc[key] = acc.get(key, 0.0) + stored
        return cls.from_amplitudes(dim, acc, normalize=normalize)

    @classmethod
    def from_matrix(
        cls, dim: int, basis: tuple[Mode, ...], matrix: np.ndarray
    ) -> "TwoPhotonState":
        """Read a state back from its symmetric amplitude matrix."""
        amps: dict[tuple[Mode, Mode], complex] = {}
        n = len(basis)
        for i in range(n):
            for k in range(i, n):
                a = complex(matrix[i, k])
                if abs(a) >= AMP_PRUNE:
                    amps[canonical_pair(basis[i], basis[k])] = a
        return cls.from_amplitudes(dim, amps)

    # -- accessors ---------------------------------------------------------

    def amplitude(self, m1: Mode, m2: Mode) -> complex:
        """Symmetric lookup psi(m1, m2); zero off the stored support."""
        return self.amps.get(canonical_pair(m1, m2), 0.0 + 0.0j)

    def norm(self) -> float:
        return _norm_of(self.amps)

    @property
    def support(self) -> frozenset[tuple[Mode, Mode]]:
        return frozenset(self.amps)

    def modes(self) -> frozenset[Mode]:
        return frozenset(m for pair in self.amps for m in pair)

    @property
    def pol_basis(self) -> tuple[str, str] | None:
        """Which polarization basis the state lives in, None for path-only."""
        pols = {m.pol for m in self.modes()}
        if pols <= {None}:
            return None
        if pols <= set(POL_LINEAR):
            return POL_LINEAR
        return POL_DIAGONAL

    def mode_space(self) -> tuple[Mode, ...]:
        """The canonical full single-photon basis this state is expressed in."""
        basis = self.pol_basis
        if basis is None:
            return path_modes(self.dim)
        return polarized_modes(self.dim, basis)

    def to_matrix(self, basis: tuple[Mode, ...]) -> np.ndarray:
        """Dense symmetric amplitude matrix over ``basis``."""
        index = {m: i for i, m in enumerate(basis)}
        out = np.zeros((len(basis), len(basis)), dtype=complex)
        for (m1, m2), a in self.amps.items():
            i, k = index[m1], index[m2]
            out[i, k] = a
            out[k, i] = a
        return out

    # -- comparison --------------------------------------------------------

    def approx_equal(
        self,
        other: "TwoPhotonState",
        *,
        tol: float = PHASE_TOL,
        up_to_phase: bool = True,
    ) -> bool:
        """Per-amplitude comparison, by default up to a global phase.

        The global phase is quotiented out using the phase of this state's
        largest-magnitude amplitude.
        """
        if self.dim != other.dim:
            return False
        phase_self = phase_other = 1.0 + 0.0j
        if up_to_phase:
            ref = max(self.amps, key=lambda k: abs(self.amps[k]))
            a, b = self.amps[ref], other.amplitude(*ref)
            if abs(b) < AMP_PRUNE:
                return False
            phase_self, phase_other = a / abs(a), b / abs(b)
        for key in set(self.amps) | set(other.amps):
            va = self.amps.get(key, 0.0) / phase_self
            vb = other.amps.get(key, 0.0) / phase_other
            if abs(va - vb) > tol:
                return False
        return True


def _norm_of(amps: Mapping[tuple[Mode, Mode], complex]) -> float:
    total = 0.0
    for (m1, m2), a in amps.items():
        weight = 1.0 if m1 == m2 else 2.0
        total += weight * (a.real * a.real + a.imag * a.imag)
    return math.sqrt(total)


@dataclass(frozen=True)
class SinglePhotonUnitary:
    """A passive linear-optical element as a single-photon mode map.

    ``matrix[o, i]`` is the amplitude from input mode ``in_modes[i]`` to
    output mode ``out_modes[o]``. Input and output bases may differ (the
    polarization analyzers relabel H/V to +/-). Unitarity is enforced at
    construction within 1e-10.
    """

    in_modes: tuple
    out_modes: tuple
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", mat)
        n_in, n_out = len(self.in_modes), len(self.out_modes)
        if mat.shape != (n_out, n_in) or n_in != n_out:
            raise ValueError(f"matrix shape {mat.shape} does not match mode counts ({n_out}, {n_in})")
        defect = np.max(np.abs(mat @ mat.conj().T - np.eye(n_in)))
        if defect > UNITARY_TOL:
            raise ValueError(f"matrix is not unitary (max defect {defect:.3e})")
        mat.flags.writeable = False

    @property
    def dim(self) -> int:
        return len(self.in_modes)

    @classmethod
    def identity(cls, modes: tuple) -> "SinglePhotonUnitary":
        return cls(tuple(modes), tuple(modes), np.eye(len(modes)))

    @property
    def dagger(self) -> "SinglePhotonUnitary":
        return SinglePhotonUnitary(self.out_modes, self.in_modes, self.matrix.conj().T)

    def __matmul__(self, earlier: "SinglePhotonUnitary") -> "SinglePhotonUnitary":
        """Compose: ``later @ earlier`` applies ``earlier`` first."""
        if earlier.out_modes != self.in_modes:
            raise ValueError("mode bases do not line up for composition")
        return SinglePhotonUnitary(earlier.in_modes, self.out_modes, self.matrix @ earlier.matrix)


# -- Bell family construction ------------------------------------------------


def make_bell_state(dim: int, idx: BellIndex) -> TwoPhotonState:
    """The (j, n, m) Bell state of the XOR-paired family in dimension d.

    Component kets are |x>_A |x XOR j>_B with coefficient
    (-1)**(n*x0 + m*x1) / sqrt(d). The dimension must be a power of two
    (the XOR pairing is not closed otherwise); d = 2 and d = 4 are the
    supported configurations, d = 2 forcing m = 0.
    """
    _require_power_of_two(dim)
    idx.validate_for(dim)
    coeff = 1.0 / math.sqrt(dim)
    kets = [
        (Mode(ARM_FIRST, x), Mode(ARM_SECOND, x ^ idx.j), _sign(x, idx.n, idx.m) * coeff)
        for x in range(dim)
    ]
    return TwoPhotonState.from_kets(dim, kets)


def make_hyper_state(idx: BellIndex) -> TwoPhotonState:
    """A d=4 path Bell state tensored with the polarization pair (|HH>+|VV>)/sqrt(2)."""
    idx.validate_for(4)
    coeff = 1.0 / (2.0 * math.sqrt(2.0))
    kets = [
        (Mode(ARM_FIRST, x, p), Mode(ARM_SECOND, x ^ idx.j, p), _sign(x, idx.n, idx.m) * coeff)
        for x in range(4)
        for p in POL_LINEAR
    ]
    return TwoPhotonState.from_kets(4, kets)


def encoding_unitary(dim: int, idx: BellIndex) -> SinglePhotonUnitary:
    """The local path unitary U(j, n, m)|x> = (-1)**(n*x0 + m*x1) |x XOR j>.

    Acts on the d-dimensional path space of one photon (identity on
    polarization when applied to a polarized state); in/out modes are the
    path indices 0..d-1.
    """
    _require_power_of_two(dim)
    idx.validate_for(dim)
    mat = np.zeros((dim, dim))
    for x in range(dim):
        mat[x ^ idx.j, x] = _sign(x, idx.n, idx.m)
    paths = tuple(range(dim))
    return SinglePhotonUnitary(paths, paths, mat)


_ARM_OF_PHOTON = {"first": ARM_FIRST, "second": ARM_SECOND}


def apply_local_unitary(
    state: TwoPhotonState, path_matrix: np.ndarray, which_photon: str
) -> TwoPhotonState:
    """Apply a path unitary to the photon in one arm, identity elsewhere.

    ``path_matrix`` is d x d over path indices; it extends by identity over
    polarization and over the other arm, then acts on the symmetric
    amplitude matrix as psi -> U psi U^T.
    """
    if which_photon not in _ARM_OF_PHOTON:
        raise ValueError(f"which_photon must be 'first' or 'second', got {which_photon!r}")
    arm = _ARM_OF_PHOTON[which_photon]
    path_matrix = np.asarray(path_matrix, dtype=complex)
    if path_matrix.shape != (state.dim, state.dim):
        raise ValueError(
            f"path matrix shape {path_matrix.shape} does not match dimension {state.dim}"
        )
    basis = state.mode_space()
    full = np.zeros((len(basis), len(basis)), dtype=complex)
    for i, mo in enumerate(basis):
        for k, mi in enumerate(basis):
            if mo.arm != mi.arm or mo.pol != mi.pol:
                continue
            if mo.arm == arm:
                full[i, k] = path_matrix[mo.path, mi.path]
            elif mo.path == mi.path:
                full[i, k] = 1.0
    psi = state.to_matrix(basis)
    return TwoPhotonState.from_matrix(state.dim, basis, full @ psi @ full.T)


def encode(state: TwoPhotonState, idx: BellIndex, which_photon: str) -> TwoPhotonState:
    """Encode a message on one photon of a shared pair.

    Applying ``encode(reference, idx, 'second')`` to the reference state
    |psi(0,0,0)> yields make_bell_state(d, idx); on a hyperentangled
    reference the polarization factor rides along unchanged.
    """
    idx.validate_for(state.dim)
    return apply_local_unitary(state, encoding_unitary(state.dim, idx).matrix, which_photon)
