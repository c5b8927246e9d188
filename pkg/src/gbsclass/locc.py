"""One-way LOCC distinguishability of GBS sets via the teleportation criterion.

A set {X^{m_j} Z^{n_j}} is one-way LOCC distinguishable iff some unit vector
alpha makes the states X^{m_j} Z^{n_j} alpha pairwise orthogonal, i.e.
``<alpha| X^m Z^n |alpha> = 0`` for every (m, n) in the difference set.

We minimise ``F(alpha) = sum_g |<alpha|U_g|alpha>|^2`` over the unit sphere
from many starting points. Finding F = 0 certifies distinguishability;
failing to find it is numerical evidence only, never a proof.

Convention: ``X^m Z^n |j> = omega^(j n) |j + m>`` with ``omega = exp(2 pi i / d)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import Gpm, difference_set
from .sets import GbsSet

NORM_TOL = 1e-9


class Verdict(str, enum.Enum):
    DISTINGUISHABLE = "DISTINGUISHABLE"
    NO_WITNESS_FOUND = "NO_WITNESS_FOUND"


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    max_iter: int = 2000
    witness_tol: float = 1e-9
    step_tol: float = 1e-14
    grad_tol: float = 1e-10
    seed: int = 0
    structured_starts: bool = True

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be positive")
        for name in ("witness_tol", "step_tol", "grad_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class WitnessCheck:
    passed: bool
    magnitudes: dict[Gpm, float]

    @property
    def max_magnitude(self) -> float:
        return max(self.magnitudes.values(), default=0.0)


@dataclass
class DiscriminationReport:
    verdict: Verdict
    witness: np.ndarray | None
    min_residual: float
    restarts_used: int
    residuals: dict[Gpm, float] = field(default_factory=dict)
    best: np.ndarray | None = None

    @property
    def note(self) -> str:
        if self.verdict is Verdict.DISTINGUISHABLE:
            return "witness verified: all teleported states pairwise orthogonal within tolerance"
        return "no witness found by local search; this is numerical evidence, not a proof"


# ---------------------------------------------------------------- vectors


def omega(d: int) -> complex:
    return complex(np.exp(2j * np.pi / d))


def normalize(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise ValueError("cannot normalize the zero vector")
    return v / nrm


def basis(j: int, d: int) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[j] = 1.0
    return v


def uniform(d: int) -> np.ndarray:
    return np.full(d, 1 / math.sqrt(d), dtype=complex)


def apply_gpm(g: Gpm, v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape[-1] != g.d:
        raise ValueError(f"vector of dimension {v.shape[-1]} but GPM over Z_{g.d}")
    j = np.arange(g.d)
    phased = v * np.exp(2j * np.pi * j * g.n / g.d)
    return np.roll(phased, g.m, axis=-1)


def gpm_matrix(g: Gpm) -> np.ndarray:
    return apply_gpm(g, np.eye(g.d, dtype=complex).T).T


def serialize_vector(v: np.ndarray) -> list[str]:
    """Interleaved real/imaginary parts as round-trip exact decimals."""
    out = []
    for z in np.asarray(v, dtype=complex):
        out.extend((repr(float(z.real)), repr(float(z.imag))))
    return out


def deserialize_vector(values) -> np.ndarray:
    vals = [float(x) for x in values]
    if len(vals) % 2:
        raise ValueError("expected an even count of interleaved real/imaginary values")
    return np.array(vals[0::2]) + 1j * np.array(vals[1::2])


# ---------------------------------------------------------------- objective


class _Constraints:
    """Index/phase tables for evaluating all difference-set overlaps on a batch of vectors."""

    def __init__(self, s: GbsSet):
        if len(s) < 2:
            raise ValueError("need at least two states to discriminate")
        self.d = d = s.d
        self.gpms = sorted(difference_set(s.members))
        j = np.arange(d)
        m = np.array([g.m for g in self.gpms])[:, None]
        n = np.array([g.n for g in self.gpms])[:, None]
        self.shift = (j + m) % d  # (G, d)
        self.phase = np.exp(2j * np.pi * ((j * n) % d) / d)  # (G, d)
        # (U alpha)[k] = phase[k - m] * alpha[k - m]
        self.back = (j - m) % d
        self.phase_back = np.take_along_axis(self.phase, self.back, axis=1)

    def overlaps(self, a: np.ndarray) -> np.ndarray:
        """``c[..., g] = <a|U_g|a>`` for a batch ``a`` of shape (..., d)."""
        shifted = a[..., self.shift]  # (..., G, d)
        return np.sum(np.conj(shifted) * self.phase * a[..., None, :], axis=-1)

    def value(self, a: np.ndarray) -> np.ndarray:
        return np.sum(np.abs(self.overlaps(a)) ** 2, axis=-1)

    def value_and_grad(self, a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        c = self.overlaps(a)
        u_a = self.phase_back * a[..., self.back]  # (..., G, d)
        # (U^dagger a)[j] = conj(phase[j]) * a[j + m]
        ud_a = np.conj(self.phase) * a[..., self.shift]
        grad = 2 * np.sum(np.conj(c)[..., None] * u_a + c[..., None] * ud_a, axis=-2)
        return np.sum(np.abs(c) ** 2, axis=-1), grad


def _as_vector(v, d: int) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape != (d,):
        raise ValueError(f"expected a vector of dimension {d}, got shape {v.shape}")
    return v


def residual(s: GbsSet, v) -> float:
    cons = _Constraints(s)
    return float(cons.value(_as_vector(v, s.d)))


def gradient(s: GbsSet, v) -> np.ndarray:
    """``2 dF/d(conj alpha)``: real part is dF/dRe(alpha), imaginary part dF/dIm(alpha)."""
    cons = _Constraints(s)
    return cons.value_and_grad(_as_vector(v, s.d))[1]


def verify_witness(s: GbsSet, v, tol: float) -> WitnessCheck:
    v = _as_vector(v, s.d)
    if abs(np.linalg.norm(v) - 1) > NORM_TOL:
        raise ValueError(f"witness must be a unit vector (norm {np.linalg.norm(v)!r})")
    cons = _Constraints(s)
    mags = np.abs(cons.overlaps(v))
    magnitudes = {g: float(x) for g, x in zip(cons.gpms, mags)}
    return WitnessCheck(passed=bool(np.all(mags < tol)), magnitudes=magnitudes)


# ---------------------------------------------------------------- search


def structured_starts(d: int) -> np.ndarray:
    """The uniform vector followed by eigenvectors of every non-identity GPM."""
    starts = [uniform(d)]
    for m in range(d):
        for n in range(d):
            if m == 0 and n == 0:
                continue
            _, vecs = np.linalg.eig(gpm_matrix(Gpm(m, n, d)))
            starts.extend(normalize(vecs[:, k]) for k in range(d))
    return np.array(starts)


def random_starts(d: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((count, d)) + 1j * rng.standard_normal((count, d))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def minimize_batch(cons: _Constraints, starts: np.ndarray, cfg: SearchConfig) -> tuple[np.ndarray, np.ndarray]:
    """Projected gradient descent on the sphere with per-start backtracking.

    Every start carries its own step size: doubled after an accepted step,
    halved after a rejected one. A start freezes once its step underflows
    ``step_tol``, its tangent gradient drops below ``grad_tol`` or every
    overlap already sits below the witness tolerance.
    """
    a = starts / np.linalg.norm(starts, axis=1, keepdims=True)
    f, g = cons.value_and_grad(a)
    step = np.full(len(a), 0.25)
    active = np.ones(len(a), dtype=bool)
    target = (cfg.witness_tol * 1e-2) ** 2
    for _ in range(cfg.max_iter):
        # project onto the tangent space of the sphere at a
        radial = np.real(np.sum(np.conj(a) * g, axis=1))
        gt = g - radial[:, None] * a
        gnorm2 = np.sum(np.abs(gt) ** 2, axis=1)
        active &= (gnorm2 > cfg.grad_tol**2) & (step > cfg.step_tol) & (f > target)
        if not active.any():
            break
        idx = np.flatnonzero(active)
        trial = a[idx] - step[idx, None] * gt[idx]
        trial /= np.linalg.norm(trial, axis=1, keepdims=True)
        f_new, g_new = cons.value_and_grad(trial)
        ok = f_new <= f[idx] - 1e-4 * step[idx] * gnorm2[idx]
        acc = idx[ok]
        a[acc], f[acc], g[acc] = trial[ok], f_new[ok], g_new[ok]
        step[acc] *= 2.0
        step[idx[~ok]] *= 0.5
    return a, f


def find_witness(s: GbsSet, cfg: SearchConfig | None = None) -> DiscriminationReport:
    cfg = cfg or SearchConfig()
    if not s.is_standard():
        raise ValueError(f"{s} is not standard")
    if not (2 <= len(s) <= s.d):
        raise ValueError(f"need 2 <= |s| <= d, got |s|={len(s)}")
    cons = _Constraints(s)
    parts = [structured_starts(s.d)] if cfg.structured_starts else []
    parts.append(random_starts(s.d, cfg.restarts, cfg.seed))
    starts = np.concatenate(parts)
    final, f = minimize_batch(cons, starts, cfg)

    mags = np.abs(cons.overlaps(final))
    passing = np.flatnonzero(np.all(mags < cfg.witness_tol, axis=1))
    best_idx = int(np.argmin(f))
    if passing.size:
        k = int(passing[0])
        witness = normalize(final[k])
        check = verify_witness(s, witness, cfg.witness_tol)
        if check.passed:
            return DiscriminationReport(
                Verdict.DISTINGUISHABLE, witness, float(f[best_idx]), len(starts), check.magnitudes, witness
            )
    best = normalize(final[best_idx])
    mags_best = {g: float(x) for g, x in zip(cons.gpms, np.abs(cons.overlaps(best)))}
    return DiscriminationReport(Verdict.NO_WITNESS_FOUND, None, float(f[best_idx]), len(starts), mags_best, best)
