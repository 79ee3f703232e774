"""Scaled sensing matrix Phi = S F / sqrt(mM) and its quality measures.

F is the unpermuted unit-modulus DFT, F[j, k] = exp(-2i pi jk / M); any
column permutation of Phi leaves every quantity computed here (alpha,
beta, gamma, coherence, spectral norm) unchanged, so none is applied.
The 1/sqrt(mM) scaling makes sum_j ||Phi_j||^2 = M, i.e. columns are
unit-norm on average.
"""

from dataclasses import dataclass

import numpy as np

from .signmatrix import SignMatrix

# above this M the full M x M Gram is not materialized
_FULL_GRAM_MAX_M = 4096

# ||Phi_j||^2 below this is a structural zero (exact cancellation in the
# DFT of every row); true nonzero norms are orders of magnitude larger
_ZERO_COLUMN_TOL = 1e-9


@dataclass(frozen=True)
class SensingMatrix:
    entries: np.ndarray  # complex m x M
    source: SignMatrix
    scaling: float


@dataclass(frozen=True)
class QualityReport:
    alpha: float
    beta: float
    gamma: float
    mu: float
    spectral_norm_sq: float
    m: int
    M: int
    zero_columns: int

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "mu": self.mu,
            "spectral_norm_sq": self.spectral_norm_sq,
            "m": self.m,
            "M": self.M,
            "zero_columns": self.zero_columns,
        }


@dataclass(frozen=True)
class BoundsCheck:
    ok: bool
    slacks: dict[str, float]
    violations: tuple[str, ...]


def sensing_matrix(S: SignMatrix) -> SensingMatrix:
    m, M = S.m, S.M
    scaling = 1.0 / np.sqrt(m * M)
    entries = np.fft.fft(S.entries.astype(np.float64), axis=1) * scaling
    return SensingMatrix(entries, S, scaling)


def _column_power(S: np.ndarray) -> np.ndarray:
    """P[j] = sum_i |DFT(S_i)[j]|^2; column norms of S F are P / 1."""
    F = np.fft.fft(S.astype(np.float64), axis=1)
    return (np.abs(F) ** 2).sum(axis=0)


def coherence(S: np.ndarray) -> tuple[float, int]:
    """Max normalized inner product between distinct columns of Phi.

    Zero-norm columns are excluded from the maximization (the quantity
    is undefined there) and counted.  Returns (mu, zero_columns).

    The Gram is F^H (S^T S) F / (mM): the integer product S^T S followed
    by a DFT along each axis.  The integer product is exact in float64
    regardless of BLAS threading, and the FFTs are single-threaded, so
    the result is bit-stable.  Above _FULL_GRAM_MAX_M columns the Gram
    is assembled in blocks from Phi instead, to bound memory.
    """
    m, M = S.shape
    Sf = S.astype(np.float64)
    P = _column_power(Sf)
    nz = P > _ZERO_COLUMN_TOL
    zero_columns = int(M - nz.sum())
    if nz.sum() < 2:
        return 0.0, zero_columns
    norms = np.sqrt(P / (m * M))
    best = 0.0
    if M <= _FULL_GRAM_MAX_M:
        T = Sf.T @ Sf
        G = np.fft.ifft(np.fft.fft(T, axis=1), axis=0) / m
        A = np.abs(G[np.ix_(nz, nz)])
        d = norms[nz]
        A /= d[:, None]
        A /= d[None, :]
        np.fill_diagonal(A, 0.0)
        best = float(A.max())
    else:
        Phi = np.fft.fft(Sf, axis=1) / np.sqrt(m * M)
        cols = np.nonzero(nz)[0]
        PhiH = Phi[:, cols].conj().T
        dn = norms[cols]
        block = max(1, (1 << 25) // len(cols))
        for start in range(0, len(cols), block):
            sel = cols[start : start + block]
            A = np.abs(PhiH @ Phi[:, sel])
            A /= dn[:, None]
            A /= norms[sel][None, :]
            # rows of PhiH follow cols order, so the global diagonal
            # entry of column sel[k] sits at row start + k
            A[start + np.arange(len(sel)), np.arange(len(sel))] = 0.0
            best = max(best, float(A.max()))
    # duplicate columns give exactly 1 up to rounding dust
    return min(best, 1.0), zero_columns


def spectral_norm_sq(S: np.ndarray, rel_tol: float = 1e-10, max_iter: int = 10000) -> float:
    """||Phi||^2 via power iteration on the smaller integer Gram.

    Phi Phi^H = S S^T / m because F F^H = M I, so the squared operator
    norm is the top eigenvalue of S S^T (or equivalently S^T S) over m.
    The matvec runs through einsum to keep the reduction order fixed.
    """
    m, M = S.shape
    Si = S.astype(np.int64)
    W = (Si @ Si.T if m <= M else Si.T @ Si).astype(np.float64)
    n = W.shape[0]
    # deterministic start with no accidental symmetry
    v = 1.0 + ((np.arange(n) * 2654435761) % 1000) / 1000.0
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(max_iter):
        w = np.einsum("ij,j->i", W, v)
        new = float(v @ w)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        if abs(new - lam) <= rel_tol * max(abs(new), 1.0):
            lam = new
            break
        lam = new
    return lam / m


def quality_measures(S: SignMatrix) -> QualityReport:
    """alpha, beta, gamma, coherence and spectral norm of one matrix.

    All three pair sums run over ordered pairs (i, k) including i = k;
    the diagonal is what puts alpha at its 1/m floor for orthogonal
    rows.  Intermediate sums are integers below 2**53, so the float
    results are exact up to the final divisions.

      alpha = (mM)^-2   sum (S_i . S_k)^2
      beta  = (m^2M^3)^-1 sum ||S_i (*) S_k||^2   ((*) cyclic convolution)
      gamma = (mM)^-2   sum (S_i . reverse(S_k))^2

    beta uses Parseval: sum_ik ||S_i (*) S_k||^2 = (1/M) sum_j P_j^2
    with P_j the column power of S F.
    """
    m, M = S.m, S.M
    Si = S.entries.astype(np.int64)
    P = _column_power(S.entries)
    if not np.any(P > _ZERO_COLUMN_TOL):
        raise ValueError("all sensing columns are zero")

    G = Si @ Si.T
    alpha = float((G * G).sum()) / (m * M) ** 2

    beta = float((P * P).sum()) / (m * m * M**4)

    rev = Si[:, (-np.arange(M)) % M]
    Grev = Si @ rev.T
    gamma = float((Grev * Grev).sum()) / (m * M) ** 2

    mu, zero_columns = coherence(S.entries)
    snorm = spectral_norm_sq(S.entries)
    return QualityReport(alpha, beta, gamma, mu, snorm, m, M, zero_columns)


def welch_lower_bound(m: int, M: int) -> float:
    return (2 * m - 1) / (2 * m * M - 1)


def quality_bounds_check(report: QualityReport, strict: bool = False) -> BoundsCheck:
    """Slack of every inequality the measures are expected to satisfy.

      1/m <= alpha <= 1
      (2m-1)/(2mM-1) <= beta <= 1
      (2m-1)/(2mM-1) <= gamma <= 1

    A negative slack names the violated inequality; with strict=True it
    raises instead.  Violations signal an implementation bug for alpha
    and beta, whose bounds are theorems.  The gamma lower bound is not
    one: only the zero-lag term of the reversed correlation enters
    gamma, and matrices with reversal-orthogonal rows sit below the
    bound (S = [[1, 1, 1, -1]] has gamma = 0).  The slack is reported
    faithfully either way.
    """
    m, M = report.m, report.M
    welch = welch_lower_bound(m, M)
    slacks = {
        "alpha_lower": report.alpha - 1.0 / m,
        "alpha_upper": 1.0 - report.alpha,
        "beta_lower": report.beta - welch,
        "beta_upper": 1.0 - report.beta,
        "gamma_lower": report.gamma - welch,
        "gamma_upper": 1.0 - report.gamma,
    }
    violations = tuple(k for k, v in slacks.items() if v < -1e-12)
    check = BoundsCheck(not violations, slacks, violations)
    if strict and violations:
        detail = ", ".join(f"{k} (slack {slacks[k]:.3e})" for k in violations)
        raise ValueError(f"quality bounds violated: {detail}")
    return check


__all__ = [
    "BoundsCheck",
    "QualityReport",
    "SensingMatrix",
    "coherence",
    "quality_bounds_check",
    "quality_measures",
    "sensing_matrix",
    "spectral_norm_sq",
    "welch_lower_bound",
]
