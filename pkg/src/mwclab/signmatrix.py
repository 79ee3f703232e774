"""Sign-pattern matrices: family selection policies and file format.

The pattern file format used across the repo is plain text: a header
line "m M family seed" followed by m lines of M space-separated
entries from {-1, 1}.  The seed token is an integer, a comma-joined
tuple of integers, or "none"; round-trips are bit-exact.
"""

import io
import os
from dataclasses import dataclass

import numpy as np

from . import sequences
from .tables import PRIMITIVE_POLYS

FAMILIES = ("maximal", "gold", "kasami", "hadamard", "random")

Seed = int | tuple[int, ...] | None


@dataclass(frozen=True)
class FamilySpec:
    """Deterministic recipe for a sign matrix.

    family: one of FAMILIES.
    m: number of rows (channels).
    n: register length for the LFSR families and hadamard (M = 2**n).
    M: explicit length; required for random, optional elsewhere (must
       agree with n when both are given).
    seed: RNG seed, required for random and ignored by the others.
    """

    family: str
    m: int
    n: int | None = None
    M: int | None = None
    seed: Seed = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.family == "random":
            if self.M is None or self.M < 1:
                raise ValueError("random family needs an explicit positive M")
        elif self.family == "hadamard":
            M = self.M if self.M is not None else (1 << self.n if self.n else None)
            if M is None or M < 2 or M & (M - 1):
                raise ValueError("hadamard needs M (or n) with M a power of two")
            if self.M is not None and self.n is not None and self.M != 1 << self.n:
                raise ValueError(f"M={self.M} contradicts n={self.n}")
        else:
            if self.n is None:
                raise ValueError(f"{self.family} family needs the register length n")
            if self.M is not None and self.M != (1 << self.n) - 1:
                raise ValueError(f"M={self.M} contradicts n={self.n} (expected 2**n - 1)")

    @property
    def length(self) -> int:
        if self.family == "random":
            return self.M
        if self.family == "hadamard":
            return self.M if self.M is not None else 1 << self.n
        return (1 << self.n) - 1


@dataclass(frozen=True)
class SignMatrix:
    """m x M matrix with entries in {-1, +1} plus provenance."""

    entries: np.ndarray
    family: str
    seed: Seed = None

    def __post_init__(self):
        e = self.entries
        if e.ndim != 2 or e.shape[0] < 1 or e.shape[1] < 1:
            raise ValueError(f"entries must be a nonempty 2-d array, got shape {e.shape}")
        if not np.all(np.abs(e) == 1):
            raise ValueError("entries must all be -1 or +1")

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def M(self) -> int:
        return self.entries.shape[1]


def _maximal_rows(n: int, m: int) -> list[np.ndarray]:
    polys = PRIMITIVE_POLYS[n]
    M = (1 << n) - 1
    population = len(polys) * M
    if m > population:
        raise ValueError(
            f"maximal family of degree {n} has {population} rows "
            f"({len(polys)} polynomials x {M} shifts), requested {m}"
        )
    base = [sequences.lfsr_msequence(p) for p in polys[: min(m, len(polys))]]
    rows = list(base)
    # past one sequence per polynomial, walk shifts round-robin
    extra = m - len(rows)
    for i in range(extra):
        shift = 1 + i // len(polys)
        rows.append(np.roll(base[i % len(polys)], shift))
    return rows


def _random_entries(m: int, M: int, seed: Seed) -> np.ndarray:
    if seed is None:
        raise ValueError("random family needs a seed")
    if M < 64 and m > 2**M:
        raise ValueError(f"cannot draw {m} distinct rows of length {M} (only {2**M} exist)")
    rng = np.random.default_rng(seed)
    S = (rng.integers(0, 2, size=(m, M)) * 2 - 1).astype(np.int8)
    # rows must be distinct; redraw clashes (astronomically rare at real sizes)
    for _ in range(100):
        seen: dict[bytes, int] = {}
        dup = []
        for i in range(m):
            key = S[i].tobytes()
            if key in seen:
                dup.append(i)
            else:
                seen[key] = i
        if not dup:
            return S
        S[dup] = (rng.integers(0, 2, size=(len(dup), M)) * 2 - 1).astype(np.int8)
    raise ValueError(f"could not draw {m} distinct rows of length {M}")


def build_sign_matrix(spec: FamilySpec) -> SignMatrix:
    """Materialize a FamilySpec into m distinct rows.

    Selection policies, all deterministic:
      maximal      one m-sequence per primitive polynomial of degree n in
                   table order, then cyclic shifts of those sequences
                   round-robin (shift 1 of each, shift 2 of each, ...).
      gold         the family enumeration order: both base sequences,
                   then the shift-products in ascending shift order.
      kasami       base sequence first, then ascending shifts.
      hadamard     rows 1..m, skipping the all-ones row 0 (it would make
                   every channel measurement redundant with the DC bin).
      random       i.i.d. equiprobable signs from the seed.
    """
    fam = spec.family
    if fam == "random":
        entries = _random_entries(spec.m, spec.M, spec.seed)
        return SignMatrix(entries, fam, spec.seed)
    if fam == "maximal":
        rows = _maximal_rows(spec.n, spec.m)
    elif fam == "gold":
        family = sequences.gold_family(spec.n)
        if spec.m > len(family):
            raise ValueError(f"gold degree {spec.n} has {len(family)} rows, requested {spec.m}")
        rows = family[: spec.m]
    elif fam == "kasami":
        family = sequences.kasami_small_family(spec.n)
        if spec.m > len(family):
            raise ValueError(
                f"kasami degree {spec.n} has {len(family)} rows, requested {spec.m}"
            )
        rows = family[: spec.m]
    else:
        family = sequences.hadamard_family(spec.length)
        if spec.m > len(family) - 1:
            raise ValueError(
                f"hadamard of size {spec.length} has {len(family) - 1} usable rows "
                f"(all-ones row 0 is skipped), requested {spec.m}"
            )
        rows = family[1 : spec.m + 1]
    return SignMatrix(np.array(rows, dtype=np.int8), fam, spec.seed)


def _format_seed(seed: Seed) -> str:
    if seed is None:
        return "none"
    if isinstance(seed, tuple):
        return ",".join(str(int(s)) for s in seed)
    return str(int(seed))


def _parse_seed(token: str) -> Seed:
    if token == "none":
        return None
    if "," in token:
        return tuple(int(t) for t in token.split(","))
    return int(token)


def write_pattern_file(path: str | os.PathLike | io.TextIOBase, sm: SignMatrix) -> None:
    """Write the plain-text pattern format (see module docstring)."""
    own = not hasattr(path, "write")
    fh = open(path, "w") if own else path
    try:
        fh.write(f"{sm.m} {sm.M} {sm.family} {_format_seed(sm.seed)}\n")
        for row in sm.entries:
            fh.write(" ".join(str(int(v)) for v in row))
            fh.write("\n")
    finally:
        if own:
            fh.close()


def read_pattern_file(path: str | os.PathLike | io.TextIOBase) -> SignMatrix:
    """Parse a pattern file; inverse of write_pattern_file."""
    own = not hasattr(path, "read")
    fh = open(path) if own else path
    try:
        header = fh.readline().split()
        if len(header) != 4:
            raise ValueError(f"bad pattern header: {header}")
        m, M, family, seed = int(header[0]), int(header[1]), header[2], _parse_seed(header[3])
        entries = np.empty((m, M), dtype=np.int8)
        for i in range(m):
            row = fh.readline().split()
            if len(row) != M:
                raise ValueError(f"row {i} has {len(row)} entries, expected {M}")
            entries[i] = [int(v) for v in row]
        return SignMatrix(entries, family, seed)
    finally:
        if own:
            fh.close()


__all__ = [
    "FAMILIES",
    "FamilySpec",
    "SignMatrix",
    "build_sign_matrix",
    "read_pattern_file",
    "write_pattern_file",
]
