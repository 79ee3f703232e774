"""Artifact builders: the family comparison table, the channel-budget
table and the exact-versus-approximate probability sweep.

Each builder returns plain rows (lists of dicts) so tests can inspect
values before formatting; write_csv/write_json render them with fixed
float formatting and newline conventions so reruns are byte-identical.
"""

import csv
import io
import json
from pathlib import Path

from .distributions import NonzeroDistribution, moment_constants
from .guarantees import (
    SEARCH_BOUNDS,
    ExripInputs,
    exrip_approx,
    exrip_probability,
    min_channels_search,
    rip_min_m,
)
from .presets import Preset, TABLE2_ROW_ORDER, load_preset
from .sensing import quality_measures
from .signmatrix import FamilySpec, build_sign_matrix

TABLE2_FIELDS = (
    "family",
    "m",
    "M",
    "k",
    "alpha100",
    "beta100",
    "gamma100",
    "p_complex_normal",
    "p_complex_uniform",
    "status",
)
TABLE1_FIELDS = ("bound", "k", "target", "m_required", "status", "note")
SWEEP_FIELDS = ("m", "p_exact", "p_approx")

_CONSTANTS_CACHE: dict = {}


def _constants(kind: str, K: int, samples: int):
    key = (kind, K, samples)
    if key not in _CONSTANTS_CACHE:
        _CONSTANTS_CACHE[key] = moment_constants(
            NonzeroDistribution(kind), K, samples=samples, seed=0
        )
    return _CONSTANTS_CACHE[key]


def table2_report(names=TABLE2_ROW_ORDER) -> list[dict]:
    """One row per sign-pattern family preset, in fixed order.

    A failing row is reported in its status column and does not stop
    the remaining rows.
    """
    rows = []
    for name in names:
        label = name.removeprefix("table2_")
        try:
            preset = load_preset(name)
            spec = preset.family_spec()
            S = build_sign_matrix(spec)
            q = quality_measures(S)
            k = preset.get_int("k")
            delta = preset.get_float("delta")
            samples = preset.get_int("constant_samples", 10**6)
            probs = {}
            for kind in ("complex_normal", "complex_uniform"):
                const = _constants(kind, k, samples)
                probs[kind] = exrip_probability(
                    ExripInputs(q.alpha, q.beta, q.gamma, S.m, S.M, k, delta, const)
                ).probability
            rows.append(
                {
                    "family": label,
                    "m": S.m,
                    "M": S.M,
                    "k": k,
                    "alpha100": 100.0 * q.alpha,
                    "beta100": 100.0 * q.beta,
                    "gamma100": 100.0 * q.gamma,
                    "p_complex_normal": probs["complex_normal"],
                    "p_complex_uniform": probs["complex_uniform"],
                    "status": "ok",
                }
            )
        except Exception as exc:  # keep the table going, flag the row
            rows.append(
                {
                    "family": label,
                    "m": None,
                    "M": None,
                    "k": None,
                    "alpha100": None,
                    "beta100": None,
                    "gamma100": None,
                    "p_complex_normal": None,
                    "p_complex_uniform": None,
                    "status": f"error: {exc}",
                }
            )
    return rows


def fig2_report(preset: Preset) -> list[dict]:
    """Exact bound probability against its 1 - 1/(m delta^2) shortcut
    for one random instance per channel count."""
    M = preset.get_int("M")
    k = preset.get_int("k")
    delta = preset.get_float("delta")
    seed = preset.get_int("seed", 0)
    samples = preset.get_int("constant_samples", 10**6)
    kind = preset.get_str("dist", "complex_normal")
    const = _constants(kind, k, samples)
    start = preset.get_int("m_start")
    stop = preset.get_int("m_stop")
    step = preset.get_int("m_step")
    rows = []
    for m in range(start, stop + 1, step):
        spec = FamilySpec("random", m=m, M=M, seed=(seed, m))
        q = quality_measures(build_sign_matrix(spec))
        exact = exrip_probability(
            ExripInputs(q.alpha, q.beta, q.gamma, m, M, k, delta, const)
        ).probability
        approx = exrip_approx(m, delta).probability
        rows.append({"m": m, "p_exact": exact, "p_approx": approx})
    return rows


def table1_report(
    preset: Preset, attempts: int | None = None, ceiling: int | None = None
) -> list[dict]:
    """Minimum channel count per recovery guarantee at one (M, k).

    RIP and the expected-RIP rows use the doubled sparsity k_exrip
    (recovering a k-sparse support through basis pursuit needs the
    matrix to act on 2k-sparse differences); coherence rows state their
    guarantee directly at k.  attempts/ceiling override the preset.
    """
    M = preset.get_int("M")
    k = preset.get_int("k")
    k_exrip = preset.get_int("k_exrip", 2 * k)
    delta = preset.get_float("delta")
    seed = preset.get_int("seed", 0)
    target_exrip = preset.get_float("target_exrip", 0.85)
    target_other = preset.get_float("target_other", 0.97)
    attempts = attempts if attempts is not None else preset.get_int("attempts", 100)
    ceiling = ceiling if ceiling is not None else preset.get_int("ceiling", 1 << 15)
    samples = preset.get_int("constant_samples", 10**6)
    dist = NonzeroDistribution(preset.get_str("dist", "complex_normal"))
    rows = []
    for bound in SEARCH_BOUNDS:
        doubled = bound in ("rip", "exrip", "exrip_approx")
        K_used = k_exrip if doubled else k
        target = target_exrip if bound.startswith("exrip") else target_other
        res = min_channels_search(
            bound,
            M,
            K_used,
            delta=delta,
            dist=dist if bound == "exrip" else None,
            target_prob=target,
            attempts=attempts,
            seed=seed,
            ceiling=ceiling,
            constants=_constants(dist.kind, K_used, samples) if bound == "exrip" else None,
        )
        note = res.detail
        if bound == "rip":
            note += f"; at k={k} the same bound needs m={rip_min_m(M, k, delta, target)}"
        if res.witness_seed is not None:
            note += f"; witness draw {res.witness_seed}"
        rows.append(
            {
                "bound": bound,
                "k": K_used,
                "target": target,
                "m_required": res.m,
                "status": res.status,
                "note": note,
            }
        )
    return rows


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def write_csv(out, fieldnames, rows) -> None:
    """Rows are dicts; floats render at 6 decimals, None as empty."""

    def _write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(fieldnames)
        for row in rows:
            w.writerow([_format_cell(row[f]) for f in fieldnames])

    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            _write(fh)
    else:
        _write(out)


def write_json(out, obj) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if isinstance(out, (str, Path)):
        Path(out).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def render_csv(fieldnames, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, fieldnames, rows)
    return buf.getvalue()


__all__ = [
    "SWEEP_FIELDS",
    "TABLE1_FIELDS",
    "TABLE2_FIELDS",
    "fig2_report",
    "render_csv",
    "table1_report",
    "table2_report",
    "write_csv",
    "write_json",
]
