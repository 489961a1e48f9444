"""Rendering an Analysis as JSON or human-readable text.

The JSON document is versioned ("schema": 1) and must round-trip floats
losslessly, so every real number is written with 17 significant digits;
the standard json module does not expose float formatting, hence the small
emitter here.  The text form is a compact report whose centerpiece is the
recurrence table with rows beta_i, alpha_i, gamma_i.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .theorem import Analysis, IntersectionArray, OracleRefusal

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# JSON with explicit float precision
# ---------------------------------------------------------------------------

def format_float(x: float) -> str:
    """17 significant digits, always recognizable as a real number.

    17 digits are enough for any double to parse back to the identical bit
    pattern.  A ".0" is appended when the %g form looks like an integer so
    the JSON value stays a float on the way back in.
    """
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    s = format(float(x), ".17g")
    if not any(ch in s for ch in ".eE"):
        s += ".0"
    return s


def dumps(obj, indent: int = 2) -> str:
    """Serialize dicts/lists/scalars to JSON with format_float for reals."""
    pieces = []
    _emit(obj, pieces, indent, 0)
    return "".join(pieces)


def _emit(obj, out: list, indent: int, level: int) -> None:
    pad = " " * (indent * level)
    inner = " " * (indent * (level + 1))
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for j, (key, val) in enumerate(obj.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {key!r}")
            out.append(inner + json.dumps(key) + ": ")
            _emit(val, out, indent, level + 1)
            out.append(",\n" if j < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            out.append("[]")
            return
        out.append("[\n")
        for j, val in enumerate(seq):
            out.append(inner)
            _emit(val, out, indent, level + 1)
            out.append(",\n" if j < len(seq) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool) or obj is None or isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(float(obj)))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")


def _floats(values) -> list:
    return [float(x) for x in values]


def _ints(values) -> list:
    return [int(x) for x in values]


# ---------------------------------------------------------------------------
# Document assembly
# ---------------------------------------------------------------------------

def spectrum_section(raw, spectrum, phis) -> dict:
    """The spectrum subtree, shared by the full report and the spectrum
    subcommand (which has no Analysis to hand)."""
    return {
        "raw": _floats(raw),
        "distinct": _floats(spectrum.thetas),
        "multiplicities": _ints(spectrum.mults),
        "d": spectrum.d,
        "min_gap": float(spectrum.min_gap) if spectrum.d >= 1 else None,
        "phi": _floats(phis),
    }


def _oracle_document(analysis: Analysis) -> dict:
    res = analysis.oracle
    if res is None:
        return {"ran": False}
    if isinstance(res, IntersectionArray):
        return {
            "ran": True,
            "distance_regular": True,
            "intersection_array": {
                "b": _ints(res.b),
                "c": _ints(res.c),
                "a": _ints(res.a),
                "notation": str(res),
            },
        }
    return {
        "ran": True,
        "distance_regular": False,
        "refusal": {
            "reason": res.reason,
            "u": res.u,
            "v": res.v,
            "distance": res.distance,
        },
    }


def build_document(analysis: Analysis) -> dict:
    """Assemble the full report document for one analyzed graph."""
    from lapexcess import __version__

    g = analysis.graph
    degrees = g.degrees()
    sys = analysis.system
    rep = analysis.report
    return {
        "schema": SCHEMA_VERSION,
        "tool": {"name": "lapexcess", "version": __version__},
        "tolerances": {
            "eigenvalue_cluster": float(analysis.tol_eig),
            "equality": float(analysis.tol_eq),
        },
        "graph": {
            "n": g.n,
            "edge_count": g.edge_count,
            "regular": g.is_regular(),
            "degree_min": int(degrees.min()),
            "degree_max": int(degrees.max()),
            "degree_mean": float(degrees.mean()),
            "degree_mean_square": float((degrees.astype(float) ** 2).mean()),
        },
        "spectrum": spectrum_section(
            analysis.raw_eigenvalues, analysis.spectrum, analysis.phis
        ),
        "predistance": {
            "polynomials": [_floats(p) for p in sys.polys],
            "alpha": _floats(sys.alpha),
            "beta": _floats(sys.beta),
            "gamma": _floats(sys.gamma),
            "values_at_zero": [float(p[0]) for p in sys.polys],
        },
        "hoffman": {
            "coefficients": _floats(analysis.hoffman),
            "max_residual": float(analysis.hoffman_residual),
        },
        "excess": {
            "d": rep.d,
            "diameter": rep.diameter,
            "average": float(rep.average_excess),
            "spectral": float(rep.spectral_excess),
            "spectral_closed_form": float(analysis.spectral_excess_closed),
            "per_vertex": _ints(rep.per_vertex_excess),
            "equality_gap": float(rep.equality_gap),
            "relative_gap": float(rep.relative_gap),
            "identity_residuals": _floats(rep.identity_residuals),
            "verdict": rep.verdict.value,
        },
        "oracle": _oracle_document(analysis),
    }


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def recurrence_table(analysis: Analysis) -> str:
    """The recurrence coefficients as an aligned table, one row per
    coefficient family (beta, alpha, gamma), one column per index i.

    beta_i exists for i < d and gamma_i for i >= 1, so those rows have one
    blank cell each.
    """
    sys = analysis.system
    d = sys.d
    rows = [
        ("beta_i", [_fmt(b) for b in sys.beta] + [""]),
        ("alpha_i", [_fmt(a) for a in sys.alpha]),
        ("gamma_i", [""] + [_fmt(c) for c in sys.gamma]),
    ]
    header = ["i"] + [str(i) for i in range(d + 1)]
    widths = [max(len(header[j + 1]), *(len(cells[j]) for _, cells in rows)) for j in range(d + 1)]
    label_w = max(len(name) for name, _ in rows + [("i", [])])
    lines = ["  ".join([header[0].rjust(label_w)] + [header[j + 1].rjust(widths[j]) for j in range(d + 1)])]
    for name, cells in rows:
        lines.append("  ".join([name.rjust(label_w)] + [cells[j].rjust(widths[j]) for j in range(d + 1)]))
    return "\n".join(lines)


def render_text(analysis: Analysis) -> str:
    """Human-readable report: graph summary, spectrum, recurrence table,
    polynomials, excess comparison, oracle, verdict."""
    g = analysis.graph
    s = analysis.spectrum
    rep = analysis.report
    degrees = g.degrees()
    regular = f"regular of degree {int(degrees[0])}" if g.is_regular() else (
        f"not regular (degrees {int(degrees.min())}..{int(degrees.max())}, "
        f"mean {_fmt(degrees.mean())})"
    )
    lines = [
        f"graph: {g.n} vertices, {g.edge_count} edges, {regular}",
        f"distinct Laplacian eigenvalues (d = {s.d}):",
    ]
    for i in range(s.d + 1):
        lines.append(f"  theta_{i} = {_fmt(s.thetas[i])}  (multiplicity {int(s.mults[i])})")
    lines.append("")
    lines.append("recurrence coefficients:")
    lines.append(_indent(recurrence_table(analysis)))
    lines.append("")
    lines.append("predistance polynomials (ascending coefficients):")
    for i, p in enumerate(analysis.system.polys):
        lines.append(f"  r_{i}: " + "  ".join(_fmt(c) for c in p))
    lines.append("")
    lines.append(
        f"hoffman polynomial residual max|H(L) - J| = {_fmt(analysis.hoffman_residual)}"
    )
    lines.append(
        f"spectral excess r_d(0): {_fmt(rep.spectral_excess)} by evaluation, "
        f"{_fmt(analysis.spectral_excess_closed)} by closed form"
    )
    lines.append(
        f"average excess (diameter {rep.diameter}): {_fmt(rep.average_excess)}"
    )
    lines.append(
        f"equality gap: {_fmt(rep.equality_gap)} "
        f"(relative {_fmt(rep.relative_gap)}, tolerance {_fmt(analysis.tol_eq)})"
    )
    lines.append("oracle: " + _oracle_line(analysis.oracle))
    lines.append(f"verdict: {rep.verdict.value}")
    return "\n".join(lines) + "\n"


def _oracle_line(res) -> str:
    if res is None:
        return "not run"
    if isinstance(res, IntersectionArray):
        return f"distance-regular with intersection array {res}"
    assert isinstance(res, OracleRefusal)
    return f"refused ({res.reason})"


def render_spectrum_text(g, raw, spectrum, phis) -> str:
    """Spectrum-only text: raw eigenvalues, clustered values with
    multiplicities, and the phi products."""
    lines = [
        f"graph: {g.n} vertices, {g.edge_count} edges",
        "raw Laplacian eigenvalues:",
        "  " + "  ".join(_fmt(x) for x in raw),
        f"distinct eigenvalues (d = {spectrum.d}):",
    ]
    for i in range(spectrum.d + 1):
        lines.append(
            f"  theta_{i} = {_fmt(spectrum.thetas[i])}  (multiplicity "
            f"{int(spectrum.mults[i])}, phi_{i} = {_fmt(phis[i])})"
        )
    return "\n".join(lines) + "\n"


def _indent(block: str, prefix: str = "  ") -> str:
    return "\n".join(prefix + line for line in block.splitlines())
