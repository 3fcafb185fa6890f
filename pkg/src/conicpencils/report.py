"""Output rendering: json-lines / csv / latex streams and summary figures.

Report paths that write to a file also render a matplotlib PNG next to it
(same stem, .png suffix) visualizing the tabulated quantities.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .classifier import OrbitRow, expected_table

# concordance with the historical pencil numbering (roman types I-XVII);
# two labels split historical types, hence the double entries
CAMPBELL_TYPES = {
    1: "3",
    2: "4",
    3: "1",
    4: "12",
    5: "2",
    6: "6",
    7: "5",
    8: "9",
    9: "7, 10",
    10: "13",
    11: "11",
    12: "8, 10",
    13: "10, 15",
    14: "14",
    15: "16, 17",
}

FORMATS = ("json-lines", "csv", "latex")


def _od_str(od) -> str:
    return "[" + ",".join(str(x) for x in od) + "]"


def table_rows(q: int, campbell: bool = False) -> list[dict]:
    rows = []
    for row in expected_table(q):
        rec = {
            "label": row.label,
            "q": q,
            "point_od": list(row.point_od),
            "hyperplane_od": list(row.hyperplane_od),
            "stabilizer_order": row.stabilizer_order,
            "orbit_size": row.orbit_size,
            "stabilizer_structure": row.stabilizer_structure,
        }
        if campbell:
            rec["historical_type"] = CAMPBELL_TYPES[row.label]
        rows.append(rec)
    return rows


def render_json_lines(rows: list[dict]) -> str:
    return "".join(json.dumps(r, separators=(", ", ": ")) + "\n" for r in rows)


def render_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    for r in rows:
        writer.writerow(
            {k: _od_str(v) if isinstance(v, (list, tuple)) else v for k, v in r.items()}
        )
    return buf.getvalue()


def render_latex(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0].keys())
    out = []
    out.append("\\begin{tabular}{" + "r" * len(keys) + "}")
    out.append(" & ".join(k.replace("_", " ") for k in keys) + " \\\\")
    out.append("\\hline")
    for r in rows:
        cells = []
        for k in keys:
            v = r[k]
            if isinstance(v, (list, tuple)):
                cells.append("$" + _od_str(v) + "$")
            else:
                cells.append(str(v))
        out.append(" & ".join(cells) + " \\\\")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json-lines":
        return render_json_lines(rows)
    if fmt == "csv":
        return render_csv(rows)
    if fmt == "latex":
        return render_latex(rows)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


# -- figures ---------------------------------------------------------------

def _axes():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_orbit_figure(q: int, counts: dict[int, int], path: Path) -> Path:
    """Bar chart of orbit sizes (log scale), expected vs observed."""
    plt = _axes()
    rows: list[OrbitRow] = expected_table(q)
    labels = [r.label for r in rows]
    expected = [r.orbit_size for r in rows]
    observed = [counts.get(lb, 0) for lb in labels]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    x = range(len(labels))
    ax.bar([i - 0.2 for i in x], expected, width=0.4, label="expected")
    ax.bar([i + 0.2 for i in x], observed, width=0.4, label="observed")
    ax.set_yscale("log")
    ax.set_xticks(list(x))
    ax.set_xticklabels([str(lb) for lb in labels])
    ax.set_xlabel("orbit label")
    ax.set_ylabel("solids")
    ax.set_title(f"Solid orbit sizes in PG(5, {q})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_census_figure(q: int, points: list[int], hyperplanes: list[int], path: Path) -> Path:
    """Side-by-side bars for the point and hyperplane class censuses."""
    plt = _axes()
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    point_names = ["conic", "nucleus", "secant", "rank 3"]
    hyp_names = ["double line", "real pair", "imag. pair", "nonsingular"]
    for ax, names, vals, title in (
        (axes[0], point_names, points, "points of PG(5, q)"),
        (axes[1], hyp_names, hyperplanes, "hyperplanes of PG(5, q)"),
    ):
        ax.bar(names, vals)
        ax.set_yscale("log")
        ax.set_title(f"{title}, q = {q}")
        ax.tick_params(axis="x", rotation=20)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_check_figure(level: str, checks, path: Path) -> Path:
    """Horizontal bars of per-check runtimes, colored by pass/fail."""
    plt = _axes()
    names = [c.name for c in checks]
    times = [max(c.elapsed, 1e-3) for c in checks]
    colors = ["tab:green" if c.ok else "tab:red" for c in checks]
    fig, ax = plt.subplots(figsize=(8, 0.5 * len(names) + 1.5))
    ax.barh(names, times, color=colors)
    ax.set_xscale("log")
    ax.set_xlabel("seconds")
    ax.set_title(f"verification checks, level {level}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_report(rows: list[dict], fmt: str, out: Path | None) -> str:
    """Render rows; if out is given also write them there and return the text."""
    text = render(rows, fmt)
    if out is not None:
        Path(out).write_text(text)
    return text


def figure_path(out: Path) -> Path:
    return Path(out).with_suffix(".png")
