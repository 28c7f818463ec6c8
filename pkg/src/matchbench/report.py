"""Result tables and the best-algorithm map.

Tables group algorithms by family (comparison, automata, bit-parallel) in
registry order, one column per pattern length, blank ("-") cells exactly
where applicability excluded the run.  Values are printed to 3 significant
digits.  In Markdown output every cell carries its within-column rank and
the per-column best is bold: ranks are a testable stand-in for color
shading.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .bench import Measurement
from .registry import (
    DEFAULT_SELECTION_MAP,
    M_CLASSES,
    MEASURED,
    REGISTRY,
    SIGMA_CLASSES,
    MapCell,
    SelectionMap,
    classify,
)

CSV_HEADER = ("text_id", "sigma", "family", "algorithm", "m",
              "mean", "stddev", "mean_occurrences", "metric")

_ALGO_ORDER = {a.id: i for i, a in enumerate(REGISTRY)}


def format_value(x: float) -> str:
    """3 significant digits, plain decimal, trailing zeros stripped."""
    if x == 0:
        return "0"
    if not math.isfinite(x):
        return str(x)
    digits = 2 - math.floor(math.log10(abs(x)))
    y = round(x, digits)
    if digits <= 0:
        return str(int(y))
    s = f"{y:.{digits}f}".rstrip("0").rstrip(".")
    return s if s not in ("", "-") else "0"


def _row_key(ms: Measurement) -> tuple:
    return (_ALGO_ORDER.get(ms.algorithm, len(_ALGO_ORDER)), ms.algorithm, ms.m)


def _check_single_text(measurements) -> None:
    ids = {ms.text_id for ms in measurements}
    if len(ids) > 1:
        raise ValueError(f"measurements span multiple texts: {sorted(ids)}")


def render_table(measurements, fmt: str = "md") -> str:
    """Deterministic document for one text's measurements.

    csv: one row per measurement.  md: the algorithm x m matrix with
    per-column ranks and the best cell bold.
    """
    measurements = sorted(measurements, key=_row_key)
    _check_single_text(measurements)
    if fmt == "csv":
        return _render_csv(measurements)
    if fmt == "md":
        return _render_md(measurements)
    raise ValueError(f"unknown format {fmt!r}")


def _render_csv(measurements) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for ms in measurements:
        writer.writerow([
            ms.text_id,
            ms.sigma,
            ms.family,
            ms.algorithm,
            ms.m,
            format_value(ms.mean_value),
            format_value(ms.stddev),
            format_value(ms.mean_occurrences),
            ms.metric,
        ])
    return buf.getvalue()


def _render_md(measurements) -> str:
    if not measurements:
        return "| family | algorithm |\n|---|---|\n"
    first = measurements[0]
    columns = sorted({ms.m for ms in measurements})
    by_algo: dict[str, dict[int, Measurement]] = {}
    for ms in measurements:
        by_algo.setdefault(ms.algorithm, {})[ms.m] = ms
    rows = sorted(by_algo, key=lambda a: (_ALGO_ORDER.get(a, len(_ALGO_ORDER)), a))

    # per-column rank by mean value; single best flag per column, ties
    # resolved by row (family) order
    ranks: dict[tuple[str, int], int] = {}
    best: dict[int, str] = {}
    for m in columns:
        cells = [(algo, by_algo[algo][m].mean_value) for algo in rows if m in by_algo[algo]]
        for algo, value in cells:
            ranks[(algo, m)] = 1 + sum(1 for _, v in cells if v < value)
        if cells:
            best[m] = min(cells, key=lambda av: av[1])[0]

    lines = [
        f"# {first.text_id} (sigma={first.sigma}, metric={first.metric})",
        "",
        "| family | algorithm | " + " | ".join(str(m) for m in columns) + " |",
        "|---|---|" + "---|" * len(columns),
    ]
    for algo in rows:
        family = next(iter(by_algo[algo].values())).family
        cells = []
        for m in columns:
            ms = by_algo[algo].get(m)
            if ms is None:
                cells.append("-")
                continue
            value = format_value(ms.mean_value)
            if best.get(m) == algo:
                cells.append(f"**{value}** ({ranks[(algo, m)]})")
            else:
                cells.append(f"{value} ({ranks[(algo, m)]})")
        lines.append(f"| {family} | {algo} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def parse_measurements_csv(content: str) -> list[Measurement]:
    """Inverse of render_table(..., "csv"); blank and '#' lines skipped.

    Parse failures report the 1-based line number.
    """
    out = []
    reader = csv.reader(io.StringIO(content))
    header_seen = False
    for lineno, row in enumerate(reader, start=1):
        if not row or row[0].startswith("#"):
            continue
        if not header_seen:
            if tuple(row) != CSV_HEADER:
                raise ValueError(f"line {lineno}: expected header {','.join(CSV_HEADER)}")
            header_seen = True
            continue
        if len(row) != len(CSV_HEADER):
            raise ValueError(f"line {lineno}: expected {len(CSV_HEADER)} fields, got {len(row)}")
        try:
            out.append(Measurement(
                text_id=row[0],
                sigma=int(row[1]),
                family=row[2],
                algorithm=row[3],
                m=int(row[4]),
                runs=0,
                mean_value=float(row[5]),
                stddev=float(row[6]),
                mean_occurrences=float(row[7]),
                metric=row[8],
            ))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not header_seen and content.strip():
        raise ValueError("line 1: missing header row")
    return out


@dataclass(frozen=True)
class BestMap:
    """Total 4x4 grid of winning algorithm ids with provenance tags."""

    cells: dict[tuple[str, str], MapCell]

    def cell(self, sigma_class: str, m_class: str) -> MapCell:
        return self.cells[(sigma_class, m_class)]

    def to_csv(self) -> str:
        lines = ["sigma_class,m_class,algorithm,provenance"]
        for sc in SIGMA_CLASSES:
            for mc in M_CLASSES:
                cell = self.cells[(sc, mc)]
                lines.append(f"{sc},{mc},{cell.algorithm},{cell.provenance}")
        return "\n".join(lines) + "\n"

    def to_markdown(self) -> str:
        lines = [
            "| sigma \\ m | " + " | ".join(M_CLASSES) + " |",
            "|---|" + "---|" * len(M_CLASSES),
        ]
        for sc in SIGMA_CLASSES:
            cells = []
            for mc in M_CLASSES:
                cell = self.cells[(sc, mc)]
                cells.append(f"{cell.algorithm} [{cell.provenance}]")
            lines.append(f"| {sc} | " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"


def render_best_map(measurements, fallback: SelectionMap = DEFAULT_SELECTION_MAP) -> BestMap:
    """Measured winner per cell where data exists, fallback map entry
    (with its paper-stated / derived-fill provenance) elsewhere.

    The measured winner is the algorithm with the lowest mean over the
    cell's sampled (sigma, m) points; ties go to registry order.
    """
    per_cell: dict[tuple[str, str], dict[str, list[float]]] = {}
    for ms in measurements:
        classes = classify(ms.sigma, ms.m)
        cell = per_cell.setdefault((classes.sigma_class, classes.m_class), {})
        cell.setdefault(ms.algorithm, []).append(ms.mean_value)

    cells = {}
    for sc in SIGMA_CLASSES:
        for mc in M_CLASSES:
            data = per_cell.get((sc, mc))
            if data:
                winner = min(
                    data,
                    key=lambda a: (sum(data[a]) / len(data[a]),
                                   _ALGO_ORDER.get(a, len(_ALGO_ORDER)), a),
                )
                cells[(sc, mc)] = MapCell(winner, MEASURED)
            else:
                cells[(sc, mc)] = fallback.cell(sc, mc)
    return BestMap(cells)
