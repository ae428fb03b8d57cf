"""Benchmark reporting: CSV rows, a human-readable table, and charts.

Figures are rendered to PNG files next to the CSV so a benchmark run
leaves a self-contained report directory.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

CSV_COLUMNS = [
    "name",
    "mode",
    "outcome",
    "seconds",
    "expanded",
    "pruned",
    "deduplicated",
    "solution_size",
]


@dataclass
class BenchRow:
    name: str
    mode: str
    outcome: str
    seconds: float
    expanded: int
    pruned: int
    deduplicated: int
    solution_size: int | None  # None when nothing was found
    solution: str = ""

    def as_record(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "outcome": self.outcome,
            "seconds": f"{self.seconds:.6f}",
            "expanded": self.expanded,
            "pruned": self.pruned,
            "deduplicated": self.deduplicated,
            "solution_size": "" if self.solution_size is None else self.solution_size,
        }


def write_csv(rows: list[BenchRow], path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row.as_record())


def read_csv(path: str | Path) -> list[dict]:
    with Path(path).open(newline="") as f:
        return list(csv.DictReader(f))


def format_table(rows: list[BenchRow]) -> str:
    headers = ["name", "mode", "outcome", "seconds", "expanded", "pruned", "dedup", "size"]
    table = [headers]
    for r in rows:
        table.append(
            [
                r.name,
                r.mode,
                r.outcome,
                f"{r.seconds:.2f}",
                str(r.expanded),
                str(r.pruned),
                str(r.deduplicated),
                "-" if r.solution_size is None else str(r.solution_size),
            ]
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = []
    for i, row in enumerate(table):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_figures(rows: list[BenchRow], out_dir: str | Path) -> list[Path]:
    """Bar charts of expanded states and wall-clock time per problem and mode."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if not rows:
        return []

    names = sorted({r.name for r in rows})
    modes = sorted({r.mode for r in rows})
    by_key = {(r.name, r.mode): r for r in rows}

    written: list[Path] = []
    specs = [
        ("expanded_states.png", "States expanded", lambda r: r.expanded),
        ("solve_times.png", "Wall-clock seconds", lambda r: r.seconds),
    ]
    for filename, ylabel, pick in specs:
        fig, ax = plt.subplots(figsize=(max(6.0, 1.8 * len(names)), 4.0))
        width = 0.8 / len(modes)
        for j, mode in enumerate(modes):
            xs, ys = [], []
            for i, name in enumerate(names):
                row = by_key.get((name, mode))
                if row is not None:
                    xs.append(i + (j - (len(modes) - 1) / 2) * width)
                    ys.append(pick(row))
            ax.bar(xs, ys, width=width, label=mode)
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names, rotation=30, ha="right")
        ax.set_ylabel(ylabel)
        if any(pick(r) > 0 for r in rows):
            ax.set_yscale("log")
        ax.legend(title="mode")
        fig.tight_layout()
        target = out_dir / filename
        fig.savefig(target, dpi=150)
        plt.close(fig)
        written.append(target)
    return written
