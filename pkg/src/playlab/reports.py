"""Report emission: one CSV per report plus a combined JSON document.

Both formats carry the same numbers: CSV cells are written with str(),
which for floats matches the shortest-round-trip repr JSON uses.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .metrics import (
    action_space_report,
    atom_report,
    chain_report,
    summarize,
)

REPORT_NAMES = ("summaries", "atoms", "chains-combo", "chains-counter", "action-space")

_CSV_COLUMNS = {
    "summaries": [
        "p0_rollouts", "p1_rollouts", "games", "p0_wins", "p1_wins", "draws",
        "win_rate_p0", "win_rate_first_player", "draw_rate", "mean_turns", "median_turns",
    ],
    "atoms": ["skill", "label", "times_chosen", "times_available", "usage_rate"],
    "chains-combo": ["kind", "items", "support", "transactions"],
    "chains-counter": ["kind", "items", "support", "transactions"],
    "action-space": [
        "skill", "turn_index", "games", "mean_available", "median_available",
        "unique_labels_chosen",
    ],
}

_FILE_STEMS = {
    "summaries": "summaries",
    "atoms": "atoms",
    "chains-combo": "chains_combo",
    "chains-counter": "chains_counter",
    "action-space": "action_space",
}


class ReportSelectionError(ValueError):
    pass


def compute_reports(traces, selections, min_support: float = 0.05) -> dict[str, list[dict]]:
    """Rows for each selected report, keyed by report name."""
    unknown = [s for s in selections if s not in REPORT_NAMES]
    if unknown:
        raise ReportSelectionError(
            f"unknown report selection(s): {', '.join(unknown)}; "
            f"expected any of {', '.join(REPORT_NAMES)}"
        )
    out: dict[str, list[dict]] = {}
    for name in REPORT_NAMES:  # fixed order regardless of selection order
        if name not in selections:
            continue
        if name == "summaries":
            out[name] = summarize(traces).rows()
        elif name == "atoms":
            out[name] = atom_report(traces).rows()
        elif name == "chains-combo":
            out[name] = chain_report(traces, "combo", min_support).rows()
        elif name == "chains-counter":
            out[name] = chain_report(traces, "counter", min_support).rows()
        elif name == "action-space":
            out[name] = action_space_report(traces).rows()
    return out


def emit_reports(
    traces,
    selections,
    fmt: str = "csv",
    out_dir: str | Path = ".",
    min_support: float = 0.05,
) -> list[Path]:
    """Write the selected reports; returns the created paths.

    csv format writes one file per report plus the combined JSON; json
    format writes the combined document only.
    """
    if fmt not in ("csv", "json"):
        raise ReportSelectionError(f"unknown format {fmt!r} (expected csv or json)")
    rows_by_report = compute_reports(traces, selections, min_support)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if fmt == "csv":
        for name, rows in rows_by_report.items():
            path = out_dir / f"{_FILE_STEMS[name]}.csv"
            columns = _CSV_COLUMNS[name]
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(columns)
                for row in rows:
                    writer.writerow([str(row[c]) for c in columns])
            written.append(path)
    combined = out_dir / "reports.json"
    with open(combined, "w", encoding="utf-8") as fh:
        json.dump({"schema_version": 1, "reports": rows_by_report}, fh, indent=2)
        fh.write("\n")
    written.append(combined)
    return written
