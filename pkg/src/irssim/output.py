"""Result emission as plot-ready CSV or JSON."""

from __future__ import annotations

import json
from pathlib import Path
from typing import IO, List, Sequence, Union

from irssim.errors import InvalidInputError
from irssim.sweep import SweepResult

CSV_HEADER = "scenario,x,rx_power_dbm,sinr_db,sinr_db_stddev"

Destination = Union[str, Path, IO[str]]


def _csv_lines(results: Sequence[SweepResult]) -> List[str]:
    lines = [CSV_HEADER]
    for result in results:
        for row in result.rows:
            lines.append(
                f"{result.scenario_label},{row.x:.6f},{row.rx_power_dbm:.6f},"
                f"{row.sinr_db:.6f},{row.sinr_db_stddev:.6f}")
    return lines


def _json_payload(results: Sequence[SweepResult]) -> List[dict]:
    return [
        {
            "label": result.scenario_label,
            "variable": result.variable_name,
            "metadata": result.metadata,
            "rows": [
                [row.x, row.rx_power_dbm, row.sinr_db, row.sinr_db_stddev]
                for row in result.rows
            ],
        }
        for result in results
    ]


def render_results(results: Sequence[SweepResult], fmt: str) -> str:
    if not results:
        raise InvalidInputError("no results to emit")
    if fmt == "csv":
        return "\n".join(_csv_lines(results)) + "\n"
    if fmt == "json":
        return json.dumps(_json_payload(results), indent=2) + "\n"
    raise InvalidInputError(f"format must be 'csv' or 'json', got {fmt!r}")


def emit_results(results: Sequence[SweepResult], fmt: str, destination: Destination) -> None:
    """Write results to a path or text stream; identical inputs yield identical bytes."""
    text = render_results(results, fmt)
    if isinstance(destination, (str, Path)):
        Path(destination).write_text(text, encoding="utf-8", newline="\n")
    else:
        destination.write(text)
