"""Serialization helpers shared by the CLI: versioned JSON reports and CSV.

Reports are deterministic for fixed inputs: keys are sorted, floats use
repr-round-tripping, infinities become the explicit sentinel "inf", and the
timestamp field can be suppressed.
"""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone

SCHEMA = "darboux-report/1"


def _sanitize(obj):
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    if isinstance(obj, dict):
        return {str(k): _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if hasattr(obj, "tolist"):  # numpy scalars and arrays
        return _sanitize(obj.tolist())
    return obj


def make_report(kind, body, timestamp=True):
    """Assemble a schema-versioned report dict."""
    out = {"schema": SCHEMA, "kind": kind}
    if timestamp:
        out["timestamp"] = datetime.now(timezone.utc).isoformat()
    out.update(_sanitize(body))
    return out


def dump_json(report, path=None):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return text


def dump_csv(rows, header, path=None):
    """Write rows (sequences) under a header; returns the text."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(x) for x in row])
    text = buf.getvalue()
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def _csv_cell(x):
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return repr(x)
    return x


def spectrum_csv_rows(levels):
    """Rows for the spectrum CSV schema (n_r, n, E_numeric, E_closed, residuals)."""
    return [
        (lv.n_r, lv.n, lv.e_numeric, lv.e_closed, lv.abs_residual, lv.rel_residual)
        for lv in levels
    ]


SPECTRUM_CSV_HEADER = ("n_r", "n", "E_numeric", "E_closed", "abs_residual", "rel_residual")


def trajectory_csv(record, path=None):
    """Trajectory CSV: t, q1..qN, p1..pN."""
    dim = record.samples[0].dim if record.samples else 0
    header = ["t"] + [f"q{i+1}" for i in range(dim)] + [f"p{i+1}" for i in range(dim)]
    rows = [
        [s.t, *s.q.tolist(), *s.p.tolist()]
        for s in record.samples
    ]
    return dump_csv(rows, header, path)
