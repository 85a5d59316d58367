"""Time-series ingestion, the cumulative transform, and plot-ready output.

CSV input is two numeric columns (time, value) with an optional single header
line, comma delimiter, dot decimal separator.  Emitted plot files use log
base 10 whenever a log axis is requested; model math elsewhere in the package
works in natural logs.  Floats are written with repr(), i.e. the shortest
decimal that round-trips, so emitting and re-reading a series is lossless.

Times are plain floats.  Gaps in the time grid are allowed (only strict
monotonicity is enforced) and cumulate() sums the observations exactly as
given — it never interpolates missing rows.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DataIOError, LogAxisError, ValidationError

KIND_ANNUAL = "annual"
KIND_CUMULATIVE = "cumulative"
KIND_GENERIC = "generic"
_KINDS = (KIND_ANNUAL, KIND_CUMULATIVE, KIND_GENERIC)

AXES_LINEAR = "linear"
AXES_LOG_X = "log-x"
AXES_LOG_Y = "log-y"
AXES_LOG_LOG = "log-log"
_AXES = (AXES_LINEAR, AXES_LOG_X, AXES_LOG_Y, AXES_LOG_LOG)

FORMAT_CSV = "csv"
FORMAT_JSON = "json"

_JSON_SCHEMA_VERSION = 1


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered (time, value) samples with a kind tag.

    kind "annual" marks per-period observations, "cumulative" their running
    sums, and "generic" anything else (generic series may carry negative
    values; the observation kinds may not).
    """

    times: np.ndarray
    values: np.ndarray
    label: str = ""
    kind: str = KIND_ANNUAL

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)
        if t.ndim != 1 or t.shape != v.shape:
            raise ValidationError(
                f"times and values must be 1-D arrays of equal length, "
                f"got shapes {t.shape} and {v.shape}")
        if t.size == 0:
            raise ValidationError("a series needs at least one sample")
        if not np.all(np.isfinite(t)) or not np.all(np.isfinite(v)):
            raise ValidationError("times and values must be finite")
        if not np.all(np.diff(t) > 0):
            raise ValidationError("times must be strictly increasing")
        if self.kind not in _KINDS:
            raise ValidationError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if self.kind in (KIND_ANNUAL, KIND_CUMULATIVE) and np.any(v < 0):
            raise ValidationError(
                f"{self.kind} series must be non-negative; "
                f"first offender at index {int(np.argmax(v < 0))}")

    def __len__(self):
        return self.times.size


def read_csv(source, time_col: int = 0, value_col: int = 1, label: str = "",
             kind: str = KIND_ANNUAL) -> TimeSeries:
    """Parse a two-column CSV file or stream into a TimeSeries.

    A single leading header line is skipped automatically when it does not
    parse as numbers.  Parse failures, duplicate or non-monotone times, and
    empty input all raise DataIOError with a 1-based line number.
    """
    if hasattr(source, "read"):
        text = source.read()
        origin = getattr(source, "name", "<stream>")
    else:
        origin = str(source)
        try:
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DataIOError(f"cannot read {origin}: {exc}") from exc

    times: list[float] = []
    values: list[float] = []
    needed = max(time_col, value_col) + 1
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < needed:
            raise DataIOError(
                f"{origin}, line {lineno}: expected at least {needed} columns, "
                f"got {len(row)}")
        try:
            t = float(row[time_col])
            v = float(row[value_col])
        except ValueError:
            if lineno == 1 and not times:
                continue  # header line
            raise DataIOError(
                f"{origin}, line {lineno}: could not parse "
                f"{row[time_col]!r}, {row[value_col]!r} as numbers") from None
        if not (math.isfinite(t) and math.isfinite(v)):
            raise DataIOError(f"{origin}, line {lineno}: non-finite value")
        if times:
            if t == times[-1]:
                raise DataIOError(f"{origin}, line {lineno}: duplicate time {t!r}")
            if t < times[-1]:
                raise DataIOError(
                    f"{origin}, line {lineno}: non-monotone time {t!r} "
                    f"after {times[-1]!r}")
        times.append(t)
        values.append(v)
    if not times:
        raise DataIOError(f"{origin}: no data rows")
    try:
        return TimeSeries(np.array(times), np.array(values), label=label, kind=kind)
    except ValidationError as exc:
        raise DataIOError(f"{origin}: {exc}") from exc


def cumulate(s: TimeSeries) -> TimeSeries:
    """Running prefix sums of an annual series, on the same time grid."""
    if s.kind != KIND_ANNUAL:
        raise ValidationError(
            f"cumulate expects an annual series, got kind {s.kind!r}")
    return TimeSeries(s.times.copy(), np.cumsum(s.values),
                      label=s.label, kind=KIND_CUMULATIVE)


def _coerce_series(entry, index):
    """Accept TimeSeries or (label, x, y) triples."""
    if isinstance(entry, TimeSeries):
        return entry.label or f"series{index}", entry.times, entry.values
    try:
        label, x, y = entry
    except (TypeError, ValueError):
        raise ValidationError(
            f"entry {index}: expected TimeSeries or (label, x, y) triple, "
            f"got {type(entry).__name__}") from None
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValidationError(f"entry {index}: x and y must match in length")
    return str(label) or f"series{index}", x, y


def _apply_axes(label, x, y, axes):
    log_x = axes in (AXES_LOG_X, AXES_LOG_LOG)
    log_y = axes in (AXES_LOG_Y, AXES_LOG_LOG)
    if log_x:
        bad = np.where(x <= 0)[0]
        if bad.size:
            raise LogAxisError(
                f"log-x axis: series {label!r} has non-positive abscissa "
                f"{float(x[bad[0]])!r} at index {int(bad[0])}")
        x = np.log10(x)
    if log_y:
        bad = np.where(y <= 0)[0]
        if bad.size:
            raise LogAxisError(
                f"log-y axis: series {label!r} has non-positive value "
                f"{float(y[bad[0]])!r} at index {int(bad[0])}")
        y = np.log10(y)
    return x, y


def emit_plot_series(series, axes: str, out, format: str = FORMAT_CSV) -> None:
    """Write plot-ready columns for one or more series.

    Series sharing an identical abscissa are grouped behind one shared
    x-column; csv output pads ragged groups with empty cells.  ``out`` is a
    path or a writable text stream.  JSON output is one object with the axes
    tag and parallel x/y arrays per series.
    """
    if axes not in _AXES:
        raise ValidationError(f"axes must be one of {_AXES}, got {axes!r}")
    if format not in (FORMAT_CSV, FORMAT_JSON):
        raise ValidationError(f"format must be csv or json, got {format!r}")
    entries = [_coerce_series(entry, i) for i, entry in enumerate(series)]
    if not entries:
        raise ValidationError("nothing to emit")
    transformed = [(label,) + _apply_axes(label, x, y, axes)
                   for label, x, y in entries]

    if hasattr(out, "write"):
        _write_payload(transformed, axes, out, format)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            _write_payload(transformed, axes, fh, format)


def _write_payload(transformed, axes, fh, format):
    x_name = "log10_t" if axes in (AXES_LOG_X, AXES_LOG_LOG) else "t"
    if format == FORMAT_JSON:
        payload = {
            "schema": _JSON_SCHEMA_VERSION,
            "axes": axes,
            "series": [{"label": label, "x": x.tolist(), "y": y.tolist()}
                       for label, x, y in transformed],
        }
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
        return

    # Group consecutive series that share an abscissa behind one x column.
    groups = []
    for label, x, y in transformed:
        if groups and groups[-1][0].shape == x.shape and np.array_equal(groups[-1][0], x):
            groups[-1][1].append((label, y))
        else:
            groups.append((x, [(label, y)]))
    header = []
    for gi, (x, members) in enumerate(groups):
        header.append(x_name if len(groups) == 1 else f"{x_name}{gi}")
        header.extend(label for label, _ in members)
    n_rows = max(x.size for x, _ in groups)
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(header)
    for i in range(n_rows):
        row = []
        for x, members in groups:
            if i < x.size:
                row.append(repr(float(x[i])))
                row.extend(repr(float(y[i])) for _, y in members)
            else:
                row.extend([""] * (1 + len(members)))
        writer.writerow(row)
