"""Deterministic JSON/CSV rendering and atomic file output."""
from __future__ import annotations

import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction

import numpy as np

from .errors import InputError

SIG_DIGITS = 12


def fmt(x: float) -> str:
    x = float(x)
    if x == 0:
        x = 0.0  # drop the sign of -0.0
    return f"{x:.{SIG_DIGITS}g}"


def normalize(obj):
    """Recursively round floats to 12 significant digits and convert numpy types."""
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return normalize(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [normalize(obj.real), normalize(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return float(fmt(obj))
    return obj


def to_json(obj) -> str:
    return json.dumps(normalize(obj), sort_keys=True, indent=2) + "\n"


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def emit(text: str, out: str | None) -> None:
    """Write ``text`` to ``out`` via temp file + rename, or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    target = os.path.abspath(out)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".mucb-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_pi_multiple(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational multiple of pi: {text!r}") from exc


def parse_grid(spec: str) -> list[float]:
    """Angles in radians from ``start:stop:count`` (units of pi, stop excluded)
    or a comma list of rational multiples of pi such as ``1/6,1/4``."""
    spec = spec.strip()
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputError(f"grid must be start:stop:count, got {spec!r}")
        start, stop = parse_pi_multiple(parts[0]), parse_pi_multiple(parts[1])
        try:
            count = int(parts[2])
        except ValueError as exc:
            raise InputError(f"grid count must be an integer, got {parts[2]!r}") from exc
        if count < 1 or stop <= start:
            raise InputError(f"empty grid {spec!r}")
        fractions = [start + (stop - start) * Fraction(k, count) for k in range(count)]
    else:
        fractions = [parse_pi_multiple(p) for p in spec.split(",") if p.strip()]
        if not fractions:
            raise InputError("empty grid")
    return [float(f) * np.pi for f in fractions]


def parse_floats(spec: str) -> list[float]:
    try:
        values = [float(p) for p in spec.split(",") if p.strip()]
    except ValueError as exc:
        raise InputError(f"expected comma-separated numbers, got {spec!r}") from exc
    if not values:
        raise InputError("empty list")
    return values
