"""Reading and writing sampled fields as JSON-lines (and CSV for real data).

The JSON-lines layout, one object per line:

    {"meta": {"m": 1, "n": 2, "adjacency": "path"}}     <- optional header
    {"point": [0.0], "tuple": [0.25, 1.5]}
    {"point": [0.1], "tuple": [[0.25, 0.0], [1.5, 0.1]]}  <- complex mode

- "point" is the sample location in R^m, "tuple" the unordered value.
- Real mode stores n numbers per tuple; complex mode stores n [re, im]
  pairs.  The mode is uniform across a file and inferred from the data.
- "adjacency" is "path" (consecutive samples are neighbors, the default)
  or an explicit edge list [[a, b], ...], 0-based.

Floats are written with Python's shortest round-trip repr, so a file read
back and rewritten is byte-identical.  CSV input covers real tuples only:
a required header of m "point_*" columns followed by n "tuple_*" columns,
one sample per row, path adjacency.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InputError
from .metric import UnorderedTuple
from .monodromy import ComplexLoop
from .selection import LiftedField, SampledField, path_adjacency

AdjacencySpec = str | tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FieldDocument:
    """Parsed contents of a field file, before semantic interpretation."""

    points: np.ndarray
    tuples: np.ndarray  # (N, n); complex dtype in complex mode
    adjacency_spec: AdjacencySpec
    complex_mode: bool

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self.adjacency_spec == "path":
            return path_adjacency(self.points.shape[0])
        return tuple(self.adjacency_spec)  # type: ignore[arg-type]

    def to_sampled_field(self) -> SampledField:
        if self.complex_mode:
            raise InputError("complex-mode field cannot be lifted by sorting")
        return SampledField(
            points=self.points,
            values=tuple(UnorderedTuple(row) for row in self.tuples),
            adjacency=self.edges(),
        )

    def to_loop(self) -> ComplexLoop:
        return ComplexLoop(samples=np.asarray(self.tuples, dtype=complex))


def _parse_tuple_entry(entry, line_no: int):
    if isinstance(entry, (int, float)) and not isinstance(entry, bool):
        return float(entry), False
    if (
        isinstance(entry, list)
        and len(entry) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
    ):
        return complex(float(entry[0]), float(entry[1])), True
    raise InputError(
        f"line {line_no}: tuple entries must be numbers or [re, im] pairs, got {entry!r}"
    )


def _parse_adjacency(spec, line_no: int) -> AdjacencySpec:
    if spec == "path":
        return "path"
    if isinstance(spec, list):
        edges = []
        for edge in spec:
            if not (isinstance(edge, list) and len(edge) == 2):
                raise InputError(f"line {line_no}: adjacency edges must be [a, b] pairs")
            edges.append((int(edge[0]), int(edge[1])))
        return tuple(edges)
    raise InputError(f'line {line_no}: adjacency must be "path" or an edge list')


def read_field_file(path) -> FieldDocument:
    """Parse a JSON-lines field file; errors carry 1-based line numbers."""
    path = Path(path)
    meta: dict = {}
    points: list[list[float]] = []
    rows: list[list] = []
    complex_mode: bool | None = None
    with path.open("r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise InputError(f"line {line_no}: invalid JSON ({exc.msg})") from None
            if not isinstance(obj, dict):
                raise InputError(f"line {line_no}: expected a JSON object")
            if "meta" in obj:
                if points or rows:
                    raise InputError(f"line {line_no}: meta line must come first")
                if not isinstance(obj["meta"], dict):
                    raise InputError(f"line {line_no}: meta must be an object")
                meta = obj["meta"]
                continue
            if "point" not in obj or "tuple" not in obj:
                raise InputError(f'line {line_no}: need both "point" and "tuple"')
            point = obj["point"]
            if not (
                isinstance(point, list)
                and point
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in point)
            ):
                raise InputError(f"line {line_no}: point must be a list of numbers")
            value = obj["tuple"]
            if not (isinstance(value, list) and value):
                raise InputError(f"line {line_no}: tuple must be a nonempty list")
            parsed = []
            for entry in value:
                num, is_complex = _parse_tuple_entry(entry, line_no)
                if complex_mode is None:
                    complex_mode = is_complex
                elif complex_mode != is_complex:
                    raise InputError(
                        f"line {line_no}: mixed real and complex tuple entries in one file"
                    )
                parsed.append(num)
            if points and len(point) != len(points[0]):
                raise InputError(
                    f"line {line_no}: point dimension {len(point)} != {len(points[0])}"
                )
            if rows and len(parsed) != len(rows[0]):
                raise InputError(
                    f"line {line_no}: tuple size {len(parsed)} != {len(rows[0])}"
                )
            points.append([float(v) for v in point])
            rows.append(parsed)
    if not rows:
        raise InputError(f"{path}: no samples found")

    complex_mode = bool(complex_mode)
    m, n = len(points[0]), len(rows[0])
    if "m" in meta and int(meta["m"]) != m:
        raise InputError(f"meta declares m = {meta['m']} but data has m = {m}")
    if "n" in meta and int(meta["n"]) != n:
        raise InputError(f"meta declares n = {meta['n']} but data has n = {n}")
    adjacency = _parse_adjacency(meta.get("adjacency", "path"), line_no=1)

    dtype = complex if complex_mode else float
    return FieldDocument(
        points=np.asarray(points, dtype=float),
        tuples=np.asarray(rows, dtype=dtype),
        adjacency_spec=adjacency,
        complex_mode=complex_mode,
    )


def read_csv_field(path) -> FieldDocument:
    """Parse the real-only CSV layout: point_* columns then tuple_* columns."""
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError(f"{path}: empty CSV file") from None
        names = [h.strip() for h in header]
        m = sum(1 for h in names if h.startswith("point"))
        n = sum(1 for h in names if h.startswith("tuple"))
        if m == 0 or n == 0 or m + n != len(names):
            raise InputError(
                'CSV header must list "point_*" columns then "tuple_*" columns'
            )
        if any(h.startswith("tuple") for h in names[:m]) or any(
            h.startswith("point") for h in names[m:]
        ):
            raise InputError("CSV columns must be ordered: point_* first, then tuple_*")
        points, rows = [], []
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != m + n:
                raise InputError(f"line {line_no}: expected {m + n} cells, got {len(row)}")
            try:
                numbers = [float(cell) for cell in row]
            except ValueError as exc:
                raise InputError(f"line {line_no}: {exc}") from None
            points.append(numbers[:m])
            rows.append(numbers[m:])
    if not rows:
        raise InputError(f"{path}: no samples found")
    return FieldDocument(
        points=np.asarray(points, dtype=float),
        tuples=np.asarray(rows, dtype=float),
        adjacency_spec="path",
        complex_mode=False,
    )


def _adjacency_json(spec: AdjacencySpec):
    if spec == "path":
        return "path"
    return [[a, b] for a, b in spec]  # type: ignore[union-attr]


def write_lifted_file(path, lifted: LiftedField, adjacency_spec: AdjacencySpec = "path"):
    """Write a lifted field as JSON-lines with a meta header line."""
    path = Path(path)
    n_points, m = lifted.points.shape
    n = lifted.values.shape[1]
    with path.open("w", encoding="utf-8") as handle:
        meta = {"meta": {"m": m, "n": n, "adjacency": _adjacency_json(adjacency_spec)}}
        handle.write(json.dumps(meta) + "\n")
        for i in range(n_points):
            record = {
                "point": [float(v) for v in lifted.points[i]],
                "tuple": [float(v) for v in lifted.values[i]],
            }
            handle.write(json.dumps(record) + "\n")


def write_loop_file(path, loop: ComplexLoop):
    """Write a loop as a complex-mode field file; the point is the step fraction."""
    path = Path(path)
    m = loop.step_count
    with path.open("w", encoding="utf-8") as handle:
        meta = {"meta": {"m": 1, "n": loop.tuple_n, "adjacency": "path"}}
        handle.write(json.dumps(meta) + "\n")
        for j in range(m):
            record = {
                "point": [j / m],
                "tuple": [[float(z.real), float(z.imag)] for z in loop.samples[j]],
            }
            handle.write(json.dumps(record) + "\n")


__all__ = [
    "FieldDocument",
    "read_csv_field",
    "read_field_file",
    "write_lifted_file",
    "write_loop_file",
]
