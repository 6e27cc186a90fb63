"""File formats: circuit records as JSON lines, census tables as CSV.

A circuit record stores integers only: length, the step index from the
last square back to the first (``end_choice``), the first heading
(``second_dir``), the raw turn codes, and the square centers.  Piece
codes are always rederived on load, so records cannot drift out of sync
with the classification rules.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from typing import IO, Iterable

from .circuit import Circuit
from .grid import STEP_INDEX
from .sweep import CountTable

CSV_HEADER = ("n", "possible", "looping", "direct", "isometries",
              "constructible")


class RecordError(ValueError):
    """A malformed circuit record, reported with its line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def circuit_to_record(c: Circuit) -> dict:
    x0, y0 = c.centers[0]
    xn, yn = c.centers[-1]
    end_step = (x0 - xn, y0 - yn)
    hs = c.headings
    raw = [(hs[i] - hs[i - 1]) % 8 for i in range(c.n)]
    return {
        "n": c.n,
        "end_choice": STEP_INDEX[end_step],
        "second_dir": hs[0],
        "raw_turns": raw,
        "centers": [list(p) for p in c.centers],
    }


def circuit_from_record(rec: dict, line_no: int = 0) -> Circuit:
    try:
        centers = tuple((int(x), int(y)) for x, y in rec["centers"])
        n = int(rec["n"])
        end_choice = int(rec["end_choice"])
        second_dir = int(rec["second_dir"])
        raw_turns = [int(t) for t in rec["raw_turns"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(line_no, f"bad record structure: {exc}") from None
    try:
        c = Circuit(centers)
    except ValueError as exc:
        raise RecordError(line_no, str(exc)) from None
    check = circuit_to_record(c)
    if (n, end_choice, second_dir, raw_turns) != (
            check["n"], check["end_choice"], check["second_dir"],
            check["raw_turns"]):
        raise RecordError(line_no, "derived fields disagree with centers")
    return c


def write_circuits(circuits: Iterable[Circuit], stream: IO[str]) -> int:
    count = 0
    for c in circuits:
        stream.write(json.dumps(circuit_to_record(c), separators=(",", ":")))
        stream.write("\n")
        count += 1
    return count


def read_circuits(stream: IO[str]) -> list[Circuit]:
    out = []
    for line_no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordError(line_no, f"invalid JSON: {exc.msg}") from None
        out.append(circuit_from_record(rec, line_no))
    return out


def write_counts_csv(rows: Iterable[CountTable], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_tuple())


def read_counts_csv(stream: IO[str]) -> list[CountTable]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"expected header {','.join(CSV_HEADER)}")
    return [CountTable(*map(int, row)) for row in reader if row]


def atomic_write_text(path: str, text: str) -> None:
    """Write via a temp file and rename, so readers never see a partial
    artifact."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_catalogue(circuits: Iterable[Circuit], directory: str,
                    name: str = "circuits.jsonl") -> str:
    """Write a circuit catalogue file into ``directory`` and return its
    path."""
    os.makedirs(directory, exist_ok=True)
    buf = io.StringIO()
    write_circuits(circuits, buf)
    path = os.path.join(directory, name)
    atomic_write_text(path, buf.getvalue())
    return path
