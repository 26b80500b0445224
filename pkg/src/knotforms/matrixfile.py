"""The on-disk Seifert-matrix format.

A matrix file is plain text: optional comment lines starting with '#', a
header "q=<int> rank=<int>", then exactly `rank` rows of `rank`
whitespace-separated integers.  Serialization and parsing round-trip
bit-exactly.
"""

from __future__ import annotations

from .exact import Matrix
from .seifert import SeifertMatrix


class MatrixFileError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message

    def __reduce__(self):
        # two-argument exceptions need explicit pickling support (the
        # parallel CLI transports parse errors across processes)
        return (MatrixFileError, (self.line, self.message))


def parse_matrix_file(text: str) -> SeifertMatrix:
    header = None
    header_line = 0
    rows: list[list[int]] = []
    q = rank = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_line = lineno
            parts = line.split()
            fields = {}
            for part in parts:
                if "=" not in part:
                    raise MatrixFileError(lineno, f"malformed header field {part!r}")
                key, _, value = part.partition("=")
                fields[key] = value
            if set(fields) != {"q", "rank"}:
                raise MatrixFileError(
                    lineno, f"header must be 'q=<int> rank=<int>', got {line!r}")
            try:
                q = int(fields["q"])
                rank = int(fields["rank"])
            except ValueError:
                raise MatrixFileError(lineno, f"non-integer header values in {line!r}")
            if q < 1:
                raise MatrixFileError(lineno, f"q must be >= 1, got {q}")
            if rank < 0:
                raise MatrixFileError(lineno, f"rank must be >= 0, got {rank}")
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise MatrixFileError(lineno, f"non-integer matrix entry in {line!r}")
        if len(row) != rank:
            raise MatrixFileError(
                lineno, f"expected {rank} entries per row, got {len(row)}")
        if len(rows) >= rank:
            raise MatrixFileError(lineno, f"more than {rank} matrix rows")
        rows.append(row)
    if header is None:
        raise MatrixFileError(1, "missing header 'q=<int> rank=<int>'")
    if len(rows) != rank:
        raise MatrixFileError(
            header_line, f"expected {rank} matrix rows, found {len(rows)}")
    return SeifertMatrix(Matrix(rows, ncols=rank), q=q)


def serialize_matrix_file(s: SeifertMatrix) -> str:
    lines = [f"q={s.q} rank={s.rank}"]
    for row in s.matrix.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
