"""Small knot table keyed by invariant fingerprints.

Matches are fingerprint matches (Jones polynomial, determinant, signature),
not proofs of knot type.
"""

from __future__ import annotations

import csv
import logging
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .diagram import DiagramError, PlanarDiagram, is_alternating_diagram, parse_pd
from .moves import simplify
from .polynomials import JonesFingerprint, jones
from .signature import SignatureValue, signature_goeritz

__all__ = ["TableEntry", "Match", "TableError", "TABLE_ENV", "load_table", "default_table_path",
           "identify", "duplicate_fingerprints"]

log = logging.getLogger(__name__)

TABLE_ENV = "SHARPKNOT_TABLE"


class TableError(ValueError):
    def __init__(self, message: str, row: int | None = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


@dataclass(frozen=True)
class TableEntry:
    name: str
    pd: PlanarDiagram
    fingerprint: JonesFingerprint
    sigma: SignatureValue

    @property
    def alternating_diagram(self) -> bool:
        return is_alternating_diagram(self.pd)

    def key(self):
        return (self.fingerprint.polynomial, self.fingerprint.determinant, self.sigma.sigma)

    def mirror_key(self):
        return (self.fingerprint.polynomial.substitute_power(-1), self.fingerprint.determinant, -self.sigma.sigma)


@dataclass(frozen=True)
class Match:
    name: str
    mirror: bool

    def as_dict(self) -> dict:
        return {"name": self.name, "mirror": self.mirror, "kind": "fingerprint match"}


def default_table_path() -> Path:
    env = os.environ.get(TABLE_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("sharpknot") / "data" / "knots.csv"))


def load_table(path) -> list[TableEntry]:
    """Read ``name,pd_code`` rows; invariants are recomputed from each PD code."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return []
    reader = csv.reader(text.splitlines())
    try:
        header = next(reader)
    except csv.Error as e:
        raise TableError(f"malformed CSV: {e}", 1) from None
    if [h.strip() for h in header] != ["name", "pd_code"]:
        raise TableError("header must be 'name,pd_code'", 1)
    entries = []
    row_no = 1
    try:
        for row in reader:
            row_no += 1
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise TableError(f"expected 2 columns, got {len(row)}", row_no)
            name, code = row[0].strip(), row[1]
            if not name:
                raise TableError("empty knot name", row_no)
            try:
                d = parse_pd(code)
                entry = TableEntry(name, d, jones(d), signature_goeritz(d))
            except DiagramError as e:
                raise TableError(f"invalid PD code for {name}: {e}", row_no) from None
            entries.append(entry)
    except csv.Error as e:
        raise TableError(f"malformed CSV: {e}", row_no) from None
    for group in duplicate_fingerprints(entries):
        log.warning("knots share a fingerprint: %s", ", ".join(group))
    return entries


def duplicate_fingerprints(entries: list[TableEntry]) -> list[list[str]]:
    groups: dict = {}
    for e in entries:
        groups.setdefault(e.key(), []).append(e.name)
    return [names for names in groups.values() if len(names) > 1]


def identify(d: PlanarDiagram, table: list[TableEntry]) -> list[Match]:
    """Entries whose (Jones, determinant, signature) agree with ``d`` or its mirror."""
    s = simplify(d)
    fp = jones(s)
    key = (fp.polynomial, fp.determinant, signature_goeritz(s).sigma)
    matches = []
    for e in table:
        if e.key() == key:
            matches.append(Match(e.name, False))
        elif e.mirror_key() == key:
            matches.append(Match(e.name, True))
    return matches
