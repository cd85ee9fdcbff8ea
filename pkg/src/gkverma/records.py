"""Output records and their CSV / JSON wire formats.

Rationals travel as canonical ``"a/b"`` strings (``"a"`` when integral);
floats are rejected everywhere.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional, TextIO

from .errors import ParseError

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")

SOURCES = ("algorithm", "closed_form", "both")
NO_POINTS = "-"


def parse_rational(token: str) -> Fraction:
    text = token.strip()
    if not _RATIONAL.fullmatch(text):
        raise ParseError(f"malformed rational {token!r} (expected a or a/b)")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction | int) -> str:
    return str(Fraction(x))


def parse_weight(text: str) -> tuple[Fraction, ...]:
    if not text.strip():
        raise ParseError("empty weight")
    return tuple(parse_rational(tok) for tok in text.split(","))


@dataclass(frozen=True)
class FirstPoint:
    lattice: str
    base: Fraction
    step: Optional[Fraction] = None

    def to_json(self) -> dict:
        out = {"lattice": self.lattice, "base": format_rational(self.base)}
        if self.step is not None:
            out["step"] = format_rational(self.step)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FirstPoint":
        step = obj.get("step")
        return cls(obj["lattice"], parse_rational(obj["base"]), None if step is None else parse_rational(step))

    def to_text(self) -> str:
        parts = [self.lattice, format_rational(self.base)]
        if self.step is not None:
            parts.append(format_rational(self.step))
        return ":".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "FirstPoint":
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ParseError(f"malformed first point {text!r}")
        step = parse_rational(parts[2]) if len(parts) == 3 else None
        return cls(parts[0], parse_rational(parts[1]), step)


@dataclass(frozen=True)
class OutputRecord:
    type: str
    n: int
    p: Optional[int] = None
    z: Optional[Fraction] = None
    gkdim: Optional[int] = None
    dim_u: Optional[int] = None
    reducible: Optional[bool] = None
    first_points: Optional[tuple[FirstPoint, ...]] = None
    wallach: Optional[str] = None
    source: str = "algorithm"

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}, got {self.source!r}")

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "n": self.n,
            "p": self.p,
            "z": None if self.z is None else format_rational(self.z),
            "gkdim": self.gkdim,
            "dim_u": self.dim_u,
            "reducible": self.reducible,
            "first_points": None if self.first_points is None else [fp.to_json() for fp in self.first_points],
            "wallach": self.wallach,
            "source": self.source,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OutputRecord":
        fps = obj.get("first_points")
        z = obj.get("z")
        return cls(
            type=obj["type"],
            n=obj["n"],
            p=obj.get("p"),
            z=None if z is None else parse_rational(z),
            gkdim=obj.get("gkdim"),
            dim_u=obj.get("dim_u"),
            reducible=obj.get("reducible"),
            first_points=None if fps is None else tuple(FirstPoint.from_json(f) for f in fps),
            wallach=obj.get("wallach"),
            source=obj.get("source", "algorithm"),
        )

    def to_csv_row(self) -> dict[str, str]:
        def cell(v) -> str:
            if v is None:
                return ""
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, Fraction):
                return format_rational(v)
            return str(v)

        row = {f.name: cell(getattr(self, f.name)) for f in fields(self)}
        if self.first_points is not None:
            row["first_points"] = ";".join(fp.to_text() for fp in self.first_points) or NO_POINTS
        return row

    @classmethod
    def from_csv_row(cls, row: dict[str, str]) -> "OutputRecord":
        def opt(key, conv):
            v = row.get(key, "")
            return None if v == "" else conv(v)

        def boolean(v: str) -> bool:
            if v not in ("true", "false"):
                raise ParseError(f"malformed boolean {v!r}")
            return v == "true"

        fps = row.get("first_points")
        return cls(
            type=row["type"],
            n=int(row["n"]),
            p=opt("p", int),
            z=opt("z", parse_rational),
            gkdim=opt("gkdim", int),
            dim_u=opt("dim_u", int),
            reducible=opt("reducible", boolean),
            first_points=_points_from_text(fps),
            wallach=opt("wallach", str),
            source=row.get("source") or "algorithm",
        )


def _points_from_text(text: Optional[str]) -> Optional[tuple[FirstPoint, ...]]:
    if not text:
        return None
    if text == NO_POINTS:
        return ()
    return tuple(FirstPoint.from_text(t) for t in text.split(";"))


FIELDNAMES = [f.name for f in fields(OutputRecord)]


def dump_json(records: Iterable[OutputRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2) + "\n"


def load_json(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_json(obj) for obj in json.loads(text)]


def dump_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDNAMES, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.to_csv_row())
    return buf.getvalue()


def load_csv(text: str) -> list[OutputRecord]:
    return [OutputRecord.from_csv_row(row) for row in csv.DictReader(io.StringIO(text))]


def write_records(records: Iterable[OutputRecord], fmt: str, stream: TextIO) -> None:
    stream.write(dump_csv(records) if fmt == "csv" else dump_json(records))
