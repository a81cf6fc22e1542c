"""Line-oriented fan file format.

::

    # comment
    dim 2
    rays
      1 0
      0 1
      -1 -1
    cones
      1 2
      2 3
      3 1
    pl ample 1 1 1
    meta name projective plane

Ray numbers in ``cones`` are 1-based.  Values are integers or fractions
``p/q``; decimal literals are rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple

from .errors import FanFileError
from .lattice_fan import Fan, make_fan

_INT = re.compile(r"[+-]?\d+\Z")
_RAT = re.compile(r"[+-]?\d+(/\d+)?\Z")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*\Z")
_KEYWORDS = ("dim", "rays", "cones", "pl", "meta")


@dataclass
class FanDocument:
    dim: int
    rays: List[Tuple[int, ...]]
    max_cones: List[Tuple[int, ...]]  # 0-based
    pl: Dict[str, Tuple[Fraction, ...]] = field(default_factory=dict)
    meta: Dict[str, str] = field(default_factory=dict)

    def to_fan(self) -> Fan:
        return make_fan(self.dim, self.rays, self.max_cones)


def _tokens(line: str):
    """(token, 1-based column) pairs, comments stripped."""
    line = line.split("#", 1)[0]
    for m in re.finditer(r"\S+", line):
        yield m.group(), m.start() + 1


def _int(tok: str, ln: int, col: int) -> int:
    if not _INT.match(tok):
        _bad_number(tok, ln, col, "integer")
    return int(tok)


def _rat(tok: str, ln: int, col: int) -> Fraction:
    if not _RAT.match(tok):
        _bad_number(tok, ln, col, "rational number")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise FanFileError(f"zero denominator in {tok!r}", ln, col) from None


def _bad_number(tok: str, ln: int, col: int, what: str):
    if re.match(r"[+-]?(\d+\.\d*|\.\d+|\d+[eE][+-]?\d+)", tok):
        raise FanFileError(f"floating-point literal {tok!r} is not allowed; use p/q", ln, col)
    raise FanFileError(f"expected {what}, got {tok!r}", ln, col)


def parse_fan_text(text: str) -> FanDocument:
    dim = None
    rays: List[Tuple[int, ...]] = []
    cones: List[Tuple[int, ...]] = []
    cone_pos: List[Tuple[int, int]] = []
    pl: Dict[str, Tuple[Fraction, ...]] = {}
    pl_pos: Dict[str, Tuple[int, int]] = {}
    meta: Dict[str, str] = {}
    block = None
    seen_blocks = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        toks = list(_tokens(raw))
        if not toks:
            continue
        head, col = toks[0]
        if head in _KEYWORDS:
            block = None
            if head == "dim":
                if dim is not None:
                    raise FanFileError("repeated 'dim'", ln, col)
                if len(toks) != 2:
                    raise FanFileError("'dim' takes exactly one integer", ln, col)
                dim = _int(toks[1][0], ln, toks[1][1])
                if dim < 1:
                    raise FanFileError("dimension must be positive", ln, toks[1][1])
            elif head in ("rays", "cones"):
                if len(toks) != 1:
                    raise FanFileError(f"'{head}' takes no arguments", ln, toks[1][1])
                if head in seen_blocks:
                    raise FanFileError(f"repeated '{head}' block", ln, col)
                seen_blocks.add(head)
                block = head
            elif head == "pl":
                if len(toks) < 2:
                    raise FanFileError("'pl' needs a name and values", ln, col)
                name, ncol = toks[1]
                if not _NAME.match(name):
                    raise FanFileError(f"bad PL function name {name!r}", ln, ncol)
                if name in pl:
                    raise FanFileError(f"repeated PL function {name!r}", ln, ncol)
                pl[name] = tuple(_rat(t, ln, c) for t, c in toks[2:])
                pl_pos[name] = (ln, col)
            else:
                if len(toks) < 2:
                    raise FanFileError("'meta' needs a key", ln, col)
                key = toks[1][0]
                body = raw.split("#", 1)[0]
                value = body[toks[1][1] - 1 + len(key):].strip()
                meta[key] = value
            continue
        if block == "rays":
            if dim is None:
                raise FanFileError("'dim' must come before the rays", ln, col)
            vec = tuple(_int(t, ln, c) for t, c in toks)
            if len(vec) != dim:
                raise FanFileError(f"ray has {len(vec)} coordinates, expected {dim}", ln, col)
            rays.append(vec)
        elif block == "cones":
            if dim is None:
                raise FanFileError("'dim' must come before the cones", ln, col)
            idx = tuple(_int(t, ln, c) for t, c in toks)
            if len(idx) != dim:
                raise FanFileError(f"cone has {len(idx)} rays, expected {dim}", ln, col)
            cones.append(idx)
            cone_pos.append((ln, col))
        else:
            raise FanFileError(f"unexpected {head!r}; expected one of {', '.join(_KEYWORDS)}",
                               ln, col)
    if dim is None:
        raise FanFileError("missing 'dim'")
    if not rays:
        raise FanFileError("missing 'rays' block")
    if not cones:
        raise FanFileError("missing 'cones' block")
    n = len(rays)
    zero_based = []
    for idx, (ln, col) in zip(cones, cone_pos):
        for i in idx:
            if not 1 <= i <= n:
                raise FanFileError(f"ray number {i} out of range 1..{n}", ln, col)
        zero_based.append(tuple(i - 1 for i in idx))
    for name, vals in pl.items():
        if len(vals) != n:
            ln, col = pl_pos[name]
            raise FanFileError(f"PL function {name!r} has {len(vals)} values, expected {n}",
                               ln, col)
    return FanDocument(dim, rays, zero_based, pl, meta)


def load_fan_file(path) -> FanDocument:
    return parse_fan_text(Path(path).read_text())


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize(doc: FanDocument) -> str:
    lines = [f"dim {doc.dim}"]
    for k, v in doc.meta.items():
        lines.append(f"meta {k} {v}".rstrip())
    lines.append("rays")
    lines += ["  " + " ".join(str(x) for x in r) for r in doc.rays]
    lines.append("cones")
    lines += ["  " + " ".join(str(i + 1) for i in c) for c in doc.max_cones]
    for name, vals in doc.pl.items():
        lines.append(f"pl {name} " + " ".join(_fmt(v) for v in vals))
    return "\n".join(lines) + "\n"


def document_from_fan(fan: Fan, pl=None, meta=None) -> FanDocument:
    return FanDocument(fan.dim, list(fan.rays), list(fan.max_cones),
                       {k: tuple(Fraction(x) for x in v) for k, v in (pl or {}).items()},
                       dict(meta or {}))
