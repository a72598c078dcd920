"""Text wire formats: ideal files, complex files and Betti tables.

Ideal file::

    # comment
    ring: gf32003 [x,y,z] grevlex
    x^2 - y*z
    x*y

Complex file::

    ring: qq [x,y,z] grevlex
    ranks: 1 3 3 1
    twists 0: 0
    twists 1: 1 1 1
    d 1:
    x, y, z
    d 2:
    -y, -z, 0
    ...

Twist lines are optional; missing ones are read off the columns of the
preceding differential.  Rows of ``d i`` are lines of comma-separated
polynomials.
"""

from __future__ import annotations

import json
import re

from .ideals import Ideal
from .matrix import RingMatrix
from .poly import ParseError, format_poly, parse_poly
from .ring import RingError, make_ring


class FormatError(ValueError):
    """Malformed ideal or complex document."""


_HEADER_RE = re.compile(r"ring:\s*(\S+)\s*\[([^\]]*)\]\s*(\S+)?\s*\Z")


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def parse_header(line):
    m = _HEADER_RE.match(line.strip())
    if not m:
        raise FormatError(f"bad ring header {line!r}; expected 'ring: <field> [<vars>] <order>'")
    names = [v for v in re.split(r"[\s,]+", m.group(2)) if v]
    try:
        return make_ring(m.group(1), names, m.group(3) or "grevlex")
    except RingError as exc:
        raise FormatError(str(exc)) from exc


def _poly(text, ring, n):
    try:
        return parse_poly(text, ring)
    except (ParseError, RingError) as exc:
        raise FormatError(f"line {n}: {exc}") from exc


# -- ideals ------------------------------------------------------------------------

def parse_ideal(text: str) -> Ideal:
    it = _lines(text)
    try:
        n, head = next(it)
    except StopIteration:
        raise FormatError("empty ideal document") from None
    R = parse_header(head)
    return Ideal(R, [_poly(line, R, n) for n, line in it])


def format_ideal(I: Ideal, comment=None) -> str:
    out = [f"# {c}" for c in (comment.splitlines() if comment else [])]
    out.append(I.ring.header())
    out.extend(format_poly(g) for g in I.gens)
    return "\n".join(out) + "\n"


def read_ideal(path) -> Ideal:
    with open(path) as fh:
        return parse_ideal(fh.read())


# -- complexes ---------------------------------------------------------------------

def _ints(s, n):
    try:
        return [int(v) for v in s.split()]
    except ValueError:
        raise FormatError(f"line {n}: expected integers, got {s!r}") from None


def parse_complex(text: str):
    from .resolution import FreeComplex

    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty complex document")
    R = parse_header(lines[0][1])
    ranks, twists, rows, cur = None, {}, {}, None
    for n, line in lines[1:]:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if sep and key == "ranks":
            ranks = _ints(rest, n)
            cur = None
        elif sep and re.fullmatch(r"twists\s+\d+", key):
            twists[int(key.split()[1])] = _ints(rest, n)
            cur = None
        elif sep and re.fullmatch(r"d\s*\d+", key) and not rest.strip():
            cur = int(key[1:])
            if cur in rows:
                raise FormatError(f"line {n}: d {cur} given twice")
            rows[cur] = []
        elif cur is not None:
            rows[cur].append([_poly(e, R, n) for e in line.split(",")])
        else:
            raise FormatError(f"line {n}: unexpected {line!r}")
    if ranks is None:
        raise FormatError("missing 'ranks:' line")
    L = len(ranks) - 1
    if sorted(rows) != list(range(1, L + 1)):
        raise FormatError(f"expected differentials d 1..d {L}, got {sorted(rows)}")
    tw0 = twists.get(0, [0] * ranks[0])
    mats = []
    prev = tw0
    for i in range(1, L + 1):
        ent = rows[i]
        if len(ent) != ranks[i - 1] or any(len(r) != ranks[i] for r in ent):
            raise FormatError(f"d {i} must be {ranks[i - 1]} x {ranks[i]}")
        try:
            m = RingMatrix(R, ent, prev, twists.get(i))
        except (ValueError, RingError) as exc:
            raise FormatError(f"d {i}: {exc}") from exc
        if not m.is_homogeneous():
            raise FormatError(f"d {i} is not homogeneous for the given twists")
        mats.append(m)
        prev = m.col_twists
    for i, t in twists.items():
        if i > L or len(t) != ranks[i]:
            raise FormatError(f"twists {i}: wrong length")
    return FreeComplex(R, mats, twists0=tw0)


def format_complex(C) -> str:
    out = [C.ring.header(), "ranks: " + " ".join(str(r) for r in C.ranks)]
    for i, t in enumerate(C.twists):
        out.append(f"twists {i}: " + " ".join(str(v) for v in t))
    for i, m in enumerate(C.d, 1):
        out.append(f"d {i}:")
        out.extend(", ".join(format_poly(e) for e in row) for row in m.entries)
    return "\n".join(out) + "\n"


def read_complex(path):
    with open(path) as fh:
        return parse_complex(fh.read())


# -- Betti tables ------------------------------------------------------------------

def format_betti(B, style="paper") -> str:
    """``paper``: dash layout; ``structured``: JSON list of ``{i, j, beta}``."""
    if style == "paper":
        return B.format_dashes()
    if style == "structured":
        return json.dumps(B.structured(), indent=2)
    raise ValueError(f"unknown Betti style {style!r}")
