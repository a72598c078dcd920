"""Free-module elements and matrices over a polynomial ring."""

from __future__ import annotations

from .poly import Polynomial
from .ring import Ring, RingError


class FreeModuleElement:
    """An element of the graded free module ``sum_i R(-twists[i])``.

    Component ``i`` of degree ``d`` sits in total degree ``d + twists[i]``.
    """

    __slots__ = ("ring", "components", "twists")

    def __init__(self, ring: Ring, components, twists=None):
        comps = tuple(c if isinstance(c, Polynomial) else Polynomial.constant(ring, c) for c in components)
        for c in comps:
            if c.ring != ring:
                raise RingError("module components belong to different rings")
        self.ring = ring
        self.components = comps
        self.twists = tuple(twists) if twists is not None else (0,) * len(comps)
        if len(self.twists) != len(comps):
            raise ValueError("twists and components differ in length")

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def degrees(self) -> set:
        out = set()
        for c, t in zip(self.components, self.twists):
            out.update(d + t for d in c.degrees())
        return out

    def degree(self):
        ds = self.degrees()
        return max(ds) if ds else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _check(self, other):
        if not isinstance(other, FreeModuleElement) or other.ring != self.ring or other.rank != self.rank:
            raise RingError("elements of different free modules")
        if other.twists != self.twists:
            raise RingError("elements of differently graded free modules")

    def __add__(self, other):
        self._check(other)
        return FreeModuleElement(self.ring, [a + b for a, b in zip(self.components, other.components)], self.twists)

    def __sub__(self, other):
        self._check(other)
        return FreeModuleElement(self.ring, [a - b for a, b in zip(self.components, other.components)], self.twists)

    def __neg__(self):
        return FreeModuleElement(self.ring, [-a for a in self.components], self.twists)

    def __mul__(self, f):
        return FreeModuleElement(self.ring, [a * f for a in self.components], self.twists)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, FreeModuleElement)
            and self.ring == other.ring
            and self.components == other.components
            and self.twists == other.twists
        )

    def __hash__(self):
        return hash((self.components, self.twists))

    def __getitem__(self, i):
        return self.components[i]

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


class RingMatrix:
    """A matrix over ``ring`` representing a graded map of free modules.

    Column ``j`` is the image of a basis vector of degree ``col_twists[j]``
    in ``sum_i R(-row_twists[i])``.
    """

    def __init__(self, ring: Ring, entries, row_twists=None, col_twists=None):
        rows = [
            [e if isinstance(e, Polynomial) else Polynomial.constant(ring, e) for e in row]
            for row in entries
        ]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else (len(col_twists) if col_twists is not None else 0)
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        self.ring = ring
        self.entries = rows
        self.nrows = nrows
        self.ncols = ncols
        self.row_twists = list(row_twists) if row_twists is not None else [0] * nrows
        if len(self.row_twists) != nrows:
            raise ValueError("row twist count does not match the number of rows")
        if col_twists is None:
            col_twists = self._infer_col_twists()
        self.col_twists = list(col_twists)
        if len(self.col_twists) != ncols:
            raise ValueError("column twist count does not match the number of columns")

    def _infer_col_twists(self):
        out = []
        for j in range(self.ncols):
            t = None
            for i in range(self.nrows):
                e = self.entries[i][j]
                if e:
                    t = e.degree() + self.row_twists[i]
                    break
            out.append(0 if t is None else t)
        return out

    @classmethod
    def from_columns(cls, ring, columns, row_twists=None, col_twists=None):
        columns = list(columns)
        if row_twists is None:
            row_twists = columns[0].twists if columns else []
        n = len(row_twists)
        entries = [[col.components[i] for col in columns] for i in range(n)]
        if not columns:
            entries = [[] for _ in range(n)]
            col_twists = col_twists or []
        return cls(ring, entries, row_twists, col_twists)

    @classmethod
    def zero(cls, ring, row_twists, col_twists):
        z = ring.zero
        return cls(ring, [[z] * len(col_twists) for _ in row_twists], row_twists, col_twists)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j) -> FreeModuleElement:
        return FreeModuleElement(self.ring, [self.entries[i][j] for i in range(self.nrows)], self.row_twists)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return not any(e for row in self.entries for e in row)

    def is_homogeneous(self) -> bool:
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e and (not e.is_homogeneous() or e.degree() != self.col_twists[j] - self.row_twists[i]):
                    return False
        return True

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        R = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = R.zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(R, out, self.row_twists, other.col_twists)

    def transpose(self) -> "RingMatrix":
        """The dual map: twists are negated and swapped."""
        ent = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return RingMatrix(self.ring, ent, [-t for t in self.col_twists], [-t for t in self.row_twists])

    def submatrix(self, rows, cols) -> "RingMatrix":
        ent = [[self.entries[i][j] for j in cols] for i in rows]
        return RingMatrix(self.ring, ent, [self.row_twists[i] for i in rows], [self.col_twists[j] for j in cols])

    def map(self, fn) -> "RingMatrix":
        return RingMatrix(self.ring, [[fn(e) for e in row] for row in self.entries], self.row_twists, self.col_twists)

    def to_ring(self, ring) -> "RingMatrix":
        return RingMatrix(ring, [[e.to_ring(ring) for e in row] for row in self.entries], self.row_twists, self.col_twists)

    def __eq__(self, other):
        return (
            isinstance(other, RingMatrix)
            and self.entries == other.entries
            and self.row_twists == other.row_twists
            and self.col_twists == other.col_twists
        )

    def __repr__(self):
        return f"RingMatrix({self.nrows}x{self.ncols})"
