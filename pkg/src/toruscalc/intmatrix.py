"""Exact integer matrices: determinant, Smith normal form, SL(3, Z) factoring.

Entries are Python ints throughout; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable exact integer matrix.

    >>> IntMatrix.parse("2,1,0;1,1,0;0,0,1").det()
    1
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        data = []
        for row in rows:
            r = []
            for x in row:
                if isinstance(x, bool) or int(x) != x:
                    raise TypeError(f"IntMatrix entries must be integers, got {x!r}")
                r.append(int(x))
            data.append(tuple(r))
        self.rows = tuple(data)
        self.nrows = len(self.rows)
        if self.nrows:
            widths = {len(r) for r in self.rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
        else:
            self.ncols = ncols or 0

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diag(cls, entries: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> "IntMatrix":
        nrows = len(entries) if nrows is None else nrows
        ncols = len(entries) if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, d in enumerate(entries):
            rows[i][i] = d
        return cls(rows, ncols=ncols)

    @classmethod
    def parse(cls, text: str) -> "IntMatrix":
        """Row-major text: rows split by ``;``, entries by ``,``."""
        text = text.strip()
        if not text:
            return cls([])
        rows = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                rows.append([int(x) for x in chunk.split(",")])
            except ValueError:
                raise ValueError(f"bad matrix text {text!r}") from None
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self) -> str:
        return ";".join(",".join(str(x) for x in r) for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows), ncols=self.nrows) if self.nrows else IntMatrix([], ncols=0)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntMatrix):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __lt__(self, other: "IntMatrix") -> bool:
        return self.rows < other.rows

    def _check_same_shape(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), ncols=self.ncols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), ncols=self.ncols)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(([-a for a in r] for r in self.rows), ncols=self.ncols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return IntMatrix(
            ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows),
            ncols=other.ncols,
        )

    def det(self) -> int:
        return determinant(self)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self) -> str:
        return self.to_text()


def as_intmatrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    if isinstance(m, str):
        return IntMatrix.parse(m)
    return IntMatrix(m)


def determinant(m) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = as_intmatrix(m)
    if not m.is_square():
        raise ValueError(f"determinant needs a square matrix, got shape {m.shape}")
    n = m.nrows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    """``U @ m @ V == diag(d)`` with U, V unimodular and d a divisibility chain."""

    d: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)


def smith_normal_form(m) -> SnfResult:
    m = as_intmatrix(m)
    nr, nc = m.shape
    a = m.tolist()
    U = IntMatrix.identity(nr).tolist()
    V = IntMatrix.identity(nc).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        ra, sa = a[dst], a[src]
        for c in range(nc):
            ra[c] += k * sa[c]
        ru, su = U[dst], U[src]
        for c in range(nr):
            ru[c] += k * su[c]

    def add_col(dst, src, k):  # col dst += k * col src
        for row in a:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(nr, nc)):
        while True:
            # pivot: smallest nonzero |entry| in the trailing block, lowest (row, col)
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    d = tuple(a[i][i] for i in range(min(nr, nc)))
    return SnfResult(d=d, U=IntMatrix(U, ncols=nr), V=IntMatrix(V, ncols=nc))


def cokernel_invariants(m) -> list[int]:
    """Invariant factors of ``Z^rows / m Z^cols``; 1s dropped, 0 marks a Z summand."""
    m = as_intmatrix(m)
    snf = smith_normal_form(m)
    torsion = [x for x in snf.d if x > 1]
    return torsion + [0] * (m.nrows - snf.rank)


# ---------------------------------------------------------------------------
# transvections


@dataclass(frozen=True, order=True)
class Transvection:
    """Elementary matrix ``I + k E_ij`` with 1-based indices ``i != j``."""

    i: int
    j: int
    k: int = 1
    n: int = 3

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("transvection needs i != j")
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise ValueError(f"indices out of range for {self.n}x{self.n}: ({self.i}, {self.j})")

    def matrix(self) -> IntMatrix:
        rows = IntMatrix.identity(self.n).tolist()
        rows[self.i - 1][self.j - 1] = self.k
        return IntMatrix(rows)

    def inverse(self) -> "Transvection":
        return Transvection(self.i, self.j, -self.k, self.n)

    def __str__(self) -> str:
        return f"R{self.i}{self.j}" + ("" if self.k == 1 else f"^{self.k}")


def product(factors: Sequence[Transvection], n: int = 3) -> IntMatrix:
    """Left-to-right product ``T1 @ T2 @ ... @ Tr``."""
    out = IntMatrix.identity(n)
    for t in factors:
        out = out @ t.matrix()
    return out


def factor_transvections(m) -> list[Transvection]:
    """Write ``m`` in SL(n, Z) as a product of unit transvections.

    Row-reduces ``m`` to the identity with operations ``row_i += k row_j``;
    the inverses of those operations, in order, multiply back to ``m``.
    Consecutive operations on the same position are merged before the
    result is expanded into ``|k|`` factors with ``k = +-1``.
    """
    m = as_intmatrix(m)
    if not m.is_square():
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if determinant(m) != 1:
        raise ValueError("matrix is not in SL(n, Z): determinant must be +1")
    n = m.nrows
    a = m.tolist()
    ops: list[tuple[int, int, int]] = []

    def add_row(i, j, k):
        if k == 0:
            return
        ri, rj = a[i], a[j]
        for c in range(n):
            ri[c] += k * rj[c]
        ops.append((i, j, k))

    for t in range(n):
        rows = range(t, n)
        # Euclid on column t among rows t..n-1
        while True:
            nz = [(abs(a[i][t]), i) for i in rows if a[i][t]]
            _, p = min(nz)
            others = [i for _, i in nz if i != p]
            if not others:
                break
            for i in others:
                add_row(i, p, -(a[i][t] // a[p][t]))
        if p != t:
            # entry (t, t) is 0 here; bring the unit up
            add_row(t, p, 1)
            add_row(p, t, -(a[p][t] // a[t][t]))
        if a[t][t] == -1:
            # (-1, 0) -> (-1, 1) -> (1, 1) -> (1, 0) on rows (t, s)
            s = t + 1
            add_row(s, t, -1)
            add_row(t, s, 2)
            add_row(s, t, -1)
        for i in range(t + 1, n):
            add_row(i, t, -(a[i][t] // a[t][t]))
    for t in range(n - 1, -1, -1):
        for i in range(t):
            add_row(i, t, -a[i][t])
    assert a == IntMatrix.identity(n).tolist()

    merged: list[list[int]] = []
    for i, j, k in ops:
        inv = -k
        if merged and merged[-1][0] == i and merged[-1][1] == j:
            merged[-1][2] += inv
            if merged[-1][2] == 0:
                merged.pop()
        else:
            merged.append([i, j, inv])
    factors = []
    for i, j, k in merged:
        unit = 1 if k > 0 else -1
        factors.extend(Transvection(i + 1, j + 1, unit, n) for _ in range(abs(k)))
    return factors
