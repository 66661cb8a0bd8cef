"""Exact matrices over the integers or over a shared polynomial ring.

A MatrixExpr is dense row-major and never mixes entry kinds: every entry is
a Python int, or every entry is a Polynomial over one universe (integer
literals 0 and 1 are promoted when they appear next to polynomials, nothing
else is).  All public row/column indices are 1-based to match the index-set
conventions used throughout; internals are 0-based.

Three determinant routines cross-check one another:

  * det_laplace   memoized column expansion, works for both entry kinds,
  * det_bareiss   fraction-free elimination, integer matrices only,
  * brute_force_det  signed permutation sum, capped at size 8, oracle role.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence, Union

from .polyring import Polynomial, VariableUniverse, accumulate_product

RingEntry = Union[int, Polynomial]

BRUTE_FORCE_CAP = 8


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing 1-based indices drawn from a ground set [ground]."""

    elements: tuple[int, ...]
    ground: int

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if self.ground < 0:
            raise ValueError("ground set size must be nonnegative")
        if any(e < 1 or e > self.ground for e in elems):
            raise ValueError("index outside ground set")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError("indices must be strictly increasing")

    def plus(self) -> "IndexSet":
        """Adjoin the new top element: K over [n] becomes K+ over [n+1]."""
        return IndexSet(self.elements + (self.ground + 1,), self.ground + 1)

    def complement(self) -> "IndexSet":
        inside = set(self.elements)
        return IndexSet(
            tuple(i for i in range(1, self.ground + 1) if i not in inside),
            self.ground,
        )

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements


@dataclass(frozen=True)
class SubsetFamily:
    """All k-subsets of [n] in lexicographic order."""

    n: int
    k: int
    members: tuple[IndexSet, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_pos", {m.elements: i for i, m in enumerate(self.members)}
        )

    @property
    def size(self) -> int:
        return len(self.members)

    def index_of(self, subset) -> int:
        key = subset.elements if isinstance(subset, IndexSet) else tuple(subset)
        try:
            return self._pos[key]
        except KeyError:
            raise ValueError(f"{key} is not a member of this family") from None

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def k_subsets(n: int, k: int) -> SubsetFamily:
    """Enumerate the k-subsets of {1..n} in lexicographic order."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"k_subsets needs 0 <= k <= n, got n={n} k={k}")
    members = tuple(IndexSet(c, n) for c in combinations(range(1, n + 1), k))
    return SubsetFamily(n, k, members)


class MatrixExpr:
    """Dense matrix with integer or polynomial entries, never mixed."""

    __slots__ = ("rows", "cols", "entries", "universe")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Sequence[RingEntry],
        universe: VariableUniverse | None = None,
    ):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        if universe is None:
            for e in entries:
                if isinstance(e, Polynomial):
                    universe = e.universe
                    break
        if universe is not None:
            promoted = []
            for e in entries:
                if isinstance(e, Polynomial):
                    if not e.universe.compatible(universe):
                        raise ValueError("entries over different universes")
                    promoted.append(e)
                elif isinstance(e, int) and e in (0, 1):
                    promoted.append(Polynomial.constant(universe, e))
                else:
                    raise ValueError(
                        "cannot mix integer and polynomial entries "
                        "(only literals 0 and 1 are promoted)"
                    )
            entries = promoted
        else:
            for e in entries:
                if not isinstance(e, int):
                    raise ValueError(f"unsupported entry type: {type(e).__name__}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.universe = universe

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RingEntry]], universe: VariableUniverse | None = None
    ) -> "MatrixExpr":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = [e for row in rows for e in row]
        return cls(nrows, ncols, flat, universe)

    @classmethod
    def identity(cls, n: int) -> "MatrixExpr":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> RingEntry:
        """1-based entry access."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError(f"entry ({i},{j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def row_list(self) -> list[list[RingEntry]]:
        c = self.cols
        return [self.entries[r * c : (r + 1) * c] for r in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "MatrixExpr":
        ent = [self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)]
        return MatrixExpr(self.cols, self.rows, ent, self.universe)

    def __eq__(self, other):
        if not isinstance(other, MatrixExpr):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    __hash__ = None

    def __matmul__(self, other):
        return matmul(self, other)

    def __repr__(self):
        kind = "int" if self.universe is None else "poly"
        return f"<MatrixExpr {self.rows}x{self.cols} {kind}>"


def _normalize_indices(sel, limit: int) -> tuple[int, ...]:
    if isinstance(sel, IndexSet):
        idx = sel.elements
    else:
        idx = tuple(sel)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("indices must be strictly increasing")
    if any(i < 1 or i > limit for i in idx):
        raise ValueError("index out of range")
    return idx


def submatrix(a: MatrixExpr, row_sel, col_sel) -> MatrixExpr:
    """Rows and columns selected by 1-based strictly increasing indices."""
    ri = _normalize_indices(row_sel, a.rows)
    ci = _normalize_indices(col_sel, a.cols)
    c = a.cols
    ent = [a.entries[(i - 1) * c + (j - 1)] for i in ri for j in ci]
    return MatrixExpr(len(ri), len(ci), ent, a.universe)


def remove_rc(a: MatrixExpr, row: int, col: int) -> MatrixExpr:
    """Delete one row and one column (1-based)."""
    if not (1 <= row <= a.rows and 1 <= col <= a.cols):
        raise ValueError("row or column to remove is out of range")
    rows = [i for i in range(1, a.rows + 1) if i != row]
    cols = [j for j in range(1, a.cols + 1) if j != col]
    return submatrix(a, rows, cols)


def matmul(a: MatrixExpr, b: MatrixExpr) -> MatrixExpr:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if (a.universe is None) != (b.universe is None):
        raise ValueError("cannot multiply integer and polynomial matrices")
    n, p, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    out: list[RingEntry] = []
    if a.universe is None:
        for i in range(n):
            base = i * p
            for j in range(m):
                out.append(sum(ae[base + t] * be[t * m + j] for t in range(p)))
        return MatrixExpr(n, m, out)
    u = a.universe
    if not u.compatible(b.universe):
        raise ValueError("entries over different universes")
    for i in range(n):
        for j in range(m):
            acc: dict[int, int] = {}
            for t in range(p):
                accumulate_product(acc, ae[i * p + t], be[t * m + j])
            out.append(Polynomial._from_clean(u, {k: v for k, v in acc.items() if v}))
    return MatrixExpr(n, m, out, u)


def _require_square(a: MatrixExpr):
    if not a.is_square:
        raise ValueError(f"determinant needs a square matrix, got {a.rows}x{a.cols}")


def det_laplace(a: MatrixExpr) -> RingEntry:
    """Determinant by column expansion, memoized on the set of live rows.

    Level s holds the minors over all s-subsets of rows and the last s
    columns, so each of the 2^n row subsets is expanded exactly once; levels
    below the current one are freed as the expansion climbs.
    """
    _require_square(a)
    n = a.rows
    if a.universe is None:
        return _det_laplace_int(a) if n else 1
    return _det_laplace_poly(a) if n else Polynomial.one(a.universe)


def _det_laplace_int(a: MatrixExpr) -> int:
    n = a.rows
    ent = a.entries
    prev = {0: 1}
    for s in range(1, n + 1):
        col = n - s
        cur: dict[int, int] = {}
        for combo in combinations(range(n), s):
            mask = 0
            for r in combo:
                mask |= 1 << r
            acc = 0
            sign = 1
            for r in combo:
                e = ent[r * n + col]
                if e:
                    sub = prev[mask ^ (1 << r)]
                    if sub:
                        acc += sign * e * sub
                sign = -sign
            cur[mask] = acc
        prev = cur
    return prev[(1 << n) - 1]


def _det_laplace_poly(a: MatrixExpr) -> Polynomial:
    n = a.rows
    u = a.universe
    ent = a.entries
    prev = {0: Polynomial.one(u)}
    for s in range(1, n + 1):
        col = n - s
        cur: dict[int, Polynomial] = {}
        for combo in combinations(range(n), s):
            mask = 0
            for r in combo:
                mask |= 1 << r
            acc: dict[int, int] = {}
            negate = False
            for r in combo:
                e = ent[r * n + col]
                if e.terms:
                    sub = prev[mask ^ (1 << r)]
                    if sub.terms:
                        accumulate_product(acc, e, sub, negate)
                negate = not negate
            cur[mask] = Polynomial._from_clean(u, {m: c for m, c in acc.items() if c})
        prev = cur
    return prev[(1 << n) - 1]


def det_bareiss(a: MatrixExpr) -> int:
    """Fraction-free determinant; integer matrices only, exact at every step."""
    _require_square(a)
    if a.universe is not None:
        raise TypeError("det_bareiss handles integer matrices only")
    n = a.rows
    if n == 0:
        return 1
    c = a.cols
    m = [list(a.entries[r * c : (r + 1) * c]) for r in range(n)]
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    sign = 1
    prev = 1
    for j in range(n - 1):
        if m[j][j] == 0:
            for i in range(j + 1, n):
                if m[i][j] != 0:
                    m[j], m[i] = m[i], m[j]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[j][j]
        row_j = m[j]
        for i in range(j + 1, n):
            row_i = m[i]
            lead = row_i[j]
            for l in range(j + 1, n):
                row_i[l] = (pivot * row_i[l] - lead * row_j[l]) // prev
            row_i[j] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _parity(perm: Sequence[int]) -> int:
    inv = 0
    for i in range(len(perm)):
        pi = perm[i]
        for j in range(i + 1, len(perm)):
            if pi > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def brute_force_det(a: MatrixExpr) -> RingEntry:
    """Signed permutation sum; the independent oracle, capped at size 8."""
    _require_square(a)
    n = a.rows
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute_force_det is capped at size {BRUTE_FORCE_CAP}")
    if n == 0:
        return 1 if a.universe is None else Polynomial.one(a.universe)
    ent = a.entries
    total = None
    for perm in permutations(range(n)):
        term = _parity(perm)
        for i in range(n):
            term = term * ent[i * n + perm[i]]
        total = term if total is None else total + term
    return total


def adjugate(a: MatrixExpr) -> MatrixExpr:
    """Transposed cofactor matrix; satisfies a @ adjugate(a) = det(a) * identity."""
    _require_square(a)
    n = a.rows
    if n == 0:
        return MatrixExpr(0, 0, [], a.universe)
    if n == 1:
        one = 1 if a.universe is None else Polynomial.one(a.universe)
        return MatrixExpr(1, 1, [one], a.universe)
    ent: list[RingEntry] = []
    for i in range(1, n + 1):  # adj[i][j] = (-1)^(i+j) det(A with row j, col i removed)
        for j in range(1, n + 1):
            minor = det_laplace(remove_rc(a, j, i))
            ent.append(minor if (i + j) % 2 == 0 else -minor)
    return MatrixExpr(n, n, ent, a.universe)


def evaluate_matrix(a: MatrixExpr, assignment: Mapping[str, int]) -> MatrixExpr:
    """Specialize a polynomial matrix to an integer matrix."""
    if a.universe is None:
        raise TypeError("matrix is already an integer matrix")
    ent = [e.evaluate(assignment) for e in a.entries]
    return MatrixExpr(a.rows, a.cols, ent)


# -- text format -----------------------------------------------------------


def matrix_to_text(a: MatrixExpr) -> str:
    """First line "rows cols kind"; one row per line, entries space-separated.

    Polynomial entries use the compact (glued-term) canonical form so they
    contain no spaces themselves.
    """
    kind = "int" if a.universe is None else "poly"
    lines = [f"{a.rows} {a.cols} {kind}"]
    for row in a.row_list():
        if a.universe is None:
            lines.append(" ".join(str(e) for e in row))
        else:
            lines.append(" ".join(e.serialize(compact=True) for e in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str, universe: VariableUniverse | None = None) -> MatrixExpr:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split(" ")
    if len(header) != 3 or header[2] not in ("int", "poly"):
        raise ValueError(f"bad matrix header: {lines[0]!r}")
    rows, cols, kind = int(header[0]), int(header[1]), header[2]
    if kind == "poly" and universe is None:
        raise ValueError("polynomial matrix text needs a universe to parse into")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, found {len(body)}")
    entries: list[RingEntry] = []
    for line in body:
        toks = line.split(" ") if line else []
        if cols == 0:
            if line:
                raise ValueError("nonempty row in zero-column matrix")
            continue
        if len(toks) != cols:
            raise ValueError(f"expected {cols} entries in row, found {len(toks)}")
        if kind == "int":
            entries.extend(int(t) for t in toks)
        else:
            entries.extend(Polynomial.parse(universe, t) for t in toks)
    return MatrixExpr(rows, cols, entries, universe if kind == "poly" else None)
