"""Exact rational nullspaces.

Two independent routes: :func:`nullspace` works on sparse rows with a fixed
pivot rule, :func:`dense_nullspace` is textbook Gauss-Jordan on a dense
array.  Both return the basis read off the reduced row echelon form, which
is unique, so the two results must agree exactly.
"""

from collections import defaultdict
from fractions import Fraction


class ExactMatrix:
    """Sparse rational matrix: one ``{col: value}`` dict per row, no zeros."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        clean = []
        for r in rows or [{} for _ in range(nrows)]:
            row = {}
            for c, v in r.items():
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} out of range for {ncols} columns")
                v = Fraction(v)
                if v:
                    row[c] = v
            clean.append(row)
        if len(clean) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(clean)}")
        self.rows = clean

    @classmethod
    def from_dense(cls, data, ncols=None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, [{j: v for j, v in enumerate(r) if v} for r in data])

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def sparse_rref(mat):
    """Reduced row echelon form of ``mat``.

    Columns are scanned left to right.  The pivot for column j is the
    not-yet-used row with a nonzero in j that has the fewest nonzeros,
    ties going to the lowest row index.

    Returns ``(pivots, rows)`` where ``pivots`` maps pivot column to its row.
    """
    rows = [dict(r) for r in mat.rows]
    col_rows = defaultdict(set)
    for rid, r in enumerate(rows):
        for c in r:
            col_rows[c].add(rid)
    used = [False] * len(rows)
    pivots = {}
    for j in range(mat.ncols):
        cands = [rid for rid in col_rows.get(j, ()) if not used[rid]]
        if not cands:
            continue
        p = min(cands, key=lambda rid: (len(rows[rid]), rid))
        prow = rows[p]
        lead = prow[j]
        if lead != 1:
            for c in prow:
                prow[c] /= lead
        used[p] = True
        pivots[j] = p
        for rid in list(col_rows[j]):
            if rid == p:
                continue
            row = rows[rid]
            f = row[j]
            for c, v in prow.items():
                old = row.get(c)
                if old is None:
                    row[c] = -f * v
                    col_rows[c].add(rid)
                else:
                    nv = old - f * v
                    if nv:
                        row[c] = nv
                    else:
                        del row[c]
                        col_rows[c].discard(rid)
    return pivots, rows


def nullspace(mat):
    """Nullspace basis, one vector per free column in increasing order.

    Vector k has a 1 in free column f_k, zeros in the other free columns,
    and minus the RREF entries of column f_k in the pivot positions.
    """
    pivots, rows = sparse_rref(mat)
    free = [j for j in range(mat.ncols) if j not in pivots]
    index = {f: k for k, f in enumerate(free)}
    basis = [[Fraction(0)] * mat.ncols for _ in free]
    for k, f in enumerate(free):
        basis[k][f] = Fraction(1)
    for pcol, rid in pivots.items():
        for c, v in rows[rid].items():
            if c != pcol:
                basis[index[c]][pcol] = -v
    return [tuple(v) for v in basis]


def rank(mat):
    return len(sparse_rref(mat)[0])


def dense_nullspace(data, ncols=None):
    """Independent reference: plain Gauss-Jordan on a dense copy.

    Accepts an :class:`ExactMatrix` or a list of rows.
    """
    if isinstance(data, ExactMatrix):
        ncols = data.ncols
        a = data.to_dense()
    else:
        a = [[Fraction(v) for v in r] for r in data]
        if ncols is None:
            ncols = len(a[0]) if a else 0
    m = len(a)
    pivot_cols = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = None
        for i in range(r, m):
            if a[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivot_cols.append(c)
        r += 1
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -a[i][f]
        basis.append(tuple(v))
    return basis
