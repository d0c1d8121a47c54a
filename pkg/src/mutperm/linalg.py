"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping a column index (position in some ordered basis)
to a nonzero Fraction.  Matrices are lists of such rows together with a
column count.  Everything is exact: no floats, no tolerances.  Pivoting is
deterministic (earliest column, then smallest-magnitude pivot), so equal
inputs always give identical output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def clean_vec(v):
    """Drop zero entries and coerce values to Fraction."""
    return {k: Fraction(c) for k, c in v.items() if c}


class Matrix:
    """Sparse rational matrix: a list of sparse rows over ncols columns.

    ``labels``, when given, names the columns (e.g. perm monomials or
    magmatic monomials); it is carried along for reporting only.
    """

    def __init__(self, rows, ncols, labels=None):
        self.rows = [clean_vec(r) for r in rows]
        self.ncols = ncols
        self.labels = labels
        for r in self.rows:
            if any(not (0 <= k < ncols) for k in r):
                raise ValueError("row index outside column basis")

    @property
    def nrows(self):
        return len(self.rows)

    def transpose(self):
        cols = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, c in row.items():
                cols[j][i] = c
        return Matrix(cols, self.nrows)

    def mul_vec(self, v):
        """Matrix times column vector, result as row-index -> value."""
        out = {}
        for i, row in enumerate(self.rows):
            s = sum((c * v[k] for k, c in row.items() if k in v), Fraction(0))
            if s:
                out[i] = s
        return out

    def dense(self):
        return [[row.get(j, Fraction(0)) for j in range(self.ncols)]
                for row in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.rows == other.rows)


class Inconsistent:
    """Outcome of solve() on an unsolvable system.

    ``certificate`` is a left null combination of the matrix rows whose
    pairing with the right-hand side is nonzero.
    """

    def __init__(self, certificate):
        self.certificate = certificate

    def __repr__(self):
        return f"Inconsistent({self.certificate!r})"


def _eliminate(rows, ncols, extras=None):
    """Full Gauss-Jordan elimination in place.

    ``extras`` is an optional parallel list of payloads (per row) that get
    the same row operations applied; each payload is a (dict, Fraction)
    pair used by solve() for certificate tracking.  Returns the list of
    pivot columns (one per nonzero row, rows reordered so row i has pivot
    pivots[i]).
    """
    n = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, n):
            v = rows[i].get(c)
            if v:
                cand = (abs(v), i)
                if best is None or cand < best:
                    best = cand
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        if extras is not None:
            extras[r], extras[i] = extras[i], extras[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = {k: v / piv for k, v in rows[r].items()}
            if extras is not None:
                cert, b = extras[r]
                extras[r] = ({k: v / piv for k, v in cert.items()}, b / piv)
        for j in range(n):
            if j == r:
                continue
            fac = rows[j].get(c)
            if not fac:
                continue
            rj = rows[j]
            for k, v in rows[r].items():
                nv = rj.get(k, Fraction(0)) - fac * v
                if nv:
                    rj[k] = nv
                else:
                    rj.pop(k, None)
            if extras is not None:
                certj, bj = extras[j]
                certr, br = extras[r]
                for k, v in certr.items():
                    nv = certj.get(k, Fraction(0)) - fac * v
                    if nv:
                        certj[k] = nv
                    else:
                        certj.pop(k, None)
                extras[j] = (certj, bj - fac * br)
        pivots.append(c)
        r += 1
    return pivots


def rref(m):
    """Reduced row echelon form and rank of a Matrix.

    The RREF is unique for the fixed column order, hence deterministic.
    """
    rows = [dict(r) for r in m.rows]
    pivots = _eliminate(rows, m.ncols)
    rank = len(pivots)
    return Matrix(rows[:rank], m.ncols, m.labels), rank


def kernel_basis(m):
    """Reduced basis of the right kernel {v : m.v = 0}.

    One basis vector per free column, with a 1 in that free column; the
    list is ordered by free column index.
    """
    ech, rank = rref(m)
    piv_cols = []
    for row in ech.rows:
        piv_cols.append(min(row))
    piv_set = set(piv_cols)
    basis = []
    for f in range(m.ncols):
        if f in piv_set:
            continue
        v = {f: Fraction(1)}
        for row, c in zip(ech.rows, piv_cols):
            if f in row:
                v[c] = -row[f]
        basis.append(v)
    return basis


def solve(m, rhs):
    """One exact solution of m.x = rhs, or Inconsistent with certificate.

    ``rhs`` maps row index -> Fraction.  Free variables are set to zero,
    so the returned solution is deterministic.
    """
    rows = [dict(r) for r in m.rows]
    extras = [({i: Fraction(1)}, Fraction(rhs.get(i, 0)))
              for i in range(len(rows))]
    pivots = _eliminate(rows, m.ncols, extras)
    rank = len(pivots)
    for i in range(rank, len(rows)):
        cert, b = extras[i]
        if b:
            return Inconsistent(clean_vec(cert))
    sol = {}
    for i, c in enumerate(pivots):
        b = extras[i][1]
        if b:
            sol[c] = b
    return sol


def in_span(rows, v, ncols):
    """Is v a rational combination of the given rows?

    Returns (True, coords) with coords[j] the coefficient of rows[j], or
    (False, None).
    """
    cols = [{} for _ in range(ncols)]
    for j, row in enumerate(rows):
        for k, c in row.items():
            cols[k][j] = c
    mat = Matrix(cols, len(rows))
    res = solve(mat, clean_vec(v))
    if isinstance(res, Inconsistent):
        return False, None
    return True, res


def _to_int_row(v):
    """Scale a rational sparse vector to coprime integers."""
    items = [(k, Fraction(c)) for k, c in v.items() if c]
    if not items:
        return {}
    den = 1
    for _, c in items:
        den = den * c.denominator // gcd(den, c.denominator)
    row = {k: int(c * den) for k, c in items}
    g = 0
    for c in row.values():
        g = gcd(g, c)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    return {k: c // g for k, c in row.items()}


class SpanReducer:
    """Incremental integer row-echelon span with exact membership tests.

    Rows are kept fraction-free (coprime integer entries, positive leading
    coefficient), one per pivot column.  This is forward echelon only, not
    RREF; it is the workhorse behind the big consequence-span and
    spanning-set computations, where full back-elimination is too costly.
    """

    def __init__(self):
        self.pivot_rows = {}

    @property
    def dim(self):
        return len(self.pivot_rows)

    def _reduce(self, v):
        while v:
            c = min(v)
            row = self.pivot_rows.get(c)
            if row is None:
                return v
            a = v[c]
            g = row[c]
            d = gcd(a, g)
            mv = g // d
            mr = a // d
            if mv != 1:
                for k in list(v):
                    v[k] *= mv
            for k, val in row.items():
                nv = v.get(k, 0) - mr * val
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def residue(self, v):
        """Reduce a copy of v against the current span (integerized)."""
        return self._reduce(_to_int_row(v))

    def contains(self, v):
        return not self.residue(v)

    def insert(self, v):
        """Add v to the span; True if the dimension grew."""
        r = self._reduce(_to_int_row(v))
        if not r:
            return False
        g = 0
        for c in r.values():
            g = gcd(g, c)
        if r[min(r)] < 0:
            g = -g
        if g != 1:
            r = {k: c // g for k, c in r.items()}
        self.pivot_rows[min(r)] = r
        return True

    def rows(self):
        """Echelon rows in pivot order, as Fraction dicts."""
        return [{k: Fraction(c) for k, c in self.pivot_rows[p].items()}
                for p in sorted(self.pivot_rows)]
