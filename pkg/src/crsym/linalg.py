"""Exact sparse Gaussian elimination over the rationals.

Rows are dicts ``column -> value``. Arithmetic runs on ``gmpy2.mpq``;
results come back as ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

_ZERO = mpq(0)


def _to_sparse(rows):
    out = []
    for r in rows:
        if isinstance(r, dict):
            d = {c: mpq(v.numerator, v.denominator) if isinstance(v, Fraction) else mpq(v) for c, v in r.items() if v}
        else:
            d = {c: mpq(v.numerator, v.denominator) if isinstance(v, Fraction) else mpq(v) for c, v in enumerate(r) if v}
        out.append(d)
    return out


def _echelon(rows):
    """Reduce rows to echelon form; returns ``{pivot_col: row}`` with unit pivots."""
    pivots: dict = {}
    for src in rows:
        row = dict(src)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            f = row[c]
            for k, v in p.items():
                nv = row.get(k, _ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return pivots


def rref(rows):
    """Reduced row echelon form as ``{pivot_col: row}``; pivots chosen by column order."""
    pivots = _echelon(rows)
    order = sorted(pivots)
    for c in reversed(order):
        prow = pivots[c]
        for c2 in order:
            if c2 >= c:
                break
            r = pivots[c2]
            f = r.get(c)
            if f:
                for k, v in prow.items():
                    nv = r.get(k, _ZERO) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
    return pivots


def rational_kernel(rows, ncols: int) -> list[list[Fraction]]:
    """Exact nullspace basis of the matrix given by ``rows`` (dense lists or sparse dicts).

    One basis vector per free column, in column order, with a 1 in that column.
    """
    piv = rref(_to_sparse(rows))
    free = [c for c in range(ncols) if c not in piv]
    # column -> list of (pivot col, coefficient) for quick assembly
    uses: dict = {}
    for pc, r in piv.items():
        for k, v in r.items():
            if k != pc:
                uses.setdefault(k, []).append((pc, v))
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for pc, v in uses.get(f, ()):
            vec[pc] = -Fraction(int(v.numerator), int(v.denominator))
        basis.append(vec)
    return basis


def rank(rows) -> int:
    return len(_echelon(_to_sparse(rows)))


class SpanSolver:
    """Coordinates of vectors in the span of a fixed independent family."""

    def __init__(self, vectors):
        self.dim = len(vectors)
        # transpose: one row per coordinate, unknowns are the family coefficients
        self._vectors = [dict(v) if isinstance(v, dict) else {i: x for i, x in enumerate(v) if x} for v in vectors]
        rows: dict = {}
        for j, v in enumerate(self._vectors):
            for i, x in v.items():
                rows.setdefault(i, {})[j] = x
        self._keys = sorted(rows)
        # augment with an identity block so elimination records the row combinations
        n = len(self._keys)
        aug = []
        for idx, key in enumerate(self._keys):
            r = {j: x for j, x in rows[key].items()}
            r[self.dim + idx] = 1
            aug.append(r)
        self._piv = rref(_to_sparse(aug))
        self._n = n
        self._key_set = set(self._keys)
        if any(j not in self._piv for j in range(self.dim)):
            raise ValueError("vectors are linearly dependent")

    def solve(self, v):
        """Coefficients ``x`` with ``sum x_j vectors[j] == v``, or ``None`` if outside the span."""
        v = dict(v) if isinstance(v, dict) else {i: x for i, x in enumerate(v) if x}
        if any(k not in self._key_set for k in v):
            return None
        coeffs = []
        for j in range(self.dim):
            r = self._piv[j]
            s = _ZERO
            for k, a in r.items():
                if k >= self.dim:
                    key = self._keys[k - self.dim]
                    x = v.get(key)
                    if x:
                        s += a * mpq(x.numerator, x.denominator) if isinstance(x, Fraction) else a * mpq(x)
            coeffs.append(Fraction(int(s.numerator), int(s.denominator)))
        # verify exactly
        recon: dict = {}
        for c, vec in zip(coeffs, self._vectors):
            if c:
                for i, x in vec.items():
                    recon[i] = recon.get(i, 0) + c * x
        recon = {i: x for i, x in recon.items() if x}
        target = {i: Fraction(x) for i, x in v.items() if x}
        return coeffs if recon == target else None
