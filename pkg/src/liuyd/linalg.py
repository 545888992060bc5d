"""Exact rank computation over Q(zeta_N)(t).

Fraction-free Gaussian elimination with content stripping: rows are first
cleared of denominators, then reduced by two-term cross-multiplication
(pivot*row - entry*pivot_row), and after every elimination step each
modified row is divided by its polynomial gcd and rational content.  No
division ever leaves the polynomial ring, so the arithmetic stays exact
while coefficient growth stays near the primitive-PRS baseline.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .scalars import (
    CycloField,
    Scalar,
    _pl_divmod,
    _pl_gcd,
    _pl_mul,
    _pl_scale,
    _pl_trim,
)


def exact_rank(rows: list[list[Scalar]], field: CycloField) -> int:
    """Rank of a matrix of Scalars, exactly."""
    work = [_clear_denominators(field, row) for row in rows]
    work = [r for r in (_strip_content(field, row) for row in work) if any(r)]
    if not work:
        return 0
    width = len(work[0])
    rank = 0
    for col in range(width):
        piv = None
        best = None
        for idx in range(rank, len(work)):
            entry = work[idx][col]
            if entry:
                weight = _entry_weight(entry)
                if best is None or weight < best:
                    best = weight
                    piv = idx
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        pval = prow[col]
        for idx in range(rank + 1, len(work)):
            row = work[idx]
            e = row[col]
            if not e:
                continue
            new = [
                _pl_sub(field, _pl_mul(field, pval, row[j]), _pl_mul(field, e, prow[j]))
                for j in range(width)
            ]
            work[idx] = _strip_content(field, new)
        rank += 1
        if rank == len(work):
            break
    return rank


# internal rows are lists of polynomials (tuples of cyclotomic coefficient vectors)


def _entry_weight(poly) -> tuple[int, int]:
    support = sum(1 for vec in poly for c in vec if c)
    return (len(poly), support)


def _clear_denominators(field: CycloField, row: list[Scalar]) -> list:
    common = (field._cone,)
    for s in row:
        if s.field.conductor != field.conductor:
            raise ValueError("matrix entries live in different fields")
        g = _pl_gcd(field, common, s.den)
        q, _ = _pl_divmod(field, s.den, g)
        common = _pl_mul(field, common, q)
    polys = []
    for s in row:
        q, rem = _pl_divmod(field, common, s.den)
        assert not rem
        polys.append(_pl_mul(field, s.num, q))
    return polys


def _pl_sub(field: CycloField, a, b):
    n = max(len(a), len(b))
    zero = field._czero
    a = tuple(a) + (zero,) * (n - len(a))
    b = tuple(b) + (zero,) * (n - len(b))
    return _pl_trim(field._csub(x, y) for x, y in zip(a, b))


def _strip_content(field: CycloField, row: list) -> list:
    nonzero = [p for p in row if p]
    if not nonzero:
        return row
    g = nonzero[0]
    for p in nonzero[1:]:
        if len(g) == 1:
            break
        g = _pl_gcd(field, g, p)
    if len(g) > 1:
        row = [_pl_divmod(field, p, g)[0] if p else p for p in row]
    # rational content: gcd of coefficient numerators over lcm of denominators
    num = 0
    den = 1
    for p in row:
        for vec in p:
            for c in vec:
                if c:
                    fr = Fraction(c)
                    num = int_gcd(num, fr.numerator)
                    den = den * (fr.denominator // int_gcd(den, fr.denominator))
    if num:
        content = Fraction(num, den)
        if content != 1:
            inv = field._crat(1 / content)
            row = [_pl_scale(field, p, inv) if p else p for p in row]
    return row


def rank_of_operator(op: dict, size: int, field: CycloField) -> int:
    """Rank of a sparse column-major operator on a size-dimensional space."""
    rows = []
    zero = field.zero
    for col in range(size):
        column = op.get(col)
        dense = [zero] * size
        if column:
            for r, v in column.items():
                dense[r] = v
        rows.append(dense)
    return exact_rank(rows, field)
