"""Braided vector spaces, braided symmetrizers and Nichols algebra dimensions.

A braided space (V, c) gives for every degree k the braided symmetrizer

    S_k = sum over Sym(k) of rho(sigma),

where rho lifts a permutation through any reduced word in the braid
generators c_i = id^(i) (x) c (x) id^(k-i-2); the braid equation makes the
lift well defined (Matsumoto).  The degree-k component of the Nichols
algebra B(V) has dimension rank S_k, so the graded dimensions of B(V) up to
a degree budget are exact ranks of these matrices.

Two independent constructions of S_k are provided: the permutation sum
(grouped along the weak order so shared reduced-word prefixes are reused)
and a recursive shuffle factorization S_k = (S_(k-1) (x) id) X_k; the test
suite requires them to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .linalg import rank_of_operator
from .scalars import CycloField, Scalar, root_order
from .ydmodules import YDModule

Op = dict[int, dict[int, Scalar]]  # column -> (row -> coefficient), sparse


class SizeBudgetError(RuntimeError):
    """A tensor power exceeded the configured row budget."""


DEFAULT_ROW_BUDGET = 4096


class BraidedSpace:
    """A finite-dimensional braided vector space with an exact braiding matrix.

    The braiding is stored column-major on the lexicographic basis of
    V (x) V: column k*d + l holds c(v_k (x) v_l).  Construction verifies the
    braid equation and invertibility exactly.
    """

    def __init__(self, d: int, c: Op, field: CycloField, check: bool = True):
        self.d = d
        self.field = field
        self.c = c
        self._gen_cache: dict[tuple[int, int], Op] = {}
        if check:
            if rank_of_operator(c, d * d, field) != d * d:
                raise ValueError("braiding is not invertible")
            c0 = self.braid_generator(3, 0)
            c1 = self.braid_generator(3, 1)
            lhs = compose(c0, compose(c1, c0))
            rhs = compose(c1, compose(c0, c1))
            if lhs != rhs:
                raise ValueError("braid equation fails")

    @staticmethod
    def from_matrix(d: int, entries: list[list[Scalar]], field: CycloField) -> "BraidedSpace":
        """Braiding from a dense (d^2 x d^2) matrix, entries[row][col]."""
        c: Op = {}
        for col in range(d * d):
            column = {
                row: entries[row][col]
                for row in range(d * d)
                if not entries[row][col].is_zero()
            }
            if column:
                c[col] = column
        return BraidedSpace(d, c, field)

    @staticmethod
    def diagonal(q: list[list[Scalar]], field: CycloField) -> "BraidedSpace":
        """Diagonal braiding c(v_k (x) v_l) = q[k][l] v_l (x) v_k."""
        d = len(q)
        c: Op = {}
        for k in range(d):
            for l in range(d):
                c[k * d + l] = {l * d + k: q[k][l]}
        return BraidedSpace(d, c, field)

    def braid_generator(self, k: int, i: int) -> Op:
        """c acting in slots (i, i+1) of V^(x)k, identity elsewhere."""
        if not 0 <= i <= k - 2:
            raise ValueError(f"generator index {i} out of range for degree {k}")
        key = (k, i)
        op = self._gen_cache.get(key)
        if op is not None:
            return op
        d = self.d
        left = d ** (k - i - 2)  # stride of the slot pair
        op = {}
        for col in range(d ** k):
            rest, low = divmod(col, left)
            rest, b = divmod(rest, d)
            rest, a = divmod(rest, d)
            column = self.c.get(a * d + b)
            if column is None:
                continue
            out = {}
            for pair, v in column.items():
                na, nb = divmod(pair, d)
                row = ((rest * d + na) * d + nb) * left + low
                out[row] = v
            op[col] = out
        self._gen_cache[key] = op
        return op


def identity_op(size: int, field: CycloField) -> Op:
    one = field.one
    return {i: {i: one} for i in range(size)}


def compose(a: Op, b: Op) -> Op:
    """a after b, both column-major sparse."""
    out: Op = {}
    for col, bcol in b.items():
        acc: dict[int, Scalar] = {}
        for mid, cb in bcol.items():
            acol = a.get(mid)
            if not acol:
                continue
            for row, ca in acol.items():
                v = ca * cb
                prev = acc.get(row)
                acc[row] = v if prev is None else prev + v
        acc = {r: v for r, v in acc.items() if not v.is_zero()}
        if acc:
            out[col] = acc
    return out


def op_add(a: Op, b: Op) -> Op:
    out = {col: dict(col_map) for col, col_map in a.items()}
    for col, bcol in b.items():
        acc = out.setdefault(col, {})
        for row, v in bcol.items():
            prev = acc.get(row)
            nv = v if prev is None else prev + v
            if nv.is_zero():
                acc.pop(row, None)
            else:
                acc[row] = nv
        if not acc:
            out.pop(col, None)
    return out


def op_equal(a: Op, b: Op) -> bool:
    return a == b


def bubble_sort_word(perm: tuple[int, ...]) -> list[int]:
    """A reduced word for perm (as s_{w0} s_{w1} ...) found by bubble sort."""
    q = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(q) - 1):
            if q[j] > q[j + 1]:
                q[j], q[j + 1] = q[j + 1], q[j]
                swaps.append(j)
                changed = True
    return swaps[::-1]


def permutation_operator(
    B: BraidedSpace, k: int, perm: tuple[int, ...], word: Optional[list[int]] = None
) -> Op:
    """rho(perm) through a reduced word (bubble-sort word by default).

    By Matsumoto's theorem the result is independent of the chosen reduced
    word; the tests exercise this with explicitly distinct words.
    """
    if word is None:
        word = bubble_sort_word(perm)
    op = identity_op(B.d ** k, B.field)
    for idx in reversed(word):
        op = compose(B.braid_generator(k, idx), op)
    return op


def braided_symmetrizer(
    B: BraidedSpace, k: int, row_budget: int = DEFAULT_ROW_BUDGET
) -> Op:
    """S_k = sum of rho(sigma) over Sym(k).

    The sum walks the left weak order so each permutation is reached by one
    extra braid generator applied to an already-lifted reduced word; this is
    exactly the permutation sum with shared word prefixes evaluated once.
    """
    if k < 1:
        raise ValueError("symmetrizer degree must be >= 1")
    size = B.d ** k
    if size > row_budget:
        raise SizeBudgetError(
            f"degree {k} needs {size} rows, over the budget {row_budget}"
        )
    ident = tuple(range(k))
    level: dict[tuple[int, ...], Op] = {ident: identity_op(size, B.field)}
    total = identity_op(size, B.field)
    while level:
        nxt: dict[tuple[int, ...], Op] = {}
        for perm, op in level.items():
            for i in range(k - 1):
                # s_i * perm is longer iff i appears before i+1 in perm
                if perm.index(i) < perm.index(i + 1):
                    swapped = tuple(
                        i + 1 if v == i else i if v == i + 1 else v for v in perm
                    )
                    if swapped not in nxt:
                        nxt[swapped] = compose(B.braid_generator(k, i), op)
        for op in nxt.values():
            total = op_add(total, op)
        level = nxt
    return total


def symmetrizer_shuffle(B: BraidedSpace, k: int) -> Op:
    """Cross-check oracle: S_k = (S_(k-1) (x) id) (id + c_(k-1) + c_(k-1)c_(k-2) + ...)."""
    field = B.field
    if k == 1:
        return identity_op(B.d, field)
    prev = symmetrizer_shuffle(B, k - 1)
    lifted = _tensor_id(prev, B.d, field)
    size = B.d ** k
    x = identity_op(size, field)
    chain = None
    for j in range(k - 2, -1, -1):
        gen = B.braid_generator(k, j)
        chain = gen if chain is None else compose(chain, gen)
        x = op_add(x, chain)
    return compose(lifted, x)


def _tensor_id(op: Op, d: int, field: CycloField) -> Op:
    out: Op = {}
    for col, col_map in op.items():
        for extra in range(d):
            out[col * d + extra] = {row * d + extra: v for row, v in col_map.items()}
    return out


# -- braidings from Yetter-Drinfeld modules --


def braiding_from_yd(V: YDModule) -> BraidedSpace:
    """c(v_k (x) v_l) = sum_p (c(k, p) . v_l) (x) v_p from the YD structure."""
    d = V.dim
    f = V.liu.field
    c: Op = {}
    for k in range(d):
        for l in range(d):
            col: dict[int, Scalar] = {}
            for p in range(k + 1):
                h = V.coaction_entry(k, p)
                if h.is_zero():
                    continue
                acted = V.act(h, V.basis_vector(l))
                for j, coeff in enumerate(acted):
                    if coeff.is_zero():
                        continue
                    row = j * d + p
                    prev = col.get(row)
                    nv = coeff if prev is None else prev + coeff
                    if nv.is_zero():
                        col.pop(row, None)
                    else:
                        col[row] = nv
            if col:
                c[k * d + l] = col
    try:
        return BraidedSpace(d, c, f)
    except ValueError as exc:
        raise AssertionError(
            f"internal inconsistency: YD braiding violates the braid axioms ({exc})"
        ) from exc


# -- graded dimensions --


@dataclass(frozen=True)
class HilbertPrefix:
    """dims[k] = dim B^k(V) for k <= the last computed degree.

    truncated_at marks the first degree that was *not* computed because the
    size budget ran out; nothing is ever extrapolated.
    """

    dims: tuple[int, ...]
    truncated_at: Optional[int] = None

    def __iter__(self):
        return iter(self.dims)

    def total(self) -> int:
        return sum(self.dims)


def graded_dims(
    B: BraidedSpace,
    max_degree: int,
    row_budget: int = DEFAULT_ROW_BUDGET,
    progress: Optional[Callable[[int, int, int], None]] = None,
) -> HilbertPrefix:
    """Exact graded dimensions of the Nichols algebra through max_degree."""
    dims = [1]
    if max_degree >= 1:
        dims.append(B.d)
    for k in range(2, max_degree + 1):
        size = B.d ** k
        if size > row_budget:
            return HilbertPrefix(tuple(dims), truncated_at=k)
        s = braided_symmetrizer(B, k, row_budget)
        r = rank_of_operator(s, size, B.field)
        dims.append(r)
        if progress is not None:
            progress(k, size, r)
    return HilbertPrefix(tuple(dims))


def one_dim_finite(q: Scalar) -> bool:
    """Finite-dimensionality of the rank-1 Nichols algebra with braiding q.

    True exactly when q is a root of unity different from 1.
    """
    if q.is_zero():
        raise ValueError("braiding scalar must be non-zero")
    order = root_order(q)
    return order is not None and order > 1


def t2_certificate(s: Scalar, m: int) -> tuple[Scalar, bool]:
    """The transcendental-regime certificate prod_{l=1}^m (1 + s + ... + s^(l-1)).

    For s = 1 the product is m!; for s outside the roots of unity it is a
    non-zero value; a non-trivial root of unity kills it, which is exactly
    why the certificate argument needs the transcendental regime.
    """
    if m < 1:
        raise ValueError("certificate length must be >= 1")
    f = s.field
    product = f.one
    partial = f.zero
    spow = f.one
    for l in range(1, m + 1):
        partial = partial + spow
        spow = spow * s
        product = product * partial
    return product, not product.is_zero()


@dataclass(frozen=True)
class MonotonicityReport:
    ok: bool
    violations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __bool__(self) -> bool:
        return self.ok


def index_monotonicity_check(B: BraidedSpace, k: int) -> MonotonicityReport:
    """Check that S_k never raises the total basis index.

    For braidings coming from the triangular YD coaction, every non-zero
    entry of S_k must map v_{i_1} ... v_{i_k} into tensors with
    j_1 + ... + j_k <= i_1 + ... + i_k.
    """
    s = braided_symmetrizer(B, k)
    d = B.d
    violations = []
    for col, col_map in s.items():
        csum = sum(_digits(col, d, k))
        for row in col_map:
            if sum(_digits(row, d, k)) > csum:
                violations.append(
                    (tuple(_digits(row, d, k)), tuple(_digits(col, d, k)))
                )
    return MonotonicityReport(not violations, tuple(violations))


def _digits(idx: int, d: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        idx, r = divmod(idx, d)
        out.append(r)
    return out[::-1]
