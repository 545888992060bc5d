"""Coefficient families R, lambda, c and the comatrix A_beta^{r,i}(p).

For fixed beta != 0 and integers r, i the scalars

    R(k, l) = beta*gamma^(-l) - gamma^(k-1-i)   (l < k),   R(k, k) = 1,
    lambda(k, l): lambda(0,0) = 1, lambda(k,k) = 1,
    lambda(k, 0) = R(k,0) lambda(k-1, 0),
    lambda(k, l) = R(k,l) lambda(k-1, l) + lambda(k-1, l-1)   (0 < l < k)

drive the comodule structure of every simple Yetter-Drinfeld module over
B(n, w, gamma).  Both the recursion and the closed form

    lambda(k, p) = binom(k,p)_gamma * gamma^(-(k-p)p) * prod_{l=p+1}^k R(l, 0)

are first-class here, as are the two routes to the Hopf-algebra-valued
coefficients c(k, l): the defining antipode recursion and the closed form
lambda(k,l) y^(k-l) x^r g^(i-k).  Their agreement is an executable theorem
and the test suite mandates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .liu import HopfElement, LiuAlgebra, antipode
from .liu import comul as hopf_comul
from .liu import counit as hopf_counit
from .scalars import Scalar, q_binomial, root_order


def phi_rep(i: int, n: int) -> int:
    """The unique representative of i mod n inside {1, ..., n} (so phi(0) = n)."""
    if n < 1:
        raise ValueError("n must be positive")
    m = i % n
    return m if m else n


class CoeffContext:
    """Memoized coefficient families for one parameter tuple (beta, r, i)."""

    def __init__(self, algebra: LiuAlgebra, beta: Scalar, r: int, i: int):
        if beta.is_zero():
            raise ValueError("beta must be non-zero")
        self.algebra = algebra
        self.beta = algebra.field.scalar(beta)
        self.r = r
        self.i = i
        self._lam: dict[tuple[int, int], Scalar] = {(0, 0): algebra.field.one}

    def __repr__(self) -> str:
        return (
            f"CoeffContext(n={self.algebra.n}, w={self.algebra.w}, "
            f"beta={self.beta}, r={self.r}, i={self.i})"
        )

    def r_coeff(self, k: int, l: int) -> Scalar:
        """R(k, l) = beta*gamma^(-l) - gamma^(k-1-i) for l < k; 1 on the diagonal."""
        if not 0 <= l <= k:
            raise ValueError(f"r_coeff requires 0 <= l <= k, got l={l}, k={k}")
        if l == k:
            return self.algebra.field.one
        g = self.algebra.gamma_pow
        return self.beta * g(-l) - g(k - 1 - self.i)

    def lambda_recursive(self, k: int, l: int) -> Scalar:
        """lambda(k, l) by the defining recursion, memoized."""
        if not 0 <= l <= k:
            raise ValueError(f"lambda requires 0 <= l <= k, got l={l}, k={k}")
        if l == k:
            return self.algebra.field.one
        val = self._lam.get((k, l))
        if val is None:
            if l == 0:
                val = self.r_coeff(k, 0) * self.lambda_recursive(k - 1, 0)
            else:
                val = self.r_coeff(k, l) * self.lambda_recursive(
                    k - 1, l
                ) + self.lambda_recursive(k - 1, l - 1)
            self._lam[(k, l)] = val
        return val

    def lambda_explicit(self, k: int, p: int) -> Scalar:
        """Closed form: binom(k,p)_gamma gamma^(-(k-p)p) prod_{l=p+1}^k R(l,0).

        The product is empty (= 1) when p = k.
        """
        if not 0 <= p <= k:
            raise ValueError(f"lambda requires 0 <= p <= k, got p={p}, k={k}")
        out = q_binomial(k, p, self.algebra.gamma) * self.algebra.gamma_pow(
            -(k - p) * p
        )
        for l in range(p + 1, k + 1):
            out = out * self.r_coeff(l, 0)
        return out

    def c_coeff(self, k: int, l: int) -> HopfElement:
        """c(k, l) = lambda(k, l) y^(k-l) x^r g^(i-k) in normalized form."""
        if not 0 <= l <= k:
            raise ValueError(f"c_coeff requires 0 <= l <= k, got l={l}, k={k}")
        return self.algebra.monomial(
            k - l, self.i - k, self.r, self.lambda_recursive(k, l)
        )

    def c_coeff_recursive(self, k: int, l: int) -> HopfElement:
        """c(k, l) by the defining recursion in H.

        c(0,0) = x^r g^i and c(k+1, l) mixes c(k, l)S(y), y c(k, l)S(g) and
        c(k, l-1)S(g); the dual route to `c_coeff`.
        """
        if not 0 <= l <= k:
            raise ValueError(f"c_coeff requires 0 <= l <= k, got l={l}, k={k}")
        alg = self.algebra
        sy = antipode(alg.y)
        sg = alg.normalize(0, -1, 0)
        y = alg.y
        row: list[HopfElement] = [alg.monomial(0, self.i, self.r)]
        for kk in range(k):
            nxt: list[HopfElement] = []
            for ll in range(kk + 2):
                if ll == 0:
                    val = row[0] * sy + self.beta * (y * row[0] * sg)
                elif ll == kk + 1:
                    val = row[kk] * sg
                else:
                    val = (
                        row[ll] * sy
                        + (self.beta * alg.gamma_pow(-ll)) * (y * row[ll] * sg)
                        + row[ll - 1] * sg
                    )
                nxt.append(val)
            row = nxt
        return row[l]

    def build_comatrix(self, p: int) -> "ComatrixData":
        """The (p+1) x (p+1) lower-triangular matrix of c(k, l) entries."""
        if p < 0:
            raise ValueError("comatrix order must be >= 0")
        zero = self.algebra.zero()
        entries = [
            [self.c_coeff(k, l) if l <= k else zero for l in range(p + 1)]
            for k in range(p + 1)
        ]
        return ComatrixData(self.algebra, p, entries)

    # -- structural analysis --

    def root_exponent(self) -> Optional[int]:
        """j in [0, n) with beta = gamma^j, or None when beta^n != 1."""
        n = self.algebra.n
        if (self.beta ** n) != self.algebra.field.one:
            return None
        for j in range(n):
            if self.beta == self.algebra.gamma_pow(j):
                return j
        raise AssertionError("beta^n = 1 but beta is not a power of gamma")

    def boundary_index(self) -> int:
        """The dimension-defining m: n - phi(-i-j) if beta = gamma^j, else n - 1."""
        n = self.algebra.n
        j = self.root_exponent()
        if j is None:
            return n - 1
        return n - phi_rep(-self.i - j, n)

    def shape_report(self) -> "ShapeReport":
        """Classify the comatrix shape and machine-check the zero patterns.

        Case beta^n != 1: in A(n) the first column is non-zero everywhere and
        the last row vanishes except at both ends.  Case beta = gamma^j: in
        A(m+1) with m = n - phi(-i-j) the last row vanishes except for its
        final entry, while everything on or below the diagonal up to row m is
        non-zero.
        """
        n = self.algebra.n
        j = self.root_exponent()
        m = self.boundary_index()
        size = n if j is None else m + 1
        mat = self.build_comatrix(size)
        first_col = [not mat.entry(k, 0).is_zero() for k in range(size)]
        last_row = [not mat.entry(size, l).is_zero() for l in range(size + 1)]
        if j is None:
            ok = all(first_col) and last_row[0] and last_row[size] and not any(
                last_row[1:size]
            )
        else:
            ok = (
                all(first_col)
                and last_row[size]
                and not any(last_row[:size])
                and all(
                    not mat.entry(k, l).is_zero()
                    for k in range(size)
                    for l in range(k + 1)
                )
            )
        return ShapeReport(
            beta_power_of_gamma=j,
            boundary_index=m,
            matrix_order=size,
            first_column_nonzero=tuple(first_col),
            last_row_nonzero=tuple(last_row),
            pattern_ok=ok,
        )


@dataclass(frozen=True)
class ShapeReport:
    beta_power_of_gamma: Optional[int]
    boundary_index: int
    matrix_order: int
    first_column_nonzero: tuple[bool, ...]
    last_row_nonzero: tuple[bool, ...]
    pattern_ok: bool

    @property
    def root_case(self) -> bool:
        return self.beta_power_of_gamma is not None


class ComatrixData:
    """A lower-triangular square matrix of HopfElements."""

    def __init__(self, algebra: LiuAlgebra, p: int, entries: list[list[HopfElement]]):
        self.algebra = algebra
        self.p = p
        self.entries = entries

    def entry(self, k: int, l: int) -> HopfElement:
        return self.entries[k][l]

    @property
    def size(self) -> int:
        return self.p + 1

    def with_entry(self, k: int, l: int, value: HopfElement) -> "ComatrixData":
        entries = [row[:] for row in self.entries]
        entries[k][l] = value
        return ComatrixData(self.algebra, self.p, entries)

    def render_rows(self) -> list[list[str]]:
        return [[str(e) for e in row] for row in self.entries]

    def to_json(self) -> dict:
        return {
            "order": self.size,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }


@dataclass(frozen=True)
class ComatrixReport:
    ok: bool
    failures: tuple[tuple[str, int, int], ...]

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        if self.ok:
            return "pass"
        kind, k, l = self.failures[0]
        more = f" (+{len(self.failures) - 1} more)" if len(self.failures) > 1 else ""
        return f"fail: {kind} at ({k}, {l}){more}"


def is_comatrix(mat: ComatrixData) -> ComatrixReport:
    """Exactly check the comatrix axioms.

    Delta(c_kl) must equal sum_p c_kp (x) c_pl and eps(c_kl) must be the
    Kronecker delta; strictly upper entries must vanish.  Reports every
    failing coordinate.
    """
    alg = mat.algebra
    one = alg.field.one
    failures: list[tuple[str, int, int]] = []
    for k in range(mat.size):
        for l in range(mat.size):
            e = mat.entry(k, l)
            if l > k and not e.is_zero():
                failures.append(("upper-triangular", k, l))
                continue
            eps = hopf_counit(e)
            if eps != (one if k == l else alg.field.zero):
                failures.append(("counit", k, l))
            lhs = hopf_comul(e)
            rhs = None
            for p in range(mat.size):
                a, b = mat.entry(k, p), mat.entry(p, l)
                if a.is_zero() or b.is_zero():
                    continue
                term = {}
                for m1, c1 in a.terms.items():
                    for m2, c2 in b.terms.items():
                        key = (m1, m2)
                        c = c1 * c2
                        prev = term.get(key)
                        term[key] = c if prev is None else prev + c
                piece = _tensor2(alg, term)
                rhs = piece if rhs is None else rhs + piece
            if rhs is None:
                rhs = _tensor2(alg, {})
            if lhs != rhs:
                failures.append(("comultiplication", k, l))
    return ComatrixReport(not failures, tuple(failures))


def _tensor2(alg: LiuAlgebra, terms: dict):
    from .liu import TensorElement

    return TensorElement(alg, 2, terms)
