"""The generalized Liu algebra B(n, w, gamma) as a computable Hopf algebra.

B(n, w, gamma) is generated by x^{+-1}, g, y subject to

    x x^{-1} = 1,  xg = gx,  xy = yx,
    yg = gamma * gy,
    y^n = 1 - x^w = 1 - g^n,

with Delta(x) = x(x)x, Delta(g) = g(x)g, Delta(y) = y(x)g + 1(x)y,
eps(x) = eps(g) = 1, eps(y) = 0, S(x) = x^{-1}, S(g) = g^{-1},
S(y) = -y g^{-1}.  A linear basis is y^a g^b x^c with 0 <= a, b < n and
c in Z; elements are finite Scalar-linear combinations of these monomials.

Everything here is immutable and pure: elements may be shared freely
across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

from .scalars import CycloField, ConductorError, Scalar, root_order

Mono = tuple[int, int, int]  # (a, b, c) for y^a g^b x^c


class SupportLimitError(RuntimeError):
    """An element grew past the configured support-size limit."""


class LiuAlgebra:
    """B(n, w, gamma) with gamma a primitive n-th root of unity."""

    def __init__(self, n: int, w: int, gamma: Scalar, max_terms: int = 10**6):
        if n < 1 or w < 1:
            raise ValueError(f"n and w must be positive, got n={n}, w={w}")
        if root_order(gamma) != n:
            raise ValueError(f"gamma must be a primitive {n}-th root of unity")
        self.n = n
        self.w = w
        self.gamma = gamma
        self.field = gamma.field
        self.max_terms = max_terms
        self._gpow = [self.field.one]
        for _ in range(1, n):
            self._gpow.append(self._gpow[-1] * gamma)
        self._mono_cache: dict[tuple[int, int, int, int], dict[Mono, Scalar]] = {}
        self._comul_y_cache: dict[int, "TensorElement"] = {}
        self.one = self.monomial(0, 0, 0)
        self.x = self.monomial(0, 0, 1)
        self.g = self.monomial(0, 1, 0)
        self.y = self.monomial(1, 0, 0)

    def __repr__(self) -> str:
        return f"LiuAlgebra(n={self.n}, w={self.w}, gamma={self.gamma})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LiuAlgebra)
            and (self.n, self.w, self.gamma) == (other.n, other.w, other.gamma)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.w, self.gamma))

    def gamma_pow(self, e: int) -> Scalar:
        return self._gpow[e % self.n]

    # -- element constructors --

    def zero(self) -> "HopfElement":
        return HopfElement(self, {})

    def scalar(self, c: Union[int, Fraction, Scalar]) -> "HopfElement":
        c = self.field.scalar(c)
        return HopfElement(self, {(0, 0, 0): c} if c else {})

    def monomial(self, a: int, b: int, c: int, coeff=1) -> "HopfElement":
        return self.normalize(a, b, c) * self.field.scalar(coeff)

    def element(self, terms: Iterable[tuple[Mono, Scalar]]) -> "HopfElement":
        acc: dict[Mono, Scalar] = {}
        for mono, coeff in terms:
            _accumulate(acc, self.normalize(*mono)._terms, coeff)
        return HopfElement(self, acc)

    def normalize(self, a: int, b: int, c: int) -> "HopfElement":
        """Rewrite y^a g^b x^c into the basis.

        g-exponents reduce through g^n = x^w; y-exponents through
        y^n = 1 - x^w, expanding (1 - x^w)^q binomially (x is central).
        y is not invertible in B(n, w, gamma), so a must be >= 0.
        """
        if a < 0:
            raise ValueError("negative powers of y do not exist in B(n, w, gamma)")
        n, w = self.n, self.w
        qb, rb = divmod(b, n)
        c = c + w * qb
        qa, ra = divmod(a, n)
        if qa == 0:
            return HopfElement(self, {(ra, rb, c): self.field.one})
        terms: dict[Mono, Scalar] = {}
        for s in range(qa + 1):
            coeff = self.field.scalar(Fraction((-1) ** s * comb(qa, s)))
            terms[(ra, rb, c + w * s)] = coeff
        return HopfElement(self, terms)

    def _mono_mul(self, m1: Mono, m2: Mono) -> dict[Mono, Scalar]:
        """Basis-monomial product (y^a1 g^b1 x^c1)(y^a2 g^b2 x^c2).

        Moving y^a2 through g^b1 costs gamma^(-b1*a2); x is central so the
        x-offset is applied after the cached (a, b)-part.
        """
        a1, b1, c1 = m1
        a2, b2, c2 = m2
        key = (a1, b1, a2, b2)
        base = self._mono_cache.get(key)
        if base is None:
            twist = self.gamma_pow(-b1 * a2)
            base = {
                mono: coeff * twist
                for mono, coeff in self.normalize(a1 + a2, b1 + b2, 0)._terms.items()
            }
            self._mono_cache[key] = base
        shift = c1 + c2
        if shift == 0:
            return base
        return {(a, b, c + shift): coeff for (a, b, c), coeff in base.items()}

    # -- structure maps on powers of the generators --

    def _comul_y_power(self, a: int) -> "TensorElement":
        """(y (x) g + 1 (x) y)^a inside H (x) H, cached per exponent."""
        te = self._comul_y_cache.get(a)
        if te is None:
            if a == 0:
                te = TensorElement(self, 2, {((0, 0, 0), (0, 0, 0)): self.field.one})
            else:
                step = TensorElement(
                    self,
                    2,
                    {
                        ((1, 0, 0), (0, 1, 0)): self.field.one,
                        ((0, 0, 0), (1, 0, 0)): self.field.one,
                    },
                )
                te = self._comul_y_power(a - 1) * step
            self._comul_y_cache[a] = te
        return te


class HopfElement:
    """A finite Scalar-linear combination of basis monomials y^a g^b x^c."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: LiuAlgebra, terms: dict[Mono, Scalar]):
        self.algebra = algebra
        self._terms = {m: c for m, c in terms.items() if c}
        if len(self._terms) > algebra.max_terms:
            raise SupportLimitError(
                f"element support {len(self._terms)} exceeds the "
                f"configured limit {algebra.max_terms}"
            )

    @property
    def terms(self) -> dict[Mono, Scalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_same(self, other: "HopfElement"):
        if self.algebra != other.algebra:
            if self.algebra.field.conductor != other.algebra.field.conductor:
                raise ConductorError(
                    "HopfElements live in different conductors "
                    f"({self.algebra.field.conductor} vs {other.algebra.field.conductor})"
                )
            raise ValueError("HopfElements belong to different algebras")

    def __add__(self, other: "HopfElement") -> "HopfElement":
        self._check_same(other)
        acc = dict(self._terms)
        _accumulate(acc, other._terms, self.algebra.field.one)
        return HopfElement(self.algebra, acc)

    def __sub__(self, other: "HopfElement") -> "HopfElement":
        return self + (-other)

    def __neg__(self) -> "HopfElement":
        return HopfElement(self.algebra, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = self.algebra.field.scalar(other)
            return HopfElement(
                self.algebra, {m: v * c for m, v in self._terms.items()}
            )
        self._check_same(other)
        acc: dict[Mono, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                _accumulate(acc, self.algebra._mono_mul(m1, m2), c1 * c2)
        return HopfElement(self.algebra, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "HopfElement":
        if e < 0:
            raise ValueError("HopfElement powers must be non-negative")
        acc = self.algebra.one
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(sorted(self._terms.items(), key=lambda kv: kv[0]))))

    def __repr__(self) -> str:
        return f"HopfElement({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), coeff in sorted(self._terms.items()):
            factors = []
            if a:
                factors.append("y" if a == 1 else f"y^{a}")
            if b:
                factors.append("g" if b == 1 else f"g^{b}")
            if c:
                factors.append(f"x^{c}" if c != 1 else "x")
            mono = " ".join(factors) if factors else "1"
            cs = str(coeff)
            parts.append(mono if cs == "1" else f"({cs}) {mono}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [
            {"y": a, "g": b, "x": c, "coeff": coeff.to_json()}
            for (a, b, c), coeff in sorted(self._terms.items())
        ]

    @staticmethod
    def from_json(data: list, algebra: LiuAlgebra) -> "HopfElement":
        return algebra.element(
            (
                ((d["y"], d["g"], d["x"]), Scalar.from_json(d["coeff"], algebra.field))
                for d in data
            )
        )


class TensorElement:
    """An element of H^(x)d as a sparse map from monomial tuples to Scalars.

    Multiplication is componentwise in the ordinary tensor product algebra:
    (u1 (x) u2)(v1 (x) v2) = u1 v1 (x) u2 v2 with no braiding factor.
    """

    __slots__ = ("algebra", "degree", "_terms")

    def __init__(self, algebra: LiuAlgebra, degree: int, terms: dict[tuple, Scalar]):
        if degree < 2:
            raise ValueError("TensorElement degree must be >= 2")
        self.algebra = algebra
        self.degree = degree
        self._terms = {k: c for k, c in terms.items() if c}
        if len(self._terms) > algebra.max_terms:
            raise SupportLimitError(
                f"tensor support {len(self._terms)} exceeds the "
                f"configured limit {algebra.max_terms}"
            )

    @property
    def terms(self) -> dict[tuple, Scalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        assert self.degree == other.degree
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k)
            acc[k] = c if v is None else v + c
        return TensorElement(self.algebra, self.degree, acc)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, c: Union[int, Fraction, Scalar]) -> "TensorElement":
        c = self.algebra.field.scalar(c)
        return TensorElement(
            self.algebra, self.degree, {k: v * c for k, v in self._terms.items()}
        )

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        assert self.degree == other.degree
        alg = self.algebra
        acc: dict[tuple, Scalar] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                pieces = [alg._mono_mul(m1, m2) for m1, m2 in zip(k1, k2)]
                _expand_tensor(acc, pieces, c1 * c2)
        return TensorElement(alg, self.degree, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        if not self._terms:
            return "TensorElement(0)"
        parts = []
        for key, coeff in sorted(self._terms.items()):
            slots = " (x) ".join(
                str(HopfElement(self.algebra, {m: self.algebra.field.one}))
                for m in key
            )
            parts.append(f"({coeff}) {slots}")
        return " + ".join(parts)

    # -- slotwise structure maps --

    def comul_slot(self, idx: int) -> "TensorElement":
        """Apply Delta to one tensor slot, raising the degree by one."""
        acc: dict[tuple, Scalar] = {}
        for key, coeff in self._terms.items():
            dm = comul_monomial(self.algebra, key[idx])
            for (u, v), c in dm._terms.items():
                newkey = key[:idx] + (u, v) + key[idx + 1 :]
                prev = acc.get(newkey)
                add = coeff * c
                acc[newkey] = add if prev is None else prev + add
        return TensorElement(self.algebra, self.degree + 1, acc)

    def counit_slot(self, idx: int) -> Union["TensorElement", HopfElement]:
        """Apply eps to one slot, lowering the degree by one."""
        acc: dict = {}
        for key, coeff in self._terms.items():
            if key[idx][0] != 0:  # eps kills anything with a y factor
                continue
            newkey = key[:idx] + key[idx + 1 :]
            prev = acc.get(newkey)
            acc[newkey] = coeff if prev is None else prev + coeff
        if self.degree == 2:
            return HopfElement(self.algebra, {k[0]: c for k, c in acc.items()})
        return TensorElement(self.algebra, self.degree - 1, acc)

    def map_slot(self, idx: int, fn) -> "TensorElement":
        """Apply a linear map H -> H (given on monomials) to one slot."""
        acc: dict[tuple, Scalar] = {}
        for key, coeff in self._terms.items():
            img = fn(key[idx])
            for m, c in img._terms.items():
                newkey = key[:idx] + (m,) + key[idx + 1 :]
                prev = acc.get(newkey)
                add = coeff * c
                acc[newkey] = add if prev is None else prev + add
        return TensorElement(self.algebra, self.degree, acc)

    def multiply_out(self) -> HopfElement:
        """Fold a degree-2 tensor through the multiplication m: H(x)H -> H."""
        assert self.degree == 2
        alg = self.algebra
        acc: dict[Mono, Scalar] = {}
        for (u, v), coeff in self._terms.items():
            _accumulate(acc, alg._mono_mul(u, v), coeff)
        return HopfElement(alg, acc)


def _accumulate(acc: dict, terms: dict, coeff: Scalar):
    if not coeff:
        return
    for k, c in terms.items():
        prev = acc.get(k)
        add = c * coeff
        acc[k] = add if prev is None else prev + add


def _expand_tensor(acc: dict, pieces: list[dict], coeff: Scalar):
    """Accumulate the tensor product of per-slot term dicts into acc."""
    keys: list[Mono] = []

    def rec(slot: int, c: Scalar):
        if slot == len(pieces):
            k = tuple(keys)
            prev = acc.get(k)
            acc[k] = c if prev is None else prev + c
            return
        for m, v in pieces[slot].items():
            keys.append(m)
            rec(slot + 1, c * v)
            keys.pop()

    rec(0, coeff)


# -- the Hopf structure maps --


def comul_monomial(algebra: LiuAlgebra, mono: Mono) -> TensorElement:
    a, b, c = mono
    grouplike = TensorElement(
        algebra, 2, {((0, b, c), (0, b, c)): algebra.field.one}
    )
    if a == 0:
        return grouplike
    return algebra._comul_y_power(a) * grouplike


def comul(u: HopfElement) -> TensorElement:
    """Delta(u), computed by powering Delta(y) inside H (x) H."""
    alg = u.algebra
    acc: dict[tuple, Scalar] = {}
    for mono, coeff in u._terms.items():
        for key, c in comul_monomial(alg, mono)._terms.items():
            prev = acc.get(key)
            add = coeff * c
            acc[key] = add if prev is None else prev + add
    return TensorElement(alg, 2, acc)


def counit(u: HopfElement) -> Scalar:
    """eps(u): kills y, sends g and x to 1."""
    total = u.algebra.field.zero
    for (a, _b, _c), coeff in u._terms.items():
        if a == 0:
            total = total + coeff
    return total


def antipode_monomial(algebra: LiuAlgebra, mono: Mono) -> HopfElement:
    a, b, c = mono
    out = algebra.normalize(0, -b, -c)
    if a:
        sy = algebra.monomial(1, 0, 0) * algebra.normalize(0, -1, 0)
        sy = -sy  # S(y) = -y g^{-1}
        out = out * sy ** a
    return out


def antipode(u: HopfElement) -> HopfElement:
    """S(u): the anti-algebra map with S(x)=x^{-1}, S(g)=g^{-1}, S(y)=-yg^{-1}."""
    alg = u.algebra
    acc: dict[Mono, Scalar] = {}
    for mono, coeff in u._terms.items():
        _accumulate(acc, antipode_monomial(alg, mono)._terms, coeff)
    return HopfElement(alg, acc)


def hopf_axiom_check(u: HopfElement) -> "AxiomReport":
    """Exactly verify the Hopf axioms on u.

    Checks coassociativity, both counit identities, and both antipode
    convolution identities m(S (x) id)Delta(u) = eps(u) 1 = m(id (x) S)Delta(u).
    """
    alg = u.algebra
    failures = []
    d = comul(u)
    if d.comul_slot(0) != d.comul_slot(1):
        failures.append("coassociativity")
    if d.counit_slot(0) != u:
        failures.append("left counit")
    if d.counit_slot(1) != u:
        failures.append("right counit")
    target = alg.scalar(counit(u))
    left = d.map_slot(0, lambda m: antipode_monomial(alg, m)).multiply_out()
    if left != target:
        failures.append("left antipode convolution")
    right = d.map_slot(1, lambda m: antipode_monomial(alg, m)).multiply_out()
    if right != target:
        failures.append("right antipode convolution")
    return AxiomReport(tuple(failures))


class AxiomReport:
    __slots__ = ("failures",)

    def __init__(self, failures: tuple[str, ...]):
        self.failures = failures

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "pass" if self.ok else "fail: " + "; ".join(self.failures)
