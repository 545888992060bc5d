"""Exact arithmetic in Q(zeta_N)(t).

Ground field for the whole toolkit: the N-th cyclotomic field extended by a
single transcendental t, with all coefficients arbitrary-precision rationals.
Every value is an immutable, canonically reduced fraction of polynomials in t
whose coefficients are cyclotomic numbers in the power basis
zeta^0, ..., zeta^(phi(N)-1) reduced mod the N-th cyclotomic polynomial.
Equality of canonical forms is exact equality in the field; there is no
floating point anywhere.

A `CycloField` plays the role of the session conductor: it fixes N once and
hosts every root of unity whose order divides lcm(2, N).  Asking for a root
outside that group raises `ConductorError` instead of silently coercing.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Union

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ConductorError(ValueError):
    """A root of unity outside the session's cyclotomic field was requested."""


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial.

    Computed by exact division: Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d.
    """
    num = [_ZERO] * (n + 1)
    num[0], num[n] = Fraction(-1), _ONE
    for d in _divisors(n):
        if d == n:
            continue
        num = _polydiv_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _polydiv_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact division of rational-coefficient polynomials (remainder must vanish)."""
    num = list(num)
    out = [_ZERO] * (len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for k in range(len(out) - 1, -1, -1):
        q = num[k + len(den) - 1] * inv_lead
        out[k] = q
        if q:
            for j, c in enumerate(den):
                num[k + j] -= q * c
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


class CycloField:
    """The field Q(zeta_N)(t); acts as the session conductor.

    Cyclotomic numbers are tuples of Fractions of length phi(N); polynomials
    in t are tuples of those; a Scalar is a reduced num/den pair of such
    polynomials with monic denominator.
    """

    def __init__(self, conductor: int):
        if conductor < 1:
            raise ValueError(f"conductor must be >= 1, got {conductor}")
        self.conductor = conductor
        phi = cyclotomic_polynomial(conductor)
        self.degree = len(phi) - 1
        self._phi = phi
        # reduction table: zeta^(degree+j) as a power-basis vector
        self._red: list[tuple[Fraction, ...]] = []
        top = tuple(-c for c in phi[:-1])  # zeta^degree
        self._red.append(top)
        for _ in range(self.degree - 2):
            prev = self._red[-1]
            shifted = [_ZERO] + list(prev[:-1])
            if prev[-1]:
                shifted = [s + prev[-1] * c for s, c in zip(shifted, top)]
            self._red.append(tuple(shifted))
        self._czero = (_ZERO,) * self.degree
        self._cone = (_ONE,) + (_ZERO,) * (self.degree - 1)
        self.zero = Scalar(self, (), (self._cone,))
        self.one = Scalar(self, (self._cone,), (self._cone,))
        self.t = Scalar(self, (self._czero, self._cone), (self._cone,))
        self._root_cache: dict[tuple[int, int], Scalar] = {}

    def __repr__(self) -> str:
        return f"CycloField({self.conductor})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and other.conductor == self.conductor

    def __hash__(self) -> int:
        return hash(("CycloField", self.conductor))

    # -- cyclotomic coefficient arithmetic (power-basis vectors) --

    def _cadd(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _csub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def _cneg(self, a):
        return tuple(-x for x in a)

    def _cmul(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [_ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for j in range(d, 2 * d - 1):
            c = conv[j]
            if c:
                red = self._red[j - d]
                for k in range(d):
                    if red[k]:
                        out[k] += c * red[k]
        return tuple(out)

    def _cscale(self, a, r: Fraction):
        return tuple(x * r for x in a)

    def _cinv(self, a):
        """Inverse in Q[x]/Phi_N via the extended Euclidean algorithm."""
        if not any(a):
            raise ZeroDivisionError("cyclotomic division by zero")
        r0, r1 = list(self._phi), list(a)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                vec = [c * inv for c in s1] + [_ZERO] * self.degree
                return tuple(vec[: self.degree])
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))

    def _cdiv(self, a, b):
        return self._cmul(a, self._cinv(b))

    def _crat(self, r: Union[int, Fraction]):
        return (Fraction(r),) + (_ZERO,) * (self.degree - 1)

    # -- element constructors --

    def scalar(self, value: Union[int, Fraction, "Scalar"]) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self and value.field != self:
                raise ConductorError(
                    f"cannot mix conductors {value.field.conductor} and {self.conductor}"
                )
            return value
        c = self._crat(value)
        if not any(c):
            return self.zero
        return Scalar(self, (c,), (self._cone,))

    def from_cyclo(self, coeffs: Iterable[Union[int, Fraction]]) -> "Scalar":
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        vec += [_ZERO] * (self.degree - len(vec))
        c = tuple(vec)
        if not any(c):
            return self.zero
        return Scalar(self, (c,), (self._cone,))

    def zeta(self, power: int = 1) -> "Scalar":
        """zeta_N^power in canonical form."""
        return self.root(self.conductor, power)

    def root(self, order: int, power: int = 1) -> "Scalar":
        """The root of unity zeta_order^power, if it lives in this field.

        Q(zeta_N) contains exactly the roots of unity of order dividing
        lcm(2, N); anything else raises ConductorError naming the order.
        """
        if order < 1:
            raise ValueError(f"root order must be positive, got {order}")
        power %= order
        key = (order, power)
        cached = self._root_cache.get(key)
        if cached is not None:
            return cached
        N = self.conductor
        if N % order == 0:
            val = self._zeta_pow(power * (N // order))
        elif N % 2 == 1 and (2 * N) % order == 0:
            # zeta_{2N} = -zeta_N^{(N+1)/2}; reach even orders inside an odd field
            e = power * (2 * N // order)
            val = self._zeta_pow(e * ((N + 1) // 2) % N)
            if e % 2 == 1:
                val = -val
        else:
            raise ConductorError(
                f"a root of unity of order {order} does not exist in "
                f"Q(zeta_{N}): {order} does not divide lcm(2, {N})"
            )
        self._root_cache[key] = val
        return val

    def _zeta_pow(self, e: int) -> "Scalar":
        e %= self.conductor
        d = self.degree
        if e < d:
            vec = [_ZERO] * d
            vec[e] = _ONE
            return Scalar(self, (tuple(vec),), (self._cone,))
        if d == 1:
            zvec = (-self._phi[0],)  # N = 1 or 2: zeta is rational
        else:
            vec = [_ZERO] * d
            vec[1] = _ONE
            zvec = tuple(vec)
        acc = self._cone
        for bit in bin(e)[2:]:
            acc = self._cmul(acc, acc)
            if bit == "1":
                acc = self._cmul(acc, zvec)
        return Scalar(self, (acc,), (self._cone,)) if any(acc) else self.zero

    @property
    def root_group_order(self) -> int:
        return lcm(2, self.conductor)

    def roots_of_order(self, order: int) -> list["Scalar"]:
        """All primitive order-th roots of unity in this field."""
        return [self.root(order, k) for k in range(order) if gcd(k, order) == 1]


# -- dense polynomial helpers over rational-coefficient vectors --


def _polydivmod(a: list, b: list):
    while b and not _is_nonzero_rat(b[-1]):
        b = b[:-1]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    if len(a) < len(b):
        return [], a
    inv = 1 / b[-1]
    q = [_ZERO] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, bc in enumerate(b):
                a[k + j] -= c * bc
    return q, a[: len(b) - 1]


def _is_nonzero_rat(c) -> bool:
    return c != 0


def _polymul(a: list, b: list) -> list:
    out = [_ZERO] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _polysub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


class Scalar:
    """An element of Q(zeta_N)(t), immutable and canonically reduced.

    num/den are tuples of cyclotomic coefficient vectors indexed by t-power;
    den is monic and coprime to num, so identical tuples <=> equal values.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CycloField, num, den, _canonical: bool = True):
        self.field = field
        if not _canonical:
            num, den = _canonicalize(field, num, den)
        self.num = num
        self.den = den
        self._hash: Optional[int] = None

    # -- predicates --

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self == self.field.one

    def is_constant(self) -> bool:
        """True when the value is free of t (lies in Q(zeta_N))."""
        return len(self.num) <= 1 and len(self.den) == 1

    def is_rational(self) -> bool:
        return self.is_constant() and (
            self.is_zero() or not any(self.num[0][1:])
        )

    # -- arithmetic --

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field.conductor != self.field.conductor:
                raise ConductorError(
                    f"cannot mix conductors {self.field.conductor} "
                    f"and {other.field.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        num = _pl_add(f, _pl_mul(f, self.num, o.den), _pl_mul(f, o.num, self.den))
        den = _pl_mul(f, self.den, o.den)
        return Scalar(f, num, den, _canonical=False)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(self.field._cneg(c) for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        if self.is_zero() or o.is_zero():
            return f.zero
        num = _pl_mul(f, self.num, o.num)
        den = _pl_mul(f, self.den, o.den)
        return Scalar(f, num, den, _canonical=False)

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)(t)")
        return Scalar(self.field, self.den, self.num, _canonical=False)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int) -> "Scalar":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        acc, base = self.field.one, self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.field.conductor == other.field.conductor
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.conductor, self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- display / serialization --

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        num = _pl_str(self.field, self.num)
        if self.den == (self.field._cone,):
            return num
        return f"({num})/({_pl_str(self.field, self.den)})"

    def to_json(self) -> dict:
        return {
            "conductor": self.field.conductor,
            "num": [[str(c) for c in vec] for vec in self.num],
            "den": [[str(c) for c in vec] for vec in self.den],
        }

    @staticmethod
    def from_json(data: dict, field: Optional[CycloField] = None) -> "Scalar":
        f = field if field is not None else CycloField(data["conductor"])
        if f.conductor != data["conductor"]:
            raise ConductorError(
                f"serialized conductor {data['conductor']} != session {f.conductor}"
            )

        def vecs(key):
            return tuple(
                tuple(Fraction(c) for c in vec) for vec in data[key]
            )

        return Scalar(f, vecs("num"), vecs("den"), _canonical=False)


# -- polynomial layer over cyclotomic vectors (tuples, low-to-high t powers) --


def _pl_trim(poly):
    poly = list(poly)
    while poly and not any(poly[-1]):
        poly.pop()
    return tuple(poly)


def _pl_add(f: CycloField, a, b):
    n = max(len(a), len(b))
    zero = f._czero
    a = tuple(a) + (zero,) * (n - len(a))
    b = tuple(b) + (zero,) * (n - len(b))
    return _pl_trim(f._cadd(x, y) for x, y in zip(a, b))


def _pl_mul(f: CycloField, a, b):
    if not a or not b:
        return ()
    out = [f._czero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if any(x):
            for j, y in enumerate(b):
                if any(y):
                    out[i + j] = f._cadd(out[i + j], f._cmul(x, y))
    return _pl_trim(out)


def _pl_scale(f: CycloField, a, c):
    return _pl_trim(f._cmul(x, c) for x in a)


def _pl_divmod(f: CycloField, a, b):
    a, b = list(a), _pl_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), _pl_trim(a)
    inv = f._cinv(b[-1])
    q = [f._czero] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = f._cmul(a[k + len(b) - 1], inv)
        q[k] = c
        if any(c):
            for j, bc in enumerate(b):
                a[k + j] = f._csub(a[k + j], f._cmul(c, bc))
    return _pl_trim(q), _pl_trim(a[: len(b) - 1])


def _pl_gcd(f: CycloField, a, b):
    a, b = _pl_trim(a), _pl_trim(b)
    while b:
        _, r = _pl_divmod(f, a, b)
        a, b = b, r
    if a:
        a = _pl_scale(f, a, f._cinv(a[-1]))
    return a


def _canonicalize(f: CycloField, num, den):
    num, den = _pl_trim(num), _pl_trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator in Q(zeta_N)(t)")
    if not num:
        return (), (f._cone,)
    if len(den) == 1:
        # unit denominator: no gcd needed, just make it 1
        if den[0] != f._cone:
            num = _pl_scale(f, num, f._cinv(den[0]))
        return num, (f._cone,)
    g = _pl_gcd(f, num, den)
    if len(g) > 1:
        num, _ = _pl_divmod(f, num, g)
        den, _ = _pl_divmod(f, den, g)
    lead = den[-1]
    if lead != f._cone:
        inv = f._cinv(lead)
        num = _pl_scale(f, num, inv)
        den = _pl_scale(f, den, inv)
    return num, den


def _pl_str(f: CycloField, poly) -> str:
    if not poly:
        return "0"
    parts = []
    for j, vec in enumerate(poly):
        if not any(vec):
            continue
        cy = _cyclo_str(vec)
        if j == 0:
            parts.append(cy)
        else:
            tp = "t" if j == 1 else f"t^{j}"
            parts.append(tp if cy == "1" else f"({cy})*{tp}")
    return " + ".join(parts)


def _cyclo_str(vec) -> str:
    terms = []
    for k, c in enumerate(vec):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            zp = "z" if k == 1 else f"z^{k}"
            terms.append(zp if c == 1 else f"-{zp}" if c == -1 else f"{c}*{zp}")
    return " + ".join(terms) if terms else "0"


# -- module-level operations of the public surface --


def root(order: int, power: int = 0) -> Scalar:
    """zeta_order^power in the field Q(zeta_order)."""
    return CycloField(order).root(order, power)


def root_order(s: Scalar) -> Optional[int]:
    """Least m >= 1 with s^m = 1, or None if s is not a root of unity.

    Transcendental values (anything involving t) are never roots of unity;
    constants are tested against every divisor of lcm(2, N).
    """
    if s.is_zero():
        raise ZeroDivisionError("root_order of zero")
    if not s.is_constant():
        return None
    L = s.field.root_group_order
    one = s.field.one
    for m in _divisors(L):
        if s ** m == one:
            return m
    return None


def q_binomial(k: int, p: int, q: Scalar) -> Scalar:
    """Gaussian binomial binom(k, p)_q via the division-free q-Pascal recursion.

    binom(k,p)_q = binom(k-1,p)_q + q^(k-p) * binom(k-1,p-1)_q, so the result
    is well defined at roots of unity.
    """
    if p < 0 or p > k:
        raise ValueError(f"q_binomial requires 0 <= p <= k, got p={p}, k={k}")
    f = q.field
    row = [f.one]
    for kk in range(1, k + 1):
        new = [f.one]
        for pp in range(1, kk):
            new.append(row[pp] + (q ** (kk - pp)) * row[pp - 1])
        new.append(f.one)
        row = new
    return row[p]
