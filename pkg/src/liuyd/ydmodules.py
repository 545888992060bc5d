"""Simple Yetter-Drinfeld modules V(alpha, beta, x^r g^i) over B(n, w, gamma).

The module of type (alpha, beta, x^r g^i) with alpha^w = beta^n has basis
v_0, ..., v_m where m = n - phi(-i-j) when beta = gamma^j and m = n - 1
otherwise.  The actions are

    x . v_k = alpha v_k,
    g . v_k = beta gamma^(-k) v_k,
    y . v_k = v_(k+1)  (k < m),   y . v_m = (1 - beta^n) v_0,

and the coaction is delta(v_k) = sum_l c(k, l) (x) v_l with the comatrix
coefficients of `coefficients`.  Every structural claim is machine-checked:
the module relations on action matrices, the comatrix axioms on the
coaction, and the Yetter-Drinfeld compatibility on generators x, g, y
(which suffices, since compatibility is multiplicative in h).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coefficients import CoeffContext, is_comatrix, phi_rep
from .liu import HopfElement, LiuAlgebra, TensorElement, antipode_monomial
from .scalars import Scalar

phi = phi_rep


@dataclass(frozen=True)
class ModuleParams:
    """A point of the parameter set: alpha, beta nonzero with alpha^w = beta^n."""

    liu: LiuAlgebra
    alpha: Scalar
    beta: Scalar
    r: int
    i: int

    def __post_init__(self):
        f = self.liu.field
        object.__setattr__(self, "alpha", f.scalar(self.alpha))
        object.__setattr__(self, "beta", f.scalar(self.beta))
        if self.alpha.is_zero() or self.beta.is_zero():
            raise ValueError("alpha and beta must be non-zero")
        if self.alpha ** self.liu.w != self.beta ** self.liu.n:
            raise ValueError(
                "invalid parameters: alpha^w != beta^n "
                f"(alpha={self.alpha}, beta={self.beta}, "
                f"w={self.liu.w}, n={self.liu.n})"
            )

    def coeff_context(self) -> CoeffContext:
        return CoeffContext(self.liu, self.beta, self.r, self.i)

    def canonical_grouplike(self) -> tuple[int, int]:
        return canonical_grouplike(self.r, self.i, self.liu)


def canonical_grouplike(r: int, i: int, liu: LiuAlgebra) -> tuple[int, int]:
    """Rewrite x^r g^i with the g-exponent in [0, n) using g^n = x^w."""
    n, w = liu.n, liu.w
    return (r + w * (i // n), i % n)


def module_dim(params: ModuleParams) -> int:
    """m + 1, with m = n - phi(-i-j) in the root case and n - 1 otherwise."""
    ctx = params.coeff_context()
    return ctx.boundary_index() + 1


@dataclass
class YDModule:
    """Concrete module/comodule data over a fixed B(n, w, gamma).

    x and g act diagonally; y acts by the matrix y_mat with
    (y . v_k) = sum_j y_mat[j][k] v_j; the coaction row k lists the
    HopfElement coefficients of v_0 ... v_k.
    """

    liu: LiuAlgebra
    dim: int
    x_diag: list[Scalar]
    g_diag: list[Scalar]
    y_mat: list[list[Scalar]]
    coaction: list[list[HopfElement]]
    params: Optional[ModuleParams] = field(default=None, repr=False)

    def coaction_entry(self, k: int, l: int) -> HopfElement:
        row = self.coaction[k]
        return row[l] if l < len(row) else self.liu.zero()

    def act_generator(self, gen: str, vec: list[Scalar], power: int = 1) -> list[Scalar]:
        """Apply x^power, g^power or y^power to a coefficient vector."""
        f = self.liu.field
        if gen == "x":
            return [c * self.x_diag[k] ** power for k, c in enumerate(vec)]
        if gen == "g":
            return [c * self.g_diag[k] ** power for k, c in enumerate(vec)]
        if gen != "y":
            raise ValueError(f"unknown generator {gen!r}")
        if power < 0:
            raise ValueError("y does not act invertibly")
        for _ in range(power):
            out = [f.zero] * self.dim
            for k, c in enumerate(vec):
                if c.is_zero():
                    continue
                for j in range(self.dim):
                    m = self.y_mat[j][k]
                    if not m.is_zero():
                        out[j] = out[j] + m * c
            vec = out
        return vec

    def act(self, h: HopfElement, vec: list[Scalar]) -> list[Scalar]:
        """Action of an arbitrary HopfElement through the generator matrices."""
        f = self.liu.field
        out = [f.zero] * self.dim
        for (a, b, c), coeff in h.terms.items():
            cur = self.act_generator("x", vec, c)
            cur = self.act_generator("g", cur, b)
            cur = self.act_generator("y", cur, a)
            for j in range(self.dim):
                if not cur[j].is_zero():
                    out[j] = out[j] + coeff * cur[j]
        return out

    def basis_vector(self, k: int) -> list[Scalar]:
        f = self.liu.field
        return [f.one if j == k else f.zero for j in range(self.dim)]

    def delta(self, vec: list[Scalar]) -> dict:
        """The coaction of a vector as a sparse map (monomial, index) -> Scalar."""
        out: dict = {}
        for k, c in enumerate(vec):
            if c.is_zero():
                continue
            for l in range(k + 1):
                e = self.coaction_entry(k, l)
                for mono, cc in e.terms.items():
                    key = (mono, l)
                    add = c * cc
                    prev = out.get(key)
                    val = add if prev is None else prev + add
                    if val.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = val
        return out

    def to_json(self) -> dict:
        return {
            "n": self.liu.n,
            "w": self.liu.w,
            "conductor": self.liu.field.conductor,
            "gamma": self.liu.gamma.to_json(),
            "dim": self.dim,
            "x_diag": [s.to_json() for s in self.x_diag],
            "g_diag": [s.to_json() for s in self.g_diag],
            "y_mat": [[s.to_json() for s in row] for row in self.y_mat],
            "coaction": [[e.to_json() for e in row] for row in self.coaction],
        }

    @staticmethod
    def from_json(data: dict, liu: Optional[LiuAlgebra] = None) -> "YDModule":
        if liu is None:
            from .scalars import CycloField

            f = CycloField(data["conductor"])
            liu = LiuAlgebra(data["n"], data["w"], Scalar.from_json(data["gamma"], f))
        f = liu.field
        return YDModule(
            liu=liu,
            dim=data["dim"],
            x_diag=[Scalar.from_json(s, f) for s in data["x_diag"]],
            g_diag=[Scalar.from_json(s, f) for s in data["g_diag"]],
            y_mat=[[Scalar.from_json(s, f) for s in row] for row in data["y_mat"]],
            coaction=[
                [HopfElement.from_json(e, liu) for e in row] for row in data["coaction"]
            ],
        )


def construct(params: ModuleParams) -> YDModule:
    """Build V(alpha, beta, x^r g^i); v_0 is a standard element of that type."""
    liu = params.liu
    f = liu.field
    ctx = params.coeff_context()
    m = ctx.boundary_index()
    dim = m + 1
    x_diag = [params.alpha] * dim
    g_diag = [params.beta * liu.gamma_pow(-k) for k in range(dim)]
    zero = f.zero
    y_mat = [[zero] * dim for _ in range(dim)]
    for k in range(m):
        y_mat[k + 1][k] = f.one
    wrap = f.one - params.beta ** liu.n
    y_mat[0][m] = y_mat[0][m] + wrap
    coaction = [[ctx.c_coeff(k, l) for l in range(k + 1)] for k in range(dim)]
    return YDModule(liu, dim, x_diag, g_diag, y_mat, coaction, params)


# -- verification --


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "pass" if self.ok else "fail: " + "; ".join(self.failures)


def _mat_mul(f, A, B):
    n = len(A)
    return [
        [sum((A[i][k] * B[k][j] for k in range(n)), f.zero) for j in range(n)]
        for i in range(n)
    ]


def _diag_mat(f, diag):
    n = len(diag)
    return [[diag[i] if i == j else f.zero for j in range(n)] for i in range(n)]


def verify_module(V: YDModule) -> CheckReport:
    """Check the defining relations of B(n, w, gamma) on the action matrices."""
    liu = V.liu
    f = liu.field
    failures = []
    X = _diag_mat(f, V.x_diag)
    G = _diag_mat(f, V.g_diag)
    Y = V.y_mat
    if any(d.is_zero() for d in V.x_diag):
        failures.append("x acts non-invertibly")
    if _mat_mul(f, X, G) != _mat_mul(f, G, X):
        failures.append("relation xg = gx")
    if _mat_mul(f, X, Y) != _mat_mul(f, Y, X):
        failures.append("relation xy = yx")
    GY = _mat_mul(f, G, Y)
    YG = _mat_mul(f, Y, G)
    if YG != [[liu.gamma * c for c in row] for row in GY]:
        failures.append("relation yg = gamma gy")
    Yn = _diag_mat(f, [f.one] * V.dim)
    for _ in range(liu.n):
        Yn = _mat_mul(f, Yn, Y)
    Xw = _diag_mat(f, [d ** liu.w for d in V.x_diag])
    I = _diag_mat(f, [f.one] * V.dim)
    if Yn != [[I[i][j] - Xw[i][j] for j in range(V.dim)] for i in range(V.dim)]:
        failures.append("relation y^n = 1 - x^w")
    Gn = _diag_mat(f, [d ** liu.n for d in V.g_diag])
    if Gn != Xw:
        failures.append("relation g^n = x^w")
    return CheckReport(not failures, tuple(failures))


def verify_comodule(V: YDModule) -> CheckReport:
    """Comatrix axioms on the coaction table plus the counit axiom."""
    from .coefficients import ComatrixData

    liu = V.liu
    zero = liu.zero()
    entries = [
        [V.coaction_entry(k, l) if l <= k else zero for l in range(V.dim)]
        for k in range(V.dim)
    ]
    rep = is_comatrix(ComatrixData(liu, V.dim - 1, entries))
    failures = [f"comatrix {kind} at ({k}, {l})" for kind, k, l in rep.failures]
    # (eps (x) id) delta = id on each basis vector
    from .liu import counit as eps

    f = liu.field
    for k in range(V.dim):
        got = [f.zero] * V.dim
        for l in range(k + 1):
            got[l] = got[l] + eps(V.coaction_entry(k, l))
        want = V.basis_vector(k)
        if got != want:
            failures.append(f"counit axiom on v_{k}")
    return CheckReport(not failures, tuple(failures))


def verify_compatibility(V: YDModule, paranoid: bool = False) -> CheckReport:
    """Yetter-Drinfeld compatibility delta(h.v) = h1 v(-1) S(h3) (x) h2 . v(0).

    Checked exactly for every generator h in {x, g, y} against every basis
    vector; by multiplicativity of the condition this suffices.  With
    paranoid=True the degree-2 products yg, yx, gx are checked as well.
    """
    liu = V.liu
    gens = {"x": liu.x, "g": liu.g, "y": liu.y}
    if paranoid:
        gens["yg"] = liu.y * liu.g
        gens["yx"] = liu.y * liu.x
        gens["gx"] = liu.g * liu.x
    failures = []
    for name, h in gens.items():
        for k in range(V.dim):
            if not _compatible_on(V, h, k):
                failures.append(f"h = {name} on v_{k}")
    return CheckReport(not failures, tuple(failures))


def _compatible_on(V: YDModule, h: HopfElement, k: int) -> bool:
    liu = V.liu
    f = liu.field
    lhs = V.delta(V.act(h, V.basis_vector(k)))
    # Delta^2(h) = (Delta (x) id) Delta(h), then pair with delta(v_k)
    from .liu import comul

    d2 = comul(h).comul_slot(0)
    rhs: dict = {}
    for (h1, h2, h3), ch in d2.terms.items():
        sh3 = antipode_monomial(liu, h3)
        for l in range(k + 1):
            cmid = V.coaction_entry(k, l)
            if cmid.is_zero():
                continue
            left = HopfElement(liu, {h1: f.one}) * cmid * sh3
            acted = V.act(HopfElement(liu, {h2: f.one}), V.basis_vector(l))
            for mono, c1 in left.terms.items():
                for j, c2 in enumerate(acted):
                    if c2.is_zero():
                        continue
                    key = (mono, j)
                    add = ch * c1 * c2
                    prev = rhs.get(key)
                    val = add if prev is None else prev + add
                    if val.is_zero():
                        rhs.pop(key, None)
                    else:
                        rhs[key] = val
    return lhs == rhs


# -- standard elements and isomorphism --


@dataclass(frozen=True)
class StandardElementReport:
    """A ray of standard elements: joint (x, g)-eigenvectors with group-like coaction."""

    vector: tuple[Scalar, ...]
    alpha: Scalar
    beta: Scalar
    grouplike: tuple[int, int]  # canonical (r', i') with x^r' g^i'


def find_standard_elements(V: YDModule) -> list[StandardElementReport]:
    """All rays of standard elements of V.

    A standard element is a joint eigenvector of the x and g actions whose
    coaction is group-like.  Candidate group-likes are read off the diagonal
    coaction entries; for each one the linear system delta(v) = h (x) v is
    solved exactly and intersected with the joint eigenspaces.
    """
    liu = V.liu
    f = liu.field
    reports: list[StandardElementReport] = []
    seen: set = set()
    candidates = []
    for k in range(V.dim):
        e = V.coaction_entry(k, k)
        terms = e.terms
        if len(terms) != 1:
            continue
        (mono, coeff), = terms.items()
        if mono[0] == 0 and coeff.is_one() and mono not in seen:
            seen.add(mono)
            candidates.append(mono)
    for mono in candidates:
        h = HopfElement(liu, {mono: f.one})
        # unknowns u_0..u_{dim-1}; equations: sum_k u_k c(k,l) = u_l h for all l
        rows: list[list[Scalar]] = []
        monos = set()
        for k in range(V.dim):
            for l in range(k + 1):
                monos.update(V.coaction_entry(k, l).terms)
        monos.add(mono)
        for l in range(V.dim):
            for mu in sorted(monos):
                row = [f.zero] * V.dim
                for k in range(l, V.dim):
                    c = V.coaction_entry(k, l).terms.get(mu)
                    if c is not None:
                        row[k] = row[k] + c
                if mu == mono:
                    row[l] = row[l] - f.one
                if any(row):
                    rows.append(row)
        kernel = _kernel(f, rows, V.dim)
        for vec in kernel:
            vec = _restrict_to_joint_eigenvector(V, vec)
            if vec is None:
                continue
            support = [k for k, c in enumerate(vec) if not c.is_zero()]
            key = tuple(support)
            alpha = V.x_diag[support[0]]
            beta = V.g_diag[support[0]]
            gl = canonical_grouplike(mono[2], mono[1], liu)
            rep = StandardElementReport(tuple(vec), alpha, beta, gl)
            if all(r.vector != rep.vector for r in reports):
                reports.append(rep)
    return reports


def _restrict_to_joint_eigenvector(V: YDModule, vec: list[Scalar]):
    support = [k for k, c in enumerate(vec) if not c.is_zero()]
    if not support:
        return None
    a0 = V.x_diag[support[0]]
    b0 = V.g_diag[support[0]]
    for k in support[1:]:
        if V.x_diag[k] != a0 or V.g_diag[k] != b0:
            return None
    # scale so the first supported coordinate is 1 (one report per ray)
    inv = vec[support[0]].inv()
    return [c * inv for c in vec]


def _kernel(f, rows: list[list[Scalar]], width: int) -> list[list[Scalar]]:
    """Basis of the right kernel of the row system, by exact elimination."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(width):
        piv = None
        for rr in range(r, len(mat)):
            if not mat[rr][col].is_zero():
                piv = rr
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inv()
        mat[r] = [c * inv for c in mat[r]]
        for rr in range(len(mat)):
            if rr != r and not mat[rr][col].is_zero():
                factor = mat[rr][col]
                mat[rr] = [a - factor * b for a, b in zip(mat[rr], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [f.zero] * width
        vec[fc] = f.one
        for rr, pc in enumerate(pivots):
            vec[pc] = -mat[rr][fc]
        basis.append(vec)
    return basis


def direct_sum(V1: YDModule, V2: YDModule) -> YDModule:
    """Block-diagonal sum, used to exercise multi-ray standard-element search."""
    if V1.liu != V2.liu:
        raise ValueError("direct sum requires the same Hopf algebra")
    f = V1.liu.field
    dim = V1.dim + V2.dim
    zero = f.zero
    y_mat = [[zero] * dim for _ in range(dim)]
    for i in range(V1.dim):
        for j in range(V1.dim):
            y_mat[i][j] = V1.y_mat[i][j]
    for i in range(V2.dim):
        for j in range(V2.dim):
            y_mat[V1.dim + i][V1.dim + j] = V2.y_mat[i][j]
    coaction = [row[:] for row in V1.coaction]
    for k in range(V2.dim):
        row = [V1.liu.zero()] * V1.dim + list(V2.coaction[k])
        coaction.append(row)
    return YDModule(
        V1.liu,
        dim,
        V1.x_diag + V2.x_diag,
        V1.g_diag + V2.g_diag,
        y_mat,
        coaction,
    )


def is_isomorphic(p1: ModuleParams, p2: ModuleParams) -> bool:
    """V(alpha, beta, x^r g^i) ~ V(alpha', beta', x^r' g^i') iff the types agree.

    The group-like is compared canonically through g^n = x^w.
    """
    if p1.liu != p2.liu:
        return False
    return (
        p1.alpha == p2.alpha
        and p1.beta == p2.beta
        and p1.canonical_grouplike() == p2.canonical_grouplike()
    )
