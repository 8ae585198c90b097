"""Two-generated metabelian p-groups as derived-subgroup modules.

A group G = <x, y> with elementary abelian G/G' of rank 2 is modelled
through its commutator subgroup only: G' is presented additively as
Z^symbols modulo a relation lattice, together with the two commuting
matrices Mx, My giving conjugation by x and y.  The main commutator
s2 = [y, x] is a distinguished vector, and the evaluation map

    psi(f) = f(Mx - 1, My - 1) applied to s2

sends a polynomial to the group element with that symbolic exponent.
Its kernel is the annihilator ideal of the group; membership of psi(f)
in the relation lattice is therefore an independent oracle for ideal
membership, used to cross-check the quotient-ring engine.

Two presentation schemes are supported: maximal class for arbitrary
primes (commutator chain s_j with parameters w, z and an a-vector), and
the non-maximal-class scheme for p = 3 (four commutator chains s, t,
sigma, tau with parameters alpha..rho).  In both, symbol indices are
padded two places past their cutoffs so every relation template can be
instantiated without case analysis; references beyond the padded range
are legitimately zero because the cutoff relations annihilate them.

A parameter tuple is accepted as presenting a group of order p^n only
if the module has order p^(n-2) *and* the iterated images of s2 span
it.  The second condition is what distinguishes genuine presentations:
for a group, the main commutator's closure under conjugation is all of
G', while counterfeit parameter tuples can satisfy the order check yet
leave a proper submodule.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bipoly import BiPoly, Monomial, format_poly, is_prime, trace_poly_x, trace_poly_y
from .quotient import QuotientModel, build_quotient_cached
from .reports import FAIL, PASS, VerificationReport
from .zlinalg import AbelianType, IntMat, Lattice


class InvalidParameters(ValueError):
    """Parameter tuple outside the presentation scheme's domain."""


class InconsistentPresentation(Exception):
    """Relations do not present a group of the demanded order."""

    def __init__(self, message: str, computed_order=None):
        super().__init__(message)
        self.computed_order = computed_order


SMALL = (-1, 0, 1)


@dataclass(frozen=True)
class MaxClassParams:
    """Maximal-class presentation data: prime p, nilpotency index m,
    defect k with commutator parameters a = (a(m-1), ..., a(m-k)),
    and power parameters w, z in 0..p-1."""

    p: int
    m: int
    k: int = 0
    w: int = 0
    z: int = 0
    a_vector: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidParameters(f"p={self.p} is not prime")
        if self.m < 3:
            raise InvalidParameters(f"m={self.m} < 3")
        if not (0 <= self.w < self.p and 0 <= self.z < self.p):
            raise InvalidParameters(f"w, z must lie in 0..{self.p - 1}")
        if self.k != len(self.a_vector):
            raise InvalidParameters("a_vector length must equal the defect k")
        if self.m <= 4:
            limit = 0
        else:
            limit = self.m - 4
            if self.m >= self.p + 1:
                limit = min(limit, self.p - 2)
        if not (0 <= self.k <= limit):
            raise InvalidParameters(f"defect k={self.k} outside 0..{limit} for p={self.p}, m={self.m}")
        if any(not (0 <= a < self.p) for a in self.a_vector):
            raise InvalidParameters("a-vector entries must lie in 0..p-1")
        if self.k and self.a_vector[-1] == 0:
            raise InvalidParameters("a(m-k) must be non-zero when k > 0")

    @staticmethod
    def from_nebelung(m: int, alpha: int, beta: int, gamma: int) -> "MaxClassParams":
        """p = 3 parameters (alpha, beta, gamma) mapped to (w, z, a(m-1))."""
        g = gamma % 3
        return MaxClassParams(
            p=3, m=m, k=1 if g else 0, w=alpha % 3, z=beta % 3,
            a_vector=(g,) if g else (),
        )

    @property
    def n(self) -> int:
        return self.m

    def label(self) -> str:
        return f"max p={self.p} m={self.m} k={self.k} w={self.w} z={self.z} a={','.join(map(str, self.a_vector)) or '-'}"


@dataclass(frozen=True)
class NonMaxParams:
    """Non-maximal-class presentation data for p = 3: nilpotency index m,
    logarithmic order n, and the five relational parameters in {-1,0,1}."""

    m: int
    n: int
    alpha: int
    beta: int
    gamma: int
    delta: int
    rho: int

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "rho"):
            if getattr(self, name) not in SMALL:
                raise InvalidParameters(f"{name} must be in -1..1")
        if not (4 <= self.m < self.n <= 2 * self.m - 3):
            raise InvalidParameters(f"need 4 <= m < n <= 2m-3, got m={self.m}, n={self.n}")
        if self.rho and self.m < 5:
            raise InvalidParameters("rho != 0 requires m >= 5")

    @property
    def e(self) -> int:
        return self.n - self.m + 2

    @property
    def k(self) -> int:
        return 1 if self.rho else 0

    @property
    def coclass(self) -> int:
        return self.e - 1

    def label(self) -> str:
        return (
            f"nonmax m={self.m} n={self.n} alpha={self.alpha} beta={self.beta} "
            f"gamma={self.gamma} delta={self.delta} rho={self.rho}"
        )


@dataclass
class GroupModel:
    """Derived subgroup Z^symbols / relations with conjugation actions."""

    params: MaxClassParams | NonMaxParams
    symbols: tuple[str, ...]
    relations: Lattice
    Mx: IntMat
    My: IntMat
    s2_vec: list[int]
    xp_vec: list[int]
    yp_vec: list[int]
    order: int
    derived_type: AbelianType
    _psi_cache: dict = field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.params.p if isinstance(self.params, MaxClassParams) else 3

    @property
    def n(self) -> int:
        return self.params.n

    def psi_mono(self, i: int, j: int) -> list[int]:
        """(Mx - 1)^i (My - 1)^j applied to the main commutator."""
        cached = self._psi_cache.get((i, j))
        if cached is not None:
            return cached
        if i == 0 and j == 0:
            vec = self.s2_vec[:]
        elif i > 0:
            prev = self.psi_mono(i - 1, j)
            vec = [a - b for a, b in zip(self.Mx.apply(prev), prev)]
        else:
            prev = self.psi_mono(0, j - 1)
            vec = [a - b for a, b in zip(self.My.apply(prev), prev)]
        self._psi_cache[(i, j)] = vec
        return vec

    def psi(self, f: BiPoly) -> list[int]:
        vec = [0] * len(self.symbols)
        for mono, coeff in f.terms():
            img = self.psi_mono(mono.i, mono.j)
            for r in range(len(vec)):
                if img[r]:
                    vec[r] += coeff * img[r]
        return vec

    def annihilator_contains(self, f: BiPoly) -> bool:
        """Independent kernel oracle: true iff psi(f) dies in G'."""
        return self.relations.contains(self.psi(f))

    def element_image_order(self, f: BiPoly) -> int | None:
        return self.relations.multiple_order(self.psi(f))

    def to_json(self, annihilator_verdict: str | None = None) -> str:
        payload = {
            "params": self.params.label(),
            "order": self.order,
            "derived_type": {
                "factors": list(self.derived_type.factors),
                "free_rank": self.derived_type.free_rank,
            },
        }
        if annihilator_verdict is not None:
            payload["annihilator_verdict"] = annihilator_verdict
        return json.dumps(payload, sort_keys=True)


class _SymbolSpace:
    """Named basis vectors with zero-padding past the index ranges."""

    def __init__(self, ranges: dict[str, tuple[int, int]]):
        self.names: list[str] = []
        self.pos: dict[tuple[str, int], int] = {}
        self.ranges = ranges
        for kind, (lo, hi) in ranges.items():
            for idx in range(lo, hi + 1):
                self.pos[(kind, idx)] = len(self.names)
                self.names.append(f"{kind}{idx}")

    @property
    def dim(self) -> int:
        return len(self.names)

    def vector(self, entries: list[tuple[str, int, int]]) -> list[int]:
        """Sum of coeff * e_(kind, idx); indices above a range are zero,
        indices below raise (they would be a real reference error)."""
        vec = [0] * self.dim
        for kind, idx, coeff in entries:
            if coeff == 0:
                continue
            lo, hi = self.ranges[kind]
            if idx < lo:
                raise InvalidParameters(f"relation references {kind}{idx} below range")
            if idx > hi:
                continue
            vec[self.pos[(kind, idx)]] += coeff
        return vec

    def matrix(self, image) -> IntMat:
        """Matrix whose column at (kind, idx) is image(kind, idx)."""
        cols = []
        for kind, (lo, hi) in self.ranges.items():
            for idx in range(lo, hi + 1):
                cols.append(self.vector(image(kind, idx)))
        return IntMat.from_columns(cols, self.dim)


def _finish_model(params, space, relation_vectors, mx, my, s2, xp, yp, expected_order):
    relations = Lattice(space.dim, relation_vectors)
    for mat in (mx, my):
        for vec in relations.vectors():
            if not relations.contains(mat.apply(vec)):
                raise InconsistentPresentation("conjugation does not preserve the relation lattice")
    comm_ab = mx @ my
    comm_ba = my @ mx
    for c in range(space.dim):
        col = [comm_ab.data[r][c] - comm_ba.data[r][c] for r in range(space.dim)]
        if not relations.contains(col):
            raise InconsistentPresentation("conjugation actions do not commute modulo relations")
    order = relations.index()
    if order != expected_order:
        raise InconsistentPresentation(
            f"module order {order} != expected {expected_order}", computed_order=order
        )
    model = GroupModel(
        params=params,
        symbols=tuple(space.names),
        relations=relations,
        Mx=mx,
        My=my,
        s2_vec=s2,
        xp_vec=xp,
        yp_vec=yp,
        order=order,
        derived_type=relations.abelian_type(),
    )
    return model


def build_max_class(params: MaxClassParams) -> GroupModel:
    """Module model from the maximal-class presentation.

    Additive relations: p*s_(j+1) + sum_(l=2..p) C(p,l)*s_(j+l) = 0 for
    j = 1..m-2, cutoffs s_j = 0 for j >= m.  Conjugation: x shifts the
    chain, y fixes s_j for j >= 3 and adds the a-vector combination to
    s2.  The p-th powers of the generators land at w*s_(m-1) and
    z*s_(m-1) - sum_(l=2..p) C(p,l)*s_l.
    """
    p, m, k = params.p, params.m, params.k
    space = _SymbolSpace({"s": (2, m + 1)})

    rels = []
    for j in range(1, m):
        entries = [("s", j + 1, p)]
        entries += [("s", j + l, math.comb(p, l)) for l in range(2, p + 1)]
        rels.append(space.vector(entries))
    for j in range(m, m + 2):
        rels.append(space.vector([("s", j, 1)]))

    def mx_image(kind, idx):
        return [(kind, idx, 1), (kind, idx + 1, 1)]

    # y acts on s_j by the a-vector combination shifted j-2 steps up the
    # chain: [s_j, y] = [s_2, y]^((x-1)^(j-2)) since the two conjugation
    # actions commute on an abelian derived subgroup.  For k <= 1 this
    # degenerates to fixing every s_j with j >= 3.
    def my_image(kind, idx):
        return [(kind, idx, 1)] + [
            ("s", m - l + idx - 2, params.a_vector[l - 1]) for l in range(1, k + 1)
        ]

    mx = space.matrix(mx_image)
    my = space.matrix(my_image)
    s2 = space.vector([("s", 2, 1)])
    xp = space.vector([("s", m - 1, params.w)])
    yp = space.vector(
        [("s", m - 1, params.z)] + [("s", l, -math.comb(p, l)) for l in range(2, p + 1)]
    )
    return _finish_model(params, space, rels, mx, my, s2, xp, yp, p ** (m - 2))


def build_nonmax_3(params: NonMaxParams) -> GroupModel:
    """Module model from the non-maximal-class presentation for p = 3.

    The four commutator chains are s (by x from s2), t (by y from s2),
    sigma (by x from y^3) and tau (by y from x^3); t2 is identified with
    s2.  The relation set is the additive rewriting of the presentation:
    chain power relations, the two supplementary power relations, the
    cutoffs, the connecting relations between chains, and the central
    relations carrying the parameters.
    """
    m, n, e, k = params.m, params.n, params.e, params.k
    al, be, ga, de, rho = params.alpha, params.beta, params.gamma, params.delta, params.rho
    space = _SymbolSpace(
        {"s": (2, m + 1), "t": (3, m + 1), "sig": (3, m + 1), "tau": (3, e + k + 2)}
    )

    rels = []
    # chain power relations: u_i^3 u_(i+1)^3 u_(i+2) = 1 for i >= 3
    for kind in ("s", "t", "sig", "tau"):
        top = m + 1 if kind != "tau" else e + k + 2
        for i in range(3, top + 1):
            rels.append(
                space.vector([(kind, i, 3), (kind, i + 1, 3), (kind, i + 2, 1)])
            )
    # supplementary power relations for the bottom of the s and t chains
    rels.append(space.vector([("s", 2, 3), ("s", 3, 3), ("s", 4, 1), ("tau", 4, 1)]))
    rels.append(space.vector([("s", 2, 3), ("t", 3, 3), ("t", 4, 1), ("sig", 4, -1)]))
    # nilpotency cutoffs
    for i in range(m, m + 2):
        rels.append(space.vector([("sig", i, 1)]))
    for j in range(e + k + 1, e + k + 3):
        rels.append(space.vector([("tau", j, 1)]))
    # connecting relations between plain and power chains
    for i in range(5, m + 2):
        rels.append(space.vector([("sig", i, 1), ("s", i - 2, -3)]))
        rels.append(space.vector([("s", i, 1), ("sig", i, 1), ("sig", i + 1, 1)]))
        rels.append(space.vector([("t", i, 1), ("tau", i, -1), ("tau", i + 1, -1)]))
    for i in range(5, e + k + 3):
        rels.append(space.vector([("tau", i, 1), ("t", i - 2, 3)]))
    # first central relations
    rels.append(
        space.vector(
            [("s", 2, 3), ("s", 3, 3), ("t", 3, 3), ("s", 4, 1), ("t", 4, 1), ("sig", m - 1, -rho * be)]
        )
    )
    rels.append(space.vector([("tau", e + 1, 1), ("sig", m - 1, rho)]))
    # second central relations
    rels.append(space.vector([("s", 4, 1), ("sig", 4, 1), ("sig", 5, 1), ("sig", m - 1, -rho * be)]))
    rels.append(space.vector([("t", 4, 1), ("tau", 4, -1), ("tau", 5, -1), ("sig", m - 1, -rho * be)]))
    rels.append(space.vector([("s", 2, -3), ("sig", 4, 1), ("tau", 4, -1), ("sig", m - 1, -rho * be)]))
    rels.append(
        space.vector(
            [("s", 3, 1), ("sig", 3, 1), ("sig", 4, 1),
             ("sig", m - 2, -rho * be), ("sig", m - 1, -ga), ("tau", e, -de)]
        )
    )
    rels.append(
        space.vector(
            [("t", 3, -1), ("tau", 3, 1), ("tau", 4, 1),
             ("sig", m - 2, -rho * de), ("sig", m - 1, -al), ("tau", e, -be)]
        )
    )

    def mx_image(kind, idx):
        if kind in ("s", "sig"):
            return [(kind, idx, 1), (kind, idx + 1, 1)]
        if kind == "tau":
            return [(kind, idx, 1)]
        if idx == 3:
            return [("t", 3, 1), ("sig", m - 1, -rho * de)]
        return [("t", idx, 1)]

    def my_image(kind, idx):
        if kind == "s":
            if idx == 2:
                return [("s", 2, 1), ("t", 3, 1)]
            if idx == 3:
                return [("s", 3, 1), ("sig", m - 1, -rho * de)]
            return [("s", idx, 1)]
        if kind in ("t", "tau"):
            return [(kind, idx, 1), (kind, idx + 1, 1)]
        return [(kind, idx, 1)]

    mx = space.matrix(mx_image)
    my = space.matrix(my_image)
    s2 = space.vector([("s", 2, 1)])
    xp = space.vector([("tau", 3, 1)])
    yp = space.vector([("sig", 3, 1)])
    return _finish_model(params, space, rels, mx, my, s2, xp, yp, 3 ** (n - 2))


def psi(model: GroupModel, f: BiPoly) -> list[int]:
    return model.psi(f)


def annihilator_contains(model: GroupModel, f: BiPoly) -> bool:
    return model.annihilator_contains(f)


def verify_surjectivity(model: GroupModel, degree_bound: int | None = None) -> bool:
    """True iff the iterated commutator images of s2 span the module,
    i.e. the evaluation map is onto the derived subgroup."""
    if degree_bound is None:
        if isinstance(model.params, NonMaxParams):
            degree_bound = model.params.m + model.params.e
        else:
            degree_bound = model.params.m + 2
    vectors = [
        model.psi_mono(i, j)
        for i in range(degree_bound + 1)
        for j in range(degree_bound + 1 - i)
    ]
    span = model.relations.add(vectors)
    return span.index() == 1


def verify_annihilator(
    model: GroupModel, claimed, degree_cap: int | None = None
) -> VerificationReport:
    """PASS certifies that the claimed ideal is exactly the kernel:
    every claimed generator must die under psi, and the quotient ring
    modulo the claimed ideal must have the same (finite) order as the
    derived subgroup.  An inclusion with equal finite orders is an
    equality.  The report also records whether the abelian types agree.
    """
    claimed = tuple(claimed)
    failures = [format_poly(g) for g in claimed if not model.annihilator_contains(g)]
    qmodel = build_quotient_cached(claimed, degree_cap)
    qorder = qmodel.order
    ok = not failures and qorder == model.order
    computed = {
        "not_in_kernel": failures,
        "quotient_order": qorder,
        "group_order": model.order,
        "quotient_type": str(qmodel.type),
        "derived_type": str(model.derived_type),
        "types_equal": qmodel.type == model.derived_type,
    }
    return VerificationReport(
        claim="annihilator-verification",
        instance=model.params.label(),
        expected=f"ideal ({', '.join(format_poly(g) for g in claimed)}) equals the kernel",
        computed=json.dumps(computed, sort_keys=True),
        verdict=PASS if ok else FAIL,
    )


def schreier_check(model: GroupModel) -> VerificationReport:
    """Power-polynomial congruences for p = 3 maximal class.

    With F1 = w*X^(m-3) and F2 = z*X^(m-3) - X - 3 the model must satisfy
    psi(F1) = x^3, psi(F2) = y^3, and the four congruences
    F1*X = 0, F2*Y = 0, F1*Y = -(X^2+3X+3), F2*X = Y^2+3Y+3
    modulo the kernel.
    """
    params = model.params
    if not isinstance(params, MaxClassParams) or params.p != 3:
        raise InvalidParameters("power-congruence check applies to p=3 maximal class")
    m = params.m
    xpow = BiPoly.monomial(m - 3, 0)
    x = BiPoly.monomial(1, 0)
    y = BiPoly.monomial(0, 1)
    f1 = xpow.scale(params.w)
    f2 = xpow.scale(params.z) - x - BiPoly.const(3)
    t3x = trace_poly_x(3)
    t3y = trace_poly_y(3)
    checks = {
        "psi(F1)=x^3": model.relations.contains(
            [a - b for a, b in zip(model.psi(f1), model.xp_vec)]
        ),
        "psi(F2)=y^3": model.relations.contains(
            [a - b for a, b in zip(model.psi(f2), model.yp_vec)]
        ),
        "F1*X=0": model.annihilator_contains(f1 * x),
        "F2*Y=0": model.annihilator_contains(f2 * y),
        "F1*Y=-T3(X)": model.annihilator_contains(f1 * y + t3x),
        "F2*X=T3(Y)": model.annihilator_contains(f2 * x - t3y),
    }
    ok = all(checks.values())
    return VerificationReport(
        claim="schreier-congruences",
        instance=params.label(),
        expected="all power-polynomial congruences hold",
        computed=json.dumps(checks, sort_keys=True),
        verdict=PASS if ok else FAIL,
    )
