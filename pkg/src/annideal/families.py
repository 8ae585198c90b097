"""Catalog of the named annihilator-ideal families and the nearly
homocyclic abelian p-groups.

Family names are ASCII identifiers mapped one-to-one to the classical
fraktur letters: W, Y (maximal class, arbitrary p), R, S, T, V, U
(non-maximal class with two exponents mu >= nu), Xfam, Z, Zprime
(nu = 2 variants), and the degenerate small ideals L2 and L.  The
general template is

    S_(mu,nu)(beta, delta, rho) =
        (X^mu, Y^nu - rho*X^(mu-1), X*Y - rho*delta*X^(mu-1),
         T(X,Y) + rho*beta*X^(mu-1))

with the nu = 2 variant Y^2 - (1-beta)*rho*X^(mu-1); every other family
is a specialization.  `predicted_annihilator` and
`predicted_derived_type` assign a family instance / abelian type to a
presentation's parameters exactly where a closed-form statement exists,
and raise NoPrediction elsewhere rather than extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bipoly import BiPoly, Monomial, format_poly, is_prime, trace_poly_x, trace_poly_xy
from .groups import InvalidParameters, MaxClassParams, NonMaxParams
from .zlinalg import AbelianType

FAMILY_NAMES = ("W", "Y", "R", "S", "T", "V", "U", "Xfam", "Z", "Zprime", "L2", "L")

# transfer kernel types carried as opaque report annotations only
FAMILY_TKT = {
    "S": "H.4",
    "V": "G.16",
    "T": "G.19",
    "U": "b.10",
    "R": "F.7/11/12/13, d.19/23/25",
    "Z": "G.16",
    "Zprime": "b.10",
    "Xfam": "E.6/8/9/14, c.18/21",
    "L2": "D.5/10",
    "W": "a.1",
    "Y": "a.2/3",
    "L": "A.1",
}


class NoPrediction(Exception):
    """Parameters outside every closed-form statement's hypothesis."""


@dataclass(frozen=True)
class IdealFamily:
    """A named family instance; params hold whichever of gamma, beta,
    delta, rho, a_vector, p the family requires."""

    name: str
    mu: int | None = None
    nu: int | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise InvalidParameters(f"unknown family {self.name!r}")
        _validate_family(self)

    def label(self) -> str:
        bits = [self.name]
        if self.mu is not None:
            bits.append(f"mu={self.mu}")
        if self.nu is not None:
            bits.append(f"nu={self.nu}")
        for key in sorted(self.params):
            val = self.params[key]
            if key == "a_vector":
                val = ",".join(map(str, val)) or "-"
            bits.append(f"{key}={val}")
        return " ".join(bits)


def _need(spec: IdealFamily, *keys):
    for key in keys:
        if key not in spec.params:
            raise InvalidParameters(f"family {spec.name} requires parameter {key!r}")


def _small(spec: IdealFamily, *keys):
    _need(spec, *keys)
    for key in keys:
        if spec.params[key] not in (-1, 0, 1):
            raise InvalidParameters(f"{key} must be in -1..1 for family {spec.name}")


def _validate_family(spec: IdealFamily) -> None:
    name = spec.name
    if name in ("L", "L2"):
        return
    if spec.mu is None or spec.mu < 1:
        raise InvalidParameters(f"family {name} needs mu >= 1")
    if name in ("R", "S", "T", "V", "U"):
        if spec.nu is None or not (1 <= spec.nu <= spec.mu):
            raise InvalidParameters(f"family {name} needs mu >= nu >= 1")
    if name == "W":
        _need(spec, "p", "a_vector")
        p = spec.params["p"]
        if not is_prime(p):
            raise InvalidParameters(f"p={p} is not prime")
        a = tuple(spec.params["a_vector"])
        if len(a) >= spec.mu:
            raise InvalidParameters("a-vector longer than mu-1")
        if any(abs(c) >= p for c in a):
            raise InvalidParameters("a-vector entries must lie in -(p-1)..p-1")
        if a and a[-1] % p == 0:
            raise InvalidParameters("last a-vector entry must be non-zero mod p")
    elif name == "Y":
        _need(spec, "p")
        if not is_prime(spec.params["p"]):
            raise InvalidParameters("p must be prime")
    elif name == "S":
        _small(spec, "beta", "delta", "rho")
    elif name == "T":
        _small(spec, "beta", "rho")
    elif name == "V":
        _small(spec, "delta", "rho")
    elif name == "U":
        _small(spec, "rho")
    elif name == "Z":
        _small(spec, "beta", "rho")
    elif name == "Zprime":
        _small(spec, "rho")


def _xp(mu: int) -> BiPoly:
    return BiPoly.monomial(mu, 0)


_Y = BiPoly.monomial(0, 1)
_XY = BiPoly.monomial(1, 1)
_T3X = trace_poly_x(3)
_T = trace_poly_xy()


def family_generators(spec: IdealFamily) -> list[BiPoly]:
    """Exact generator list of the family instance."""
    name, mu, nu = spec.name, spec.mu, spec.nu
    p = spec.params.get("p", 3)
    if name == "L":
        return [BiPoly.monomial(1, 0), _Y, BiPoly.const(3)]
    if name == "L2":
        return [BiPoly.monomial(2, 0), BiPoly.monomial(0, 2), _XY, BiPoly.const(3)]
    side = BiPoly.monomial(mu - 1, 0) if mu >= 1 else BiPoly.const(1)
    if name == "W":
        a = spec.params["a_vector"]
        tail = BiPoly.zero()
        for l, coeff in enumerate(a, start=1):
            tail = tail + BiPoly.monomial(mu - l, 0).scale(coeff)
        return [_xp(mu), _Y - tail, trace_poly_x(p)]
    if name == "Y":
        return [_xp(mu), _Y, trace_poly_x(p)]
    if name == "Xfam":
        return [_xp(mu), BiPoly.monomial(0, 2), _XY, _T3X]
    beta = spec.params.get("beta", 0)
    delta = spec.params.get("delta", 0)
    rho = spec.params.get("rho", 0)
    if name == "R":
        beta = delta = rho = 0
    if name == "T":
        delta = 0
    if name == "V":
        beta = 0
    if name == "U":
        beta = delta = 0
    if name in ("Z", "Zprime"):
        if name == "Zprime":
            beta = 0
        delta = 0
        nu = 2
    ypow = BiPoly.monomial(0, nu)
    if nu == 2 and name in ("S", "Z", "Zprime"):
        ygen = ypow - side.scale((1 - beta) * rho)
    else:
        ygen = ypow - side.scale(rho)
    return [
        _xp(mu),
        ygen,
        _XY - side.scale(rho * delta),
        _T + side.scale(rho * beta),
    ]


def nearly_homocyclic(p: int, mu: int) -> AbelianType:
    """Abelian p-group of order p^mu whose invariant factors differ by
    at most one power of p; trivial for mu = 0."""
    if not is_prime(p):
        raise InvalidParameters(f"p={p} is not prime")
    if mu < 0:
        raise InvalidParameters("mu must be >= 0")
    if mu == 0:
        return AbelianType()
    if mu < p - 1:
        return AbelianType((p,) * mu)
    q, r = divmod(mu, p - 1)
    factors = [p ** (q + 1)] * r + [p**q] * (p - 1 - r)
    return AbelianType(tuple(f for f in factors if f > 1))


@dataclass(frozen=True)
class AnnihilatorPrediction:
    """Predicted kernel ideal: a catalog family where one applies, plus
    the expanded generator list either way."""

    label: str
    generators: tuple[BiPoly, ...]
    family: IdealFamily | None = None
    tkt: str | None = None

    def text(self) -> str:
        return ", ".join(format_poly(g) for g in self.generators)


def _exceptional_generators(beta: int, delta: int, rho: int) -> tuple[BiPoly, ...]:
    """Kernel generators for the nilpotency-index-5, defect-1 scheme,
    from the inversion of the second central relation (the power chain
    element sigma_4 equals s4^(rho*beta - 1) when that exponent is
    invertible, and y^3-conjugation data otherwise)."""
    rb = rho * beta
    if rb == 1:
        return (
            BiPoly.monomial(2, 0),
            BiPoly.monomial(0, 2),
            _XY + BiPoly.const(3 * rho * delta),
        )
    side = BiPoly.monomial(2, 0)
    return (
        BiPoly.monomial(3, 0),
        _XY - side.scale((1 - rb) * rho * delta),
        _T + side.scale((1 - rb) * rho * beta),
        BiPoly.monomial(0, 2) - side.scale((1 - beta) * (1 - rb) * rho),
    )


def predicted_annihilator(params) -> AnnihilatorPrediction:
    """The family instance assigned to the presentation parameters."""
    if isinstance(params, MaxClassParams):
        mu = params.m - 2
        if params.k == 0:
            fam = IdealFamily("Y", mu=mu, params={"p": params.p})
            tkt = FAMILY_TKT["Y"] if params.p == 3 else None
        else:
            fam = IdealFamily(
                "W", mu=mu, params={"p": params.p, "a_vector": tuple(params.a_vector)}
            )
            tkt = FAMILY_TKT["W"] if params.p == 3 else None
        return AnnihilatorPrediction(
            label=fam.label(), generators=tuple(family_generators(fam)), family=fam, tkt=tkt
        )
    if not isinstance(params, NonMaxParams):
        raise NoPrediction(f"unsupported parameter record {params!r}")
    m, e, k = params.m, params.e, params.k
    mu = m - 2
    if k == 0:
        if e == 3:
            fam = IdealFamily("Xfam", mu=mu)
        else:
            fam = IdealFamily("R", mu=mu, nu=e - 1)
        return AnnihilatorPrediction(
            label=fam.label(),
            generators=tuple(family_generators(fam)),
            family=fam,
            tkt=FAMILY_TKT[fam.name],
        )
    # k = 1: the defect-1 template needs m >= 6 and e <= m - 2
    if e > m - 2:
        raise NoPrediction(f"defect 1 with e={e} > m-2={m - 2} is outside every statement")
    if m >= 6:
        nu = e - 1 if e >= 4 else 2
        fam = IdealFamily(
            "S", mu=mu, nu=nu,
            params={"beta": params.beta, "delta": params.delta, "rho": params.rho},
        )
        return AnnihilatorPrediction(
            label=fam.label(),
            generators=tuple(family_generators(fam)),
            family=fam,
            tkt=FAMILY_TKT["S"],
        )
    if m == 5:
        gens = _exceptional_generators(params.beta, params.delta, params.rho)
        label = f"exceptional beta={params.beta} delta={params.delta} rho={params.rho}"
        return AnnihilatorPrediction(label=label, generators=gens)
    raise NoPrediction(f"defect 1 with m={m} is outside every statement")


# Exceptional derived-subgroup types for m=5, n=6, rho=+-1, keyed by
# (beta, delta, rho): abelian type and the generating residues.
EXCEPTIONAL_TYPES = {
    (0, 0, 1): ((9, 3, 3), ("1", "X", "Y")),
    (1, 1, 1): ((9, 3, 3), ("1", "X", "Y")),
    (-1, 0, 1): ((3, 3, 3, 3), ("1", "X", "Y", "Y^2")),
    (0, 0, -1): ((3, 3, 3, 3), ("1", "X", "Y", "Y^2")),
}


def predicted_derived_type(params) -> AbelianType:
    """Closed-form abelian type of the derived subgroup, where stated."""
    if isinstance(params, MaxClassParams):
        return nearly_homocyclic(params.p, params.m - 2)
    if not isinstance(params, NonMaxParams):
        raise NoPrediction(f"unsupported parameter record {params!r}")
    m, e, k = params.m, params.e, params.k
    if k == 0:
        if e == 3:
            return AbelianType.direct_sum(nearly_homocyclic(3, m - 2), AbelianType((3,)))
        return AbelianType.direct_sum(nearly_homocyclic(3, m - 2), nearly_homocyclic(3, e - 2))
    key = (params.beta, params.delta, params.rho)
    if m == 5 and params.n == 6 and key in EXCEPTIONAL_TYPES:
        return AbelianType(tuple(EXCEPTIONAL_TYPES[key][0]))
    raise NoPrediction(f"no derived-subgroup statement for defect 1 with m={m}, n={params.n}")


def parse_family(text: str) -> IdealFamily:
    """Parse the CLI family form, e.g. 'S mu=5 nu=3 beta=1 delta=0 rho=1'."""
    parts = text.split()
    if not parts:
        raise InvalidParameters("empty family spec")
    name = parts[0]
    if name not in FAMILY_NAMES:
        raise InvalidParameters(f"unknown family {name!r}")
    kwargs: dict = {}
    params: dict = {}
    for item in parts[1:]:
        if "=" not in item:
            raise InvalidParameters(f"expected key=value, got {item!r}")
        key, _, val = item.partition("=")
        if key in ("mu", "nu"):
            kwargs[key] = int(val)
        elif key == "a":
            params["a_vector"] = tuple(int(v) for v in val.split(",") if v != "")
        elif key in ("p", "gamma", "beta", "delta", "rho"):
            params[key] = int(val)
        else:
            raise InvalidParameters(f"unknown family parameter {key!r}")
    if name == "W" and "a_vector" not in params and "gamma" in params:
        g = params.pop("gamma")
        params["a_vector"] = (g,) if g else ()
    return IdealFamily(name, params=params, **kwargs)
