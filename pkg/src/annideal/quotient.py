"""Finite additive models of Z[X,Y] modulo an ideal with bounded powers.

Given generators of an ideal A, the builder produces a model of the
additive group of Z[X,Y]/A consisting of:

  * rewrite rules oriented from unit-leading-coefficient ideal members
    under pure lex order with X > Y (every replacement monomial is
    strictly lex-smaller than the lead, so rewriting terminates);
  * the box: the finite set of rule-irreducible monomials, which is the
    coordinate space;
  * a relation lattice in Z^|box| containing the reduced generators,
    all critical-pair differences of the rewriting system, reduced
    generator multiples up to a saturation degree, and closed under
    multiplication by X and Y (fixpoint).

Rewriting alone is only a projection onto the coordinate space; the
relation lattice restores exact ideal membership.  Where two rules
overlap, the two one-step reducts of the overlap monomial are both
congruent to it, so their difference is an ideal member supported on
the box; seeding those differences is what makes `contains` agree with
an independent kernel oracle (this is checked wholesale by the test
suite rather than proven).

The construction needs the ideal to contain a pure power of X and a
pure power of Y (possibly discovered, not listed); otherwise the box is
infinite and PossiblyInfiniteQuotient is raised.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bipoly import BiPoly, Monomial, ONE_MONO, format_poly
from .zlinalg import AbelianType, IntMat, Lattice, abelian_type

MAX_BOX = 4096
MAX_EXTRA_RULES = 64


class PossiblyInfiniteQuotient(Exception):
    """No pure X-power and Y-power bound was found under the degree cap."""


class CapTooSmall(Exception):
    """Internal inconsistency: reduction left the modelled space."""


class InfiniteOrder(Exception):
    """Element order requested in a quotient with free rank > 0."""


@dataclass(frozen=True)
class RewriteRule:
    """lead -> replacement, every replacement monomial lex-below lead."""

    lead: Monomial
    replacement: BiPoly

    def __post_init__(self):
        for mono in self.replacement.monomials():
            if not mono < self.lead:
                raise ValueError(f"replacement {mono} not below lead {self.lead}")


def default_degree_cap(generators: Sequence[BiPoly]) -> int:
    maxdeg = max((g.degree for g in generators), default=0)
    return max(8, 2 * maxdeg + 4)


def _orient(poly: BiPoly) -> RewriteRule | None:
    """Rule from a unit-lead polynomial, or None."""
    if poly.is_zero:
        return None
    lead, coeff = poly.lead()
    if coeff not in (1, -1):
        return None
    rest = poly - BiPoly([(lead, coeff)])
    return RewriteRule(lead, rest.scale(-coeff))


class _Rewriter:
    """Deterministic normal forms for a fixed, ordered rule list.

    Rule priority at a monomial: applicable rule with lex-largest lead,
    ties broken by listing order.
    """

    def __init__(self, rules: Sequence[RewriteRule]):
        self.rules = list(rules)
        # precomputed priority: larger lead first, then earlier listing
        self._order = sorted(
            range(len(self.rules)),
            key=lambda idx: (self.rules[idx].lead, -idx),
            reverse=True,
        )
        self._memo: dict[Monomial, dict[Monomial, int]] = {}

    def rule_at(self, mono: Monomial) -> RewriteRule | None:
        for idx in self._order:
            if self.rules[idx].lead.divides(mono):
                return self.rules[idx]
        return None

    def nf_mono(self, mono: Monomial) -> dict[Monomial, int]:
        memo = self._memo
        cached = memo.get(mono)
        if cached is not None:
            return cached
        stack = [mono]
        while stack:
            m = stack[-1]
            if m in memo:
                stack.pop()
                continue
            rule = self.rule_at(m)
            if rule is None:
                memo[m] = {m: 1}
                stack.pop()
                continue
            q = m.quotient_by(rule.lead)
            children = [t.times(q) for t in rule.replacement.monomials()]
            pending = [c for c in children if c not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc: dict[Monomial, int] = {}
            for t, c in rule.replacement.terms():
                for bm, bc in memo[t.times(q)].items():
                    s = acc.get(bm, 0) + c * bc
                    if s:
                        acc[bm] = s
                    elif bm in acc:
                        del acc[bm]
            memo[m] = acc
            stack.pop()
        return memo[mono]

    def nf(self, poly: BiPoly) -> dict[Monomial, int]:
        acc: dict[Monomial, int] = {}
        for mono, coeff in poly.terms():
            for bm, bc in self.nf_mono(mono).items():
                s = acc.get(bm, 0) + coeff * bc
                if s:
                    acc[bm] = s
                elif bm in acc:
                    del acc[bm]
        return acc

    def one_step(self, mono: Monomial, rule: RewriteRule) -> BiPoly:
        q = mono.quotient_by(rule.lead)
        return rule.replacement.shift(q)


def _nf_to_poly(nf: dict[Monomial, int]) -> BiPoly:
    return BiPoly(list(nf.items()))


def _pure_bounds(rules: Sequence[RewriteRule]) -> tuple[int | None, int | None]:
    """Minimal pure-power leads (X^a, Y^b) present among the rules."""
    bx = min((r.lead.i for r in rules if r.lead.j == 0 and r.lead.i > 0), default=None)
    by = min((r.lead.j for r in rules if r.lead.i == 0 and r.lead.j > 0), default=None)
    return bx, by


def _box_key(mono: Monomial):
    # pure X-powers (incl. 1) first, then pure Y-powers, then mixed
    if mono.j == 0:
        return (0, mono.i, 0)
    if mono.i == 0:
        return (1, mono.j, 0)
    return (2, mono.degree, mono.i)


@dataclass
class QuotientModel:
    """Finite additive model of Z[X,Y]/A on the monomial box."""

    generators: tuple[BiPoly, ...]
    degree_cap: int
    rules: tuple[RewriteRule, ...]
    box: tuple[Monomial, ...]
    relations: Lattice
    mulX: IntMat
    mulY: IntMat
    _rewriter: _Rewriter = field(repr=False)
    _index: dict[Monomial, int] = field(repr=False)
    _type: AbelianType | None = field(default=None, repr=False)

    @property
    def type(self) -> AbelianType:
        if self._type is None:
            self._type = self.relations.abelian_type()
        return self._type

    @property
    def order(self) -> int | None:
        """Order of the additive quotient group; None when infinite."""
        return self.relations.index()

    def reduce(self, f: BiPoly) -> list[int]:
        """Coordinates of the normal form of f on the box."""
        nf = self._rewriter.nf(f)
        vec = [0] * len(self.box)
        for mono, coeff in nf.items():
            idx = self._index.get(mono)
            if idx is None:
                raise CapTooSmall(f"normal form left the box at {mono}")
            vec[idx] = coeff
        return vec

    def contains(self, f: BiPoly) -> bool:
        """Exact ideal membership for the modelled ideal."""
        return self.relations.contains(self.reduce(f))

    def element_order(self, f: BiPoly) -> int:
        """Least n >= 1 with n*f in the ideal."""
        n = self.relations.multiple_order(self.reduce(f))
        if n is None:
            raise InfiniteOrder(format_poly(f))
        return n

    def basis(self) -> list[tuple[Monomial, int]]:
        """Box monomials whose residues generate the additive group,
        greedily selected (pure X-powers, then Y-powers, then mixed),
        each with its element order."""
        span = self.relations
        picked = []
        for idx, mono in enumerate(self.box):
            vec = [0] * len(self.box)
            vec[idx] = 1
            if not span.contains(vec):
                picked.append(mono)
                span = span.add([vec])
        return [(m, self.element_order(BiPoly([(m, 1)]))) for m in picked]

    def to_json(self) -> str:
        basis = self.basis() if self.order is not None else []
        payload = {
            "generators": [format_poly(g) for g in self.generators],
            "basis": [str(m) for m, _ in basis],
            "orders": [n for _, n in basis],
            "type": {"factors": list(self.type.factors), "free_rank": self.type.free_rank},
            "order": self.order,
            "relations_hnf": self.relations.basis.data,
        }
        return json.dumps(payload, sort_keys=True)


def _saturation_search(
    gens: Sequence[BiPoly],
    rewriter: _Rewriter,
    cap: int,
    bx: int | None,
    by: int | None,
) -> tuple[int | None, int | None]:
    """Find pure powers X^a / Y^b of the unbounded variables inside the
    ideal, by echelonising reduced generator multiples of ascending
    degree.  Returns the exponents found (None where still missing)."""
    from .zlinalg import _Echelon

    if bx is None and by is None:
        # raw 2-dimensional search in the capped monomial space
        monos = sorted(
            (Monomial(i, j) for i in range(cap + 1) for j in range(cap + 1 - i)),
            key=_box_key,
        )
        index = {m: k for k, m in enumerate(monos)}
        ech = _Echelon(len(monos))
        for g in gens:
            gdeg = max(g.degree, 0)
            for m in monos:
                if m.degree + gdeg > cap:
                    continue
                prod = g.shift(m)
                vec = [0] * len(monos)
                for mono, coeff in prod.terms():
                    vec[index[mono]] = coeff
                ech.insert(vec)

        def pure(var_i: bool) -> int | None:
            for a in range(1, cap + 1):
                mono = Monomial(a, 0) if var_i else Monomial(0, a)
                vec = [0] * len(monos)
                vec[index[mono]] = 1
                if ech.contains(vec):
                    return a
            return None

        return pure(True), pure(False)

    # one variable is bounded: work in the rule-reduced slice
    x_bounded = bx is not None
    width = bx if x_bounded else by
    jmax = cap + max((g.degree for g in gens), default=0)
    if x_bounded:
        monos = [Monomial(i, j) for i in range(width) for j in range(jmax + 1)]
    else:
        monos = [Monomial(i, j) for j in range(width) for i in range(jmax + 1)]
    index = {m: k for k, m in enumerate(monos)}
    ech = _Echelon(len(monos))

    def target_vec(b: int):
        mono = Monomial(0, b) if x_bounded else Monomial(b, 0)
        nf = rewriter.nf_mono(mono)
        vec = [0] * len(monos)
        for m, c in nf.items():
            if m not in index:
                return None
            vec[index[m]] = c
        return vec

    found = None
    maxdeg = max((g.degree for g in gens), default=0)
    for total in range(0, cap + 1):
        inserted = False
        for g in gens:
            d = total - max(g.degree, 0)
            if d < 0:
                continue
            for i in range(d + 1):
                nf = rewriter.nf(g.shift(Monomial(i, d - i)))
                vec = [0] * len(monos)
                ok = True
                for m, c in nf.items():
                    idx = index.get(m)
                    if idx is None:
                        ok = False
                        break
                    vec[idx] = c
                if ok and ech.insert(vec):
                    inserted = True
        if not inserted and total > 2 * maxdeg:
            continue
        for b in range(1, cap + 1):
            vec = target_vec(b)
            if vec is not None and ech.contains(vec):
                found = b
                break
        if found is not None:
            break
    if x_bounded:
        return bx, found
    return found, by


def build_quotient(generators: Iterable[BiPoly], degree_cap: int | None = None) -> QuotientModel:
    """Two-phase construction of the finite additive model of Z[X,Y]/A.

    Phase 1 bounds both variables: unit-lead generators become rules;
    critical-pair completion may contribute further unit rules; missing
    pure-power bounds are searched for in the lattice of generator
    multiples under the degree cap.  Phase 2 enumerates the box and
    closes the relation lattice under multiplication by X and Y.
    """
    gens = tuple(g for g in generators if not g.is_zero)
    if not gens:
        raise PossiblyInfiniteQuotient("no non-zero generators")
    maxdeg = max(g.degree for g in gens)
    if degree_cap is None:
        degree_cap = default_degree_cap(gens)
    if degree_cap < maxdeg + 2:
        raise ValueError(f"degree_cap {degree_cap} below max generator degree + 2")

    rules: list[RewriteRule] = []
    seeds: list[BiPoly] = []
    for g in gens:
        rule = _orient(g)
        if rule is not None:
            rules.append(rule)
        else:
            seeds.append(g)

    def complete() -> None:
        """Saturate critical pairs; unit-lead differences become rules,
        the rest become lattice seeds."""
        processed: set[tuple[Monomial, Monomial]] = set()
        while True:
            rewriter = _Rewriter(rules)
            new_rule = None
            for a in range(len(rules)):
                for b in range(a + 1, len(rules)):
                    key = (rules[a].lead, rules[b].lead)
                    if key in processed:
                        continue
                    processed.add(key)
                    u = rules[a].lead.lcm(rules[b].lead)
                    nf_a = rewriter.nf(rewriter.one_step(u, rules[a]))
                    nf_b = rewriter.nf(rewriter.one_step(u, rules[b]))
                    diff = _nf_to_poly(nf_a) - _nf_to_poly(nf_b)
                    if diff.is_zero:
                        continue
                    cand = _orient(diff)
                    if cand is not None and len(rules) < MAX_EXTRA_RULES:
                        new_rule = cand
                        break
                    seeds.append(diff)
                if new_rule:
                    break
            if new_rule is None:
                return
            rules.append(new_rule)

    complete()
    bx, by = _pure_bounds(rules)
    if bx is None or by is None:
        rewriter = _Rewriter(rules)
        fx, fy = _saturation_search(gens, rewriter, degree_cap, bx, by)
        if fx is None or fy is None:
            missing = "X" if fx is None else "Y"
            raise PossiblyInfiniteQuotient(
                f"no pure {missing}-power found under degree cap {degree_cap}"
            )
        if bx is None:
            rules.append(RewriteRule(Monomial(fx, 0), BiPoly.zero()))
        if by is None:
            rules.append(RewriteRule(Monomial(0, fy), BiPoly.zero()))
        complete()
        bx, by = _pure_bounds(rules)

    rewriter = _Rewriter(rules)
    box = [
        Monomial(i, j)
        for i in range(bx)
        for j in range(by)
        if rewriter.rule_at(Monomial(i, j)) is None
    ]
    if len(box) > MAX_BOX:
        raise CapTooSmall(f"box of {len(box)} monomials exceeds limit")
    box.sort(key=_box_key)
    index = {m: k for k, m in enumerate(box)}

    def coords(nf: dict[Monomial, int]) -> list[int]:
        vec = [0] * len(box)
        for mono, coeff in nf.items():
            idx = index.get(mono)
            if idx is None:
                raise CapTooSmall(f"normal form left the box at {mono}")
            vec[idx] = coeff
        return vec

    mulx_cols = [coords(rewriter.nf_mono(m.times(Monomial(1, 0)))) for m in box]
    muly_cols = [coords(rewriter.nf_mono(m.times(Monomial(0, 1)))) for m in box]

    vectors = []
    for g in gens:
        vectors.append(coords(rewriter.nf(g)))
    for s in seeds:
        vectors.append(coords(rewriter.nf(s)))
    sat = min(degree_cap, max(maxdeg + 4, max((m.degree for m in box), default=0) + 2))
    for g in gens:
        gdeg = max(g.degree, 0)
        for total in range(0, sat - gdeg + 1):
            for i in range(total + 1):
                vectors.append(coords(rewriter.nf(g.shift(Monomial(i, total - i)))))

    from .zlinalg import _Echelon

    ech = _Echelon(len(box))
    for v in vectors:
        ech.insert(v)

    def apply_cols(cols, vec):
        out = [0] * len(box)
        for idx, v in enumerate(vec):
            if v:
                col = cols[idx]
                for r in range(len(box)):
                    if col[r]:
                        out[r] += v * col[r]
        return out

    changed = True
    while changed:
        changed = False
        for vec in [v[:] for v in ech.pivots.values()]:
            for cols in (mulx_cols, muly_cols):
                if ech.insert(apply_cols(cols, vec)):
                    changed = True

    lattice = Lattice(len(box))
    lattice._ech = ech

    model = QuotientModel(
        generators=gens,
        degree_cap=degree_cap,
        rules=tuple(rules),
        box=tuple(box),
        relations=lattice,
        mulX=IntMat.from_columns(mulx_cols, len(box)),
        mulY=IntMat.from_columns(muly_cols, len(box)),
        _rewriter=rewriter,
        _index=index,
    )
    _check_model(model)
    return model


def _check_model(model: QuotientModel) -> None:
    lattice = model.relations
    for g in model.generators:
        if not lattice.contains(model.reduce(g)):
            raise CapTooSmall("reduced generator escaped the relation lattice")
    for vec in lattice.vectors():
        for mat in (model.mulX, model.mulY):
            if not lattice.contains(mat.apply(vec)):
                raise CapTooSmall("relation lattice not closed under multiplication")
    n = len(model.box)
    commutator = model.mulX @ model.mulY
    other = model.mulY @ model.mulX
    for c in range(n):
        col = [commutator.data[r][c] - other.data[r][c] for r in range(n)]
        if not lattice.contains(col):
            raise CapTooSmall("X and Y multiplication do not commute modulo relations")


_model_cache: dict[tuple, QuotientModel] = {}


def build_quotient_cached(generators: Iterable[BiPoly], degree_cap: int | None = None) -> QuotientModel:
    gens = tuple(generators)
    key = (tuple(g.key() for g in gens), degree_cap)
    model = _model_cache.get(key)
    if model is None:
        model = build_quotient(gens, degree_cap)
        _model_cache[key] = model
    return model


def reduce(model: QuotientModel, f: BiPoly) -> list[int]:
    return model.reduce(f)


def contains(model: QuotientModel, f: BiPoly) -> bool:
    return model.contains(f)


def element_order(model: QuotientModel, f: BiPoly) -> int:
    return model.element_order(f)


def basis(model: QuotientModel) -> list[tuple[Monomial, int]]:
    return model.basis()


def ideal_equal(
    gens_a: Iterable[BiPoly],
    gens_b: Iterable[BiPoly],
    degree_cap: int | None = None,
) -> bool:
    """Mutual inclusion of two finitely generated ideals."""
    a = tuple(gens_a)
    b = tuple(gens_b)
    model_a = build_quotient_cached(a, degree_cap)
    model_b = build_quotient_cached(b, degree_cap)
    return all(model_b.contains(g) for g in a) and all(model_a.contains(g) for g in b)
