"""Ideal-theoretic computations built on Buchberger's algorithm.

The public surface works with monic, reduced Groebner bases over Q.  The
engine underneath runs fraction-free: polynomials are cleared to primitive
integer coefficient dicts and reductions are pseudo-reductions with an
explicit scalar multiplier, which keeps coefficient growth in check without
ever leaving exact arithmetic.

Algorithms follow the classical textbook presentations: Buchberger with the
coprimality and chain pair-discarding criteria and normal (minimal-lcm) pair
selection, ideal quotient via the auxiliary-variable intersection trick,
saturation as a stabilizing chain of quotients, elimination through block
orders, Hilbert series of leading-term ideals by pivot recursion, and
tangent cones through a degree-filtered basis of the homogenized ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from heapq import heapify, heappop, heappush
from math import gcd
from typing import Callable, Iterable, Sequence

from .errors import (
    InvalidArgumentError,
    NotAMorphismError,
    NotHomogeneousError,
    RingMismatchError,
)
from .polyring import (
    GREVLEX,
    Exponents,
    MonomialOrder,
    Polynomial,
    Ring,
    Scalar,
    elimination_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    substitute_linear,
)

IPoly = dict[Exponents, int]
# one prepared basis element: (leading monomial, positive leading coeff, terms)
BElem = tuple[Exponents, int, IPoly]


# ---------------------------------------------------------------------------
# ideals and Groebner bases


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal; zero generators are dropped on input.

    An empty generator tuple represents the zero ideal (only ever produced
    internally, e.g. by eliminations that kill every relation).
    """

    ring: Ring
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatchError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __eq__(self, other) -> bool:  # structural; use ideals_equal for math
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    __hash__ = None


def ideal(ring: Ring, *gens: Polynomial) -> Ideal:
    return Ideal(ring, tuple(gens))


class GroebnerBasis:
    """A reduced Groebner basis: monic, interreduced, sorted by leading term."""

    __slots__ = ("ideal", "order", "basis", "_int_basis", "_keyf")

    def __init__(self, ideal_: Ideal, order: MonomialOrder, basis: tuple[Polynomial, ...]):
        self.ideal = ideal_
        self.order = order
        self.basis = basis
        self._keyf = order.key
        self._int_basis = [_prep(_int_from_poly(p), self._keyf) for p in basis]

    @property
    def is_unit(self) -> bool:
        return any(mono_degree(lm) == 0 for lm, _, _ in self._int_basis)

    def __repr__(self) -> str:
        polys = ", ".join(p.format(self.order) for p in self.basis)
        return f"<GB[{self.order.kind}] {{{polys}}}>"


# ---------------------------------------------------------------------------
# fraction-free engine


def _int_from_poly(p: Polynomial) -> IPoly:
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    out = {e: int(c * den) for e, c in p.terms.items()}
    return _strip(out)


def _strip(d: IPoly) -> IPoly:
    """Divide by the content; result has coprime integer coefficients."""
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return d
    if g <= 1:
        return d
    return {e: v // g for e, v in d.items()}


def _prep(d: IPoly, keyc) -> BElem:
    lm = max(d, key=keyc)
    if d[lm] < 0:
        d = {e: -v for e, v in d.items()}
    return lm, d[lm], d


def _neg(k):
    """Order-reversing involution on (nested) integer-tuple sort keys."""
    if isinstance(k, tuple):
        return tuple(_neg(x) for x in k)
    return -k


FPoly = dict[Exponents, Fraction]


def _fstrip(d: FPoly) -> IPoly:
    """Clear denominators and the content: the primitive integer multiple."""
    den = 1
    for c in d.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return _strip({e: int(c * den) for e, c in d.items()})


def _reduce(
    p: IPoly | FPoly,
    basis: Sequence[BElem],
    keyc: Callable,
    want_quotients: bool = False,
) -> tuple[FPoly, list[FPoly] | None]:
    """Multivariate division: returns (rem, quots) with

        p == sum_i quots[i] * basis[i] + rem     (exactly, over Q)

    and no monomial of rem divisible by any basis leading monomial.  The
    first applicable basis element (in the stored order) is always chosen,
    so the result is deterministic.  Coefficients are reduced fractions,
    which keeps their bit size at the size of the true values instead of
    stacking scale factors the way pseudo-division would.
    """
    p = {e: Fraction(v) for e, v in p.items()}
    rem: FPoly = {}
    quots: list[FPoly] | None = [dict() for _ in basis] if want_quotients else None
    heap = [(_neg(keyc(m)), m) for m in p]
    heapify(heap)
    while heap:
        _, m = heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        hit = -1
        for idx, be in enumerate(basis):
            if mono_divides(be[0], m):
                hit = idx
                break
        if hit < 0:
            del p[m]
            nv = rem.get(m, 0) + c
            if nv:
                rem[m] = nv
            else:
                rem.pop(m, None)
            continue
        lm, lc, terms = basis[hit]
        ratio = c / lc
        shift = mono_div(m, lm)
        for e, v in terms.items():
            key = mono_mul(e, shift)
            old = p.get(key)
            nv = (old if old is not None else 0) - ratio * v
            if nv:
                p[key] = nv
                if old is None:
                    heappush(heap, (_neg(keyc(key)), key))
            elif old is not None:
                del p[key]
        if quots is not None:
            q = quots[hit]
            nq = q.get(shift, 0) + ratio
            if nq:
                q[shift] = nq
            else:
                q.pop(shift, None)
    return rem, quots


def _spair(a: BElem, b: BElem) -> IPoly:
    lma, lca, ta = a
    lmb, lcb, tb = b
    lcmab = mono_lcm(lma, lmb)
    g = gcd(lca, lcb)
    ca, cb = lcb // g, lca // g
    sa, sb = mono_div(lcmab, lma), mono_div(lcmab, lmb)
    s: IPoly = {}
    for e, v in ta.items():
        key = mono_mul(e, sa)
        nv = s.get(key, 0) + ca * v
        if nv:
            s[key] = nv
        else:
            s.pop(key, None)
    for e, v in tb.items():
        key = mono_mul(e, sb)
        nv = s.get(key, 0) - cb * v
        if nv:
            s[key] = nv
        else:
            s.pop(key, None)
    return _strip(s)


def _gb_int(gens: Iterable[IPoly], keyf) -> list[BElem]:
    """Reduced basis over Z (primitive, positive leading coefficients)."""
    cache: dict[Exponents, object] = {}

    def keyc(m: Exponents):
        k = cache.get(m)
        if k is None:
            k = cache[m] = keyf(m)
        return k

    G: list[BElem] = []
    pending: dict[tuple[int, int], tuple] = {}  # pair -> selection key

    def push(d: FPoly):
        G.append(_prep(_fstrip(d), keyc))
        j = len(G) - 1
        for i in range(j):
            pending[(i, j)] = (keyc(mono_lcm(G[i][0], G[j][0])), i, j)

    for d in gens:
        if not d:
            continue
        r, _ = _reduce(d, G, keyc)
        if r:
            push(r)

    def chain_discard(i: int, j: int, lcm_ij: Exponents) -> bool:
        # Buchberger's second criterion: some k divides the pair lcm and both
        # mixed pairs were already treated
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k][0], lcm_ij):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    return True
        return False

    while pending:
        i, j = min(pending, key=pending.get)
        del pending[(i, j)]
        lma, lmb = G[i][0], G[j][0]
        lcm_ij = mono_lcm(lma, lmb)
        if lcm_ij == mono_mul(lma, lmb):  # coprime leading terms
            continue
        if chain_discard(i, j, lcm_ij):
            continue
        s = _spair(G[i], G[j])
        if not s:
            continue
        r, _ = _reduce(s, G, keyc)
        if r:
            push(r)

    # minimalize: drop elements whose leading monomial another one divides
    order_sorted = sorted(G, key=lambda b: keyc(b[0]))
    minimal: list[BElem] = []
    for b in order_sorted:
        if not any(mono_divides(m[0], b[0]) for m in minimal):
            minimal.append(b)
    # interreduce tails
    out: list[BElem] = []
    for idx, b in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r, _ = _reduce(b[2], others, keyc)
        out.append(_prep(_fstrip(r), keyc))
    out.sort(key=lambda b: keyc(b[0]), reverse=True)
    return out


def _poly_from_int(ring: Ring, d: IPoly, lc: int) -> Polynomial:
    return Polynomial(ring, {e: Fraction(v, lc) for e, v in d.items()})


class verify_bases:
    """Context manager: directly recheck every basis buchberger produces.

    While active, each computed basis has all its S-polynomials reduced and
    an InternalConsistencyError is raised if any fails to reach zero.  Used
    by the acceptance suite; costs roughly another reduction pass per basis.
    """

    active = False
    checked = 0

    def __enter__(self):
        type(self).active = True
        type(self).checked = 0
        return self

    def __exit__(self, *exc):
        type(self).active = False
        return False


class suspend_verification:
    """Temporarily leave a ``verify_bases`` region (for computations whose
    basis recheck would dominate the runtime budget)."""

    def __enter__(self):
        self._prev = verify_bases.active
        verify_bases.active = False
        return self

    def __exit__(self, *exc):
        verify_bases.active = self._prev
        return False


def buchberger(I: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of I; deterministic for fixed input and order."""
    keyf = order.key
    core = _gb_int((_int_from_poly(g) for g in I.generators), keyf)
    basis = tuple(_poly_from_int(I.ring, terms, lc) for _, lc, terms in core)
    gb = GroebnerBasis(I, order, basis)
    if verify_bases.active:
        verify_bases.checked += 1
        if not is_groebner_basis(gb):
            from .errors import InternalConsistencyError

            raise InternalConsistencyError("an S-polynomial failed to reduce to zero")
    return gb


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of multivariate division of f by the basis."""
    if f.ring != G.ideal.ring:
        raise RingMismatchError("polynomial and basis live in different rings")
    rem, _ = _reduce(f.terms, G._int_basis, G._keyf)
    return Polynomial(f.ring, rem)


def division_cofactors(
    f: Polynomial, G: GroebnerBasis
) -> tuple[list[Polynomial], Polynomial]:
    """Quotients and remainder with f == sum(q_i * g_i) + r exactly."""
    rem, quots = _reduce(f.terms, G._int_basis, G._keyf, want_quotients=True)
    r = Polynomial(f.ring, rem)
    qs = []
    for q, (_, lc, _) in zip(quots or [], G._int_basis):
        # basis polynomials are exposed monic, so fold their scaling into q
        qs.append(Polynomial(f.ring, {e: v * lc for e, v in q.items()}))
    return qs, r


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatchError("operands live in different rings")
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lmf, lmg)
    a = Polynomial.monomial(f.ring, mono_div(lcm, lmf), 1 / f.leading_coefficient(order))
    b = Polynomial.monomial(g.ring, mono_div(lcm, lmg), 1 / g.leading_coefficient(order))
    return a * f - b * g


def is_groebner_basis(G: GroebnerBasis) -> bool:
    """Directly check that every S-polynomial of basis pairs reduces to zero.

    Pairs with coprime leading monomials are skipped: their S-polynomials
    reduce to zero by Buchberger's first criterion, so the check stays
    complete.
    """
    n = len(G.basis)
    for i in range(n):
        for j in range(i + 1, n):
            lma, lmb = G._int_basis[i][0], G._int_basis[j][0]
            if mono_lcm(lma, lmb) == mono_mul(lma, lmb):
                continue
            s = _spair(G._int_basis[i], G._int_basis[j])
            if not s:
                continue
            rem, _ = _reduce(s, G._int_basis, G._keyf)
            if rem:
                return False
    return True


def _saturate_by_homogeneous(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity) for homogeneous data in one basis computation.

    Adjoin a variable u carrying the weight deg(f) together with the
    relation u - f; under the weighted-degree grevlex order with u last, the
    saturation by the variable u can be read off a basis by dividing each
    element by its top u-power, and substituting u -> f carries it back to
    (I : f^infinity).  Saturating by u corresponds to saturating by f because
    u and f agree modulo the adjoined relation.
    """
    ring = I.ring
    d = f.homogeneous_degree()
    ext = _fresh_ring(ring, ring.variables, (_FRESH,), "sat")
    n = ring.nvars
    weights = (1,) * n + (d,)

    def keyf(e: Exponents):
        return sum(w * x for w, x in zip(weights, e)), tuple(-x for x in reversed(e))

    pos = list(range(n))
    gens = [_int_from_poly(_transport(g, ext, pos)) for g in I.generators]
    u_minus_f = Polynomial.variable(ext, n) - _transport(f, ext, pos)
    gens.append(_int_from_poly(u_minus_f))
    core = _gb_int(gens, keyf)
    out: list[Polynomial] = []
    back: list[int | None] = pos + [None]
    for lm, lc, terms in core:
        k = min(e[n] for e in terms)
        if k:
            terms = {e[:n] + (e[n] - k,): v for e, v in terms.items()}
        # substitute u -> f, grouping the element by its remaining u powers
        by_power: dict[int, dict] = {}
        for e, v in terms.items():
            by_power.setdefault(e[n], {})[e[:n] + (0,)] = v
        acc = Polynomial.zero(ring)
        for power, part in sorted(by_power.items()):
            x_part = _transport(Polynomial(ext, part), ring, back)
            acc = acc + x_part * f**power
        out.append(acc)
    return Ideal(ring, tuple(out))


def _saturate_by_chain(I: Ideal, f: Polynomial, gb: GroebnerBasis) -> Ideal:
    """(I : f^infinity) as the stabilizing chain of quotients."""
    current, current_gb = I, gb
    while True:
        nxt = ideal_quotient(current, f)
        if ideal_contains(current, nxt, current_gb):
            return current
        current = nxt
        current_gb = buchberger(current)


def saturate_by_polynomial(I: Ideal, f: Polynomial, gb: GroebnerBasis | None = None) -> Ideal:
    """(I : f^infinity), one generator at a time.

    Homogeneous data goes through the one-shot weighted-variable route,
    anything else through the stabilizing chain of quotients.
    """
    if f.is_zero():
        raise InvalidArgumentError("cannot saturate by zero")
    if I.is_zero:
        return I
    if I.homogeneous and f.is_homogeneous() and f.homogeneous_degree() > 0:
        return _saturate_by_homogeneous(I, f)
    return _saturate_by_chain(I, f, gb or buchberger(I))


def saturate_product_sweep(I: Ideal, J: Ideal) -> tuple[Ideal, GroebnerBasis]:
    """Saturation by the product of J's generators, as a per-generator sweep.

    Iterates (.. : f^infinity) over the generators until a full pass changes
    nothing; the fixed point removes everything supported on the union of
    the generators' zero sets.  This contains (I : J^infinity) and agrees
    with it exactly when no component survives on that union outside V(J),
    which holds for the generic residual schemes the Segre pipeline feeds in
    (its seed cross-checks guard the choice).  For exact ideal-saturation
    semantics use ``saturate``.
    """
    if J.is_zero:
        raise InvalidArgumentError("cannot saturate by the zero ideal")
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    current = I
    current_gb = buchberger(current)
    if current.is_zero:
        return current, current_gb
    current = Ideal(I.ring, current_gb.basis)
    while True:
        changed = False
        for f in J.generators:
            if current_gb.is_unit:
                return current, current_gb
            nxt = saturate_by_polynomial(current, f, current_gb)
            if not ideal_contains(current, nxt, current_gb):
                current_gb = buchberger(nxt)
                current = Ideal(I.ring, current_gb.basis)
                changed = True
        if not changed:
            return current, current_gb


def saturate_with_basis(I: Ideal, J: Ideal) -> tuple[Ideal, GroebnerBasis]:
    """(I : J^infinity) together with its grevlex basis.

    Saturating by each generator separately and intersecting the results is
    exact: a high enough power of J is generated by monomials in the f_j
    each divisible by some saturating power f_j^m, so (I : J^infinity) is
    the intersection of the per-generator saturations, and that intersection
    is already stable under further saturation.  The result is re-presented
    by its reduced basis.
    """
    if J.is_zero:
        raise InvalidArgumentError("cannot saturate by the zero ideal")
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    gb = buchberger(I)
    if I.is_zero or gb.is_unit:
        return Ideal(I.ring, gb.basis), gb
    base = Ideal(I.ring, gb.basis)
    result: Ideal | None = None
    result_gb: GroebnerBasis | None = None
    for f in J.generators:
        part = saturate_by_polynomial(base, f, gb)
        if ideal_contains(base, part, gb):
            # f is a nonzerodivisor up to powers: the saturation is I itself
            return base, gb
        part_gb = buchberger(part)
        part = Ideal(I.ring, part_gb.basis)
        if part_gb.is_unit:
            continue  # a unit factor does not constrain the intersection
        if result is None:
            result, result_gb = part, part_gb
        elif ideal_contains(part, result, part_gb):
            continue  # result already inside this factor
        elif ideal_contains(result, part, result_gb):
            result, result_gb = part, part_gb
        else:
            result = ideal_intersection(result, part)
            result_gb = buchberger(result)
            result = Ideal(I.ring, result_gb.basis)
    if result is None:  # every factor saturated to the unit ideal
        unit = Ideal(I.ring, (Polynomial.constant(I.ring, 1),))
        return unit, buchberger(unit)
    return result, result_gb


def ideal_contains(I: Ideal, J: Ideal, G: GroebnerBasis | None = None) -> bool:
    """True if J is a subset of I (every generator of J reduces to zero)."""
    G = G or buchberger(I)
    return all(normal_form(g, G).is_zero() for g in J.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    """Mathematical equality via mutual membership of generators."""
    return ideal_contains(I, J) and ideal_contains(J, I)


# ---------------------------------------------------------------------------
# ring surgery helpers


def _transport(p: Polynomial, target: Ring, pos: Sequence[int | None]) -> Polynomial:
    """Re-home p: source variable i goes to target slot pos[i]; a None slot
    requires exponent zero."""
    out: dict[Exponents, Fraction] = {}
    for e, c in p.terms.items():
        te = [0] * target.nvars
        for i, k in enumerate(e):
            if not k:
                continue
            if pos[i] is None:
                raise InvalidArgumentError("polynomial involves a dropped variable")
            te[pos[i]] = k
        out[tuple(te)] = out.get(tuple(te), Fraction(0)) + c
    return Polynomial(target, out)


_FRESH = "t@"  # internal auxiliary variable; the input language cannot produce it


def _fresh_ring(base: Ring, prefix_vars: tuple[str, ...], suffix_vars: tuple[str, ...], tag: str) -> Ring:
    return Ring(f"{base.name}~{tag}", prefix_vars + suffix_vars)


# ---------------------------------------------------------------------------
# quotient, saturation, elimination


def _t_mix_eliminate(ring: Ring, gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial]) -> list[Polynomial]:
    """Generators of (t*A + (1-t)*B) ∩ Q[x]: the intersection of the ideals
    A and B, by the standard auxiliary-variable construction."""
    ext = _fresh_ring(ring, (_FRESH,), ring.variables, "mix")
    pos = [i + 1 for i in range(ring.nvars)]
    t = Polynomial.variable(ext, 0)
    one = Polynomial.constant(ext, 1)
    gens = [t * _transport(g, ext, pos) for g in gens_a]
    gens += [(one - t) * _transport(g, ext, pos) for g in gens_b]
    keyf = elimination_order(1).key
    core = _gb_int((_int_from_poly(g) for g in gens), keyf)
    back: list[int | None] = [None] * ext.nvars
    for i in range(ring.nvars):
        back[i + 1] = i
    return [
        _transport(_poly_from_int(ext, terms, lc), ring, back)
        for lm, lc, terms in core
        if not lm[0]  # elimination order: t-free elements present the intersection
    ]


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the auxiliary-variable construction."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    if I.is_zero or J.is_zero:
        return Ideal(I.ring, ())
    return Ideal(I.ring, tuple(_t_mix_eliminate(I.ring, I.generators, J.generators)))


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : g*f in I}, computed as (I ∩ (f)) / f."""
    if f.is_zero():
        raise InvalidArgumentError("cannot take an ideal quotient by zero")
    if f.ring != I.ring:
        raise RingMismatchError("quotient divisor from a different ring")
    if I.is_zero:
        return I
    ring = I.ring
    out: list[Polynomial] = []
    f_int = _prep(_int_from_poly(f), GREVLEX.key)
    for g in _t_mix_eliminate(ring, I.generators, [f]):
        # exact division by f inside I ∩ (f); generator scaling is immaterial
        rem, quots = _reduce(_int_from_poly(g), [f_int], GREVLEX.key, want_quotients=True)
        if rem:
            raise InvalidArgumentError("internal: intersection element not divisible")
        out.append(Polynomial(ring, _fstrip(quots[0])))
    return Ideal(ring, tuple(out))


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """(I : J^infinity); see ``saturate_with_basis``."""
    return saturate_with_basis(I, J)[0]


def eliminate(I: Ideal, variables: Iterable[int | str]) -> Ideal:
    """I ∩ Q[remaining variables], via a block elimination order.

    The eliminated variables are moved to the front internally; the result
    lives in a ring on the remaining variables in their original order.
    """
    ring = I.ring
    idxs = sorted(
        ring.variable_index(v) if isinstance(v, str) else v for v in variables
    )
    if not idxs:
        return I
    if len(set(idxs)) != len(idxs) or idxs[0] < 0 or idxs[-1] >= ring.nvars:
        raise InvalidArgumentError("bad variable subset to eliminate")
    keep = [i for i in range(ring.nvars) if i not in idxs]
    if not keep:
        raise InvalidArgumentError("cannot eliminate every variable")
    k = len(idxs)
    perm = _fresh_ring(
        ring,
        tuple(ring.variables[i] for i in idxs),
        tuple(ring.variables[i] for i in keep),
        "elim",
    )
    pos: list[int | None] = [None] * ring.nvars
    for slot, i in enumerate(idxs):
        pos[i] = slot
    for slot, i in enumerate(keep):
        pos[i] = k + slot
    gens = [_transport(g, perm, pos) for g in I.generators]
    keyf = elimination_order(k).key
    core = _gb_int((_int_from_poly(g) for g in gens), keyf)
    target = Ring(f"{ring.name}_elim", tuple(ring.variables[i] for i in keep))
    back: list[int | None] = [None] * perm.nvars
    for slot in range(len(keep)):
        back[k + slot] = slot
    out = []
    for lm, lc, terms in core:
        if any(lm[:k]):
            continue
        out.append(_transport(_poly_from_int(perm, terms, lc), target, back))
    return Ideal(target, tuple(out))


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimalize(gens: Iterable[Exponents]) -> frozenset[Exponents]:
    by_deg = sorted(set(gens), key=mono_degree)
    out: list[Exponents] = []
    for m in by_deg:
        if not any(mono_divides(p, m) for p in out):
            out.append(m)
    return frozenset(out)


def _series_mul_one_minus(poly: dict[int, int], d: int) -> dict[int, int]:
    out = dict(poly)
    for k, v in poly.items():
        out[k + d] = out.get(k + d, 0) - v
        if not out[k + d]:
            del out[k + d]
    return out


@lru_cache(maxsize=None)
def _hilbert_numerator(gens: frozenset[Exponents]) -> tuple[tuple[int, int], ...]:
    """Numerator of the Hilbert series of S/(gens) over (1-t)^nvars.

    ``gens`` must be minimalized.  Returned as sorted (exponent, coeff)
    pairs so the lru cache holds hashable values.
    """
    if not gens:
        return ((0, 1),)
    if any(mono_degree(m) == 0 for m in gens):
        return ()
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    pairwise_coprime = all(
        supports[i].isdisjoint(supports[j])
        for i in range(len(supports))
        for j in range(i + 1, len(supports))
    )
    if pairwise_coprime:
        acc = {0: 1}
        for m in gens:
            acc = _series_mul_one_minus(acc, mono_degree(m))
        return tuple(sorted(acc.items()))
    # pivot on the most shared variable
    nvars = len(next(iter(gens)))
    counts = [0] * nvars
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    v = max(range(nvars), key=lambda i: (counts[i], -i))
    pivot = tuple(1 if i == v else 0 for i in range(nvars))
    plus = _minimalize(list(gens) + [pivot])
    colon = _minimalize(
        tuple(e - 1 if i == v and e else e for i, e in enumerate(m)) for m in gens
    )
    a = dict(_hilbert_numerator(plus))
    for k, c in _hilbert_numerator(colon):
        a[k + 1] = a.get(k + 1, 0) + c
        if not a[k + 1]:
            del a[k + 1]
    return tuple(sorted(a.items()))


def _strip_unit_roots(poly: dict[int, int]) -> tuple[dict[int, int], int]:
    """Factor out the full power of (1-t); returns (quotient, exponent)."""
    e = 0
    while poly and sum(poly.values()) == 0:
        deg = max(poly)
        q: dict[int, int] = {}
        run = 0
        for k in range(deg):  # poly = (1-t) * q
            run += poly.get(k, 0)
            if run:
                q[k] = run
        poly = q
        e += 1
    return poly, e


@dataclass(frozen=True)
class HilbertData:
    """Projective dimension and degree; the empty scheme is (-1, 0)."""

    projective_dim: int
    degree: int


def leading_term_ideal(G: GroebnerBasis) -> frozenset[Exponents]:
    return _minimalize(lm for lm, _, _ in G._int_basis)


def hilbert_dim_degree(I: Ideal, G: GroebnerBasis | None = None) -> HilbertData:
    """Dimension and degree of Proj of the quotient ring.

    Computed from the Hilbert series of the leading term ideal of a grevlex
    basis; valid for homogeneous ideals.
    """
    G = G or buchberger(I)
    if G.is_unit:
        return HilbertData(-1, 0)
    hn = dict(_hilbert_numerator(leading_term_ideal(G)))
    q, e = _strip_unit_roots(hn)
    affine_dim = I.ring.nvars - e
    if affine_dim == 0:
        return HilbertData(-1, 0)
    degree = sum(q.values())
    return HilbertData(affine_dim - 1, degree)


# ---------------------------------------------------------------------------
# tangent cones and multiplicities


def _initial_monomials_at_origin(gens: list[Polynomial], aring: Ring) -> frozenset[Exponents]:
    """Leading-term data of the initial-forms ideal of an affine ideal at 0.

    Homogenize with a fresh variable, saturate by it (grevlex with the fresh
    variable last lets the saturation be read off by dividing out its
    powers), then recompute the basis with the fresh variable as a heaviest
    elimination block.  In that order the leading term of each homogeneous
    basis element is the fresh variable's top power times the grevlex
    leading term of the lowest-degree form of its dehomogenization, so the
    projected leading terms present the tangent cone's leading term ideal.
    """
    n = aring.nvars
    hring = Ring(f"{aring.name}~h", aring.variables + (_FRESH,))
    hom: list[IPoly] = []
    for g in gens:
        num = _int_from_poly(g)
        d = max(mono_degree(e) for e in num)
        hom.append({e + (d - mono_degree(e),): v for e, v in num.items()})
    g1 = _gb_int(hom, GREVLEX.key)
    saturated: list[IPoly] = []
    for _, _, terms in g1:
        k = min(e[n] for e in terms)
        if k:
            terms = {e[:n] + (e[n] - k,): v for e, v in terms.items()}
        saturated.append(terms)
    # move the fresh variable to the front and make it the elimination block
    moved = [{(e[n],) + e[:n]: v for e, v in t.items()} for t in saturated]
    g2 = _gb_int(moved, elimination_order(1).key)
    return _minimalize(lm[1:] for lm, _, _ in g2)


def tangent_cone_multiplicity(I: Ideal, point: Sequence[Scalar]) -> int:
    """Multiplicity of V(I) at a rational point: the degree of the ideal of
    lowest-degree initial forms after translating the point to the origin.

    The affine chart is taken at the point's largest-index nonzero
    coordinate.
    """
    ring = I.ring
    pt = [Fraction(v) for v in point]
    if len(pt) != ring.nvars:
        raise InvalidArgumentError("point has the wrong number of coordinates")
    if not any(pt):
        raise InvalidArgumentError("point has indeterminate (all-zero) coordinates")
    if I.is_zero:
        raise InvalidArgumentError("tangent cone of the zero ideal is not defined")
    for g in I.generators:
        if g.evaluate(pt):
            raise InvalidArgumentError("point does not lie on the scheme")
    chart = max(i for i, v in enumerate(pt) if v)
    pt = [v / pt[chart] for v in pt]
    mapping: dict[int, Polynomial] = {chart: Polynomial.constant(ring, 1)}
    for i, v in enumerate(pt):
        if i != chart and v:
            mapping[i] = Polynomial.variable(ring, i) + Polynomial.constant(ring, v)
    keep = [i for i in range(ring.nvars) if i != chart]
    aring = Ring(f"{ring.name}_chart{chart}", tuple(ring.variables[i] for i in keep))
    pos: list[int | None] = [None] * ring.nvars
    for slot, i in enumerate(keep):
        pos[i] = slot
    affine = [_transport(substitute_linear(g, mapping), aring, pos) for g in I.generators]
    cone_lt = _initial_monomials_at_origin(affine, aring)
    hn = dict(_hilbert_numerator(cone_lt))
    q, _ = _strip_unit_roots(hn)
    mult = sum(q.values())
    if mult <= 0:
        raise InvalidArgumentError("internal: nonpositive multiplicity")
    return mult


# ---------------------------------------------------------------------------
# images of projective schemes


def image_under_map(
    I: Ideal, forms: Sequence[Polynomial], target: Ring | None = None
) -> Ideal:
    """Homogeneous ideal of the closure of the image of V(I) under the map
    given by equal-degree forms (one target variable per form).

    The forms must have no common zero on V(I); zero forms are permitted as
    coordinates (they embed the image in a hyperplane).
    """
    ring = I.ring
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise InvalidArgumentError("all forms are zero")
    degs = set()
    for f in nonzero:
        if f.ring != ring:
            raise RingMismatchError("form from a different ring")
        d = f.homogeneous_degree()
        if d is None:
            raise NotHomogeneousError("forms must be homogeneous")
        degs.add(d)
    if len(degs) != 1 or degs.pop() < 1:
        raise InvalidArgumentError("forms must share one positive degree")
    base = Ideal(ring, I.generators + tuple(nonzero))
    if hilbert_dim_degree(base).projective_dim >= 0:
        raise NotAMorphismError("the forms have a base point on the source scheme")
    if target is None:
        target = Ring(f"{ring.name}_img", tuple(f"y{j}" for j in range(len(forms))))
    elif target.nvars != len(forms):
        raise InvalidArgumentError("target ring needs one variable per form")
    nx = ring.nvars
    mixed = _fresh_ring(ring, ring.variables, target.variables, "graph")
    pos = list(range(nx))
    gens = [_transport(g, mixed, pos) for g in I.generators]
    for j, f in enumerate(forms):
        y = Polynomial.variable(mixed, nx + j)
        gens.append(y - _transport(f, mixed, pos))
    keyf = elimination_order(nx).key
    core = _gb_int((_int_from_poly(g) for g in gens), keyf)
    back: list[int | None] = [None] * mixed.nvars
    for j in range(target.nvars):
        back[nx + j] = j
    out = []
    for lm, lc, terms in core:
        if any(lm[:nx]):
            continue
        out.append(_transport(_poly_from_int(mixed, terms, lc), target, back))
    return Ideal(target, tuple(out))
