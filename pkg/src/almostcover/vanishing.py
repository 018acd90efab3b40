"""Vanishing ideals of finite point sets via evaluation-matrix interpolation.

Candidate monomials are scanned in increasing deglex order.  A monomial whose
evaluation vector on the points is independent of those accepted so far
becomes a standard monomial; a dependent one yields a monic basis polynomial
whose tail is supported on earlier standard monomials.  Skipping candidates
divisible by an already-found leading monomial keeps the scan finite and
makes the emitted basis the reduced one: exactly one basis element per
minimal non-standard monomial.

The standard monomials form a basis of the functions on the point set, so
their count always equals the number of points, and the set is closed under
division.  Both facts are relied on downstream and checked in the tests.
"""

from __future__ import annotations

import heapq

from .errors import InvariantError
from .linalg import PointSet, rref
from .polyring import DEGLEX, Polynomial, mono_deg, mono_divides, mono_one, reduce_poly


def _evaluate_mono(mono, point, one):
    v = one
    for x, e in zip(point, mono):
        if e:
            v = v * x**e
            if not v:
                break
    return v


class IndicatorExpansion:
    """Coefficients of one point's indicator function over the standard monomials."""

    __slots__ = ("point", "coefficients")

    def __init__(self, point, coefficients):
        self.point = tuple(point)
        self.coefficients = dict(coefficients)

    def degree(self) -> int:
        return max(mono_deg(m) for m in self.coefficients)

    def to_polynomial(self, field, nvars) -> Polynomial:
        return Polynomial(field, nvars, dict(self.coefficients))

    def __repr__(self):
        return f"IndicatorExpansion(point={self.point}, terms={len(self.coefficients)})"


class GroebnerData:
    """Reduced deglex basis of a vanishing ideal plus its standard monomials."""

    __slots__ = ("source", "order", "basis", "sm", "_inverse")

    def __init__(self, source: PointSet, basis, sm):
        self.source = source
        self.order = DEGLEX
        self.basis = tuple(basis)
        self.sm = tuple(sm)
        self._inverse = None

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Unique representative of f supported on the standard monomials."""
        if f.field != self.source.field:
            raise TypeError(f"field mismatch: {f.field!r} vs {self.source.field!r}")
        if f.nvars != self.source.dim:
            raise ValueError("variable count does not match the ambient dimension")
        return reduce_poly(f, self.basis, self.order)

    def _indicator_matrix_inverse(self):
        # columns of the inverse evaluation matrix are the indicator
        # expansions; computed once, reused for every point
        if self._inverse is None:
            field = self.source.field
            one, zero = field.one(), field.zero()
            npts = len(self.source)
            rows = []
            for j, p in enumerate(self.source.points):
                row = [_evaluate_mono(m, p, one) for m in self.sm]
                row.extend(one if i == j else zero for i in range(npts))
                rows.append(row)
            rank, reduced, _ = rref(rows)
            if rank != npts:
                raise InvariantError("evaluation matrix of standard monomials is singular")
            self._inverse = tuple(row[npts:] for row in reduced[:npts])
        return self._inverse

    def indicator_expansion(self, point) -> IndicatorExpansion:
        """Expansion of the function that is 1 at the point, 0 at the others."""
        idx = self.source.index_of(point)
        inv = self._indicator_matrix_inverse()
        coeffs = {}
        for i, mono in enumerate(self.sm):
            c = inv[i][idx]
            if c:
                coeffs[mono] = c
        return IndicatorExpansion(self.source.points[idx], coeffs)

    def separating_degree(self, point) -> int:
        """Degree of the normal form of the point's indicator function.

        This is the least possible degree of a polynomial vanishing on all
        other points of the set but not at this one.
        """
        return self.indicator_expansion(point).degree()

    def max_sm_degree(self) -> int:
        return max(mono_deg(m) for m in self.sm)

    def check_invariants(self):
        """Verify the structural guarantees; raises InvariantError on failure."""
        V = self.source
        field = V.field
        one = field.one()
        if len(self.sm) != len(V):
            raise InvariantError("standard monomial count differs from point count")
        sm_set = set(self.sm)
        nvars = V.dim
        for m in self.sm:
            for i in range(nvars):
                if m[i]:
                    d = tuple(e - 1 if j == i else e for j, e in enumerate(m))
                    if d not in sm_set:
                        raise InvariantError(f"standard monomials not divisor-closed at {m}")
        for g in self.basis:
            lm, lc = g.leading_term(self.order)
            if lc != one:
                raise InvariantError("basis element is not monic")
            if lm in sm_set:
                raise InvariantError("leading monomial clashes with a standard monomial")
            for m in g.terms:
                if m != lm and m not in sm_set:
                    raise InvariantError("basis tail leaves the standard monomials")
            for p in V.points:
                if g.evaluate(p):
                    raise InvariantError("basis element does not vanish on the point set")
        if V.is_zero_one():
            if any(e > 1 for m in self.sm for e in m):
                raise InvariantError("non-square-free standard monomial on a 0-1 set")

    def __repr__(self):
        return f"GroebnerData(points={len(self.source)}, basis={len(self.basis)})"


def buchberger_moller(V: PointSet) -> GroebnerData:
    """Groebner data of the vanishing ideal of a finite point set."""
    field = V.field
    pts = V.points
    npts = len(pts)
    nvars = V.dim
    one = field.one()
    zero_one = V.is_zero_one()
    if zero_one:
        # on a 0-1 set a monomial evaluates to 1 exactly when its support
        # lies inside the point's support, so evaluation is a bitmask test
        supports = [sum(1 << i for i, x in enumerate(p) if x) for p in pts]
        fzero, fone = field.zero(), one

    sm = []
    basis = []
    lms = []
    # echelon rows over the point coordinates: (pivot, vector, combination)
    rows = []

    def reduce_candidate(mono):
        if zero_one:
            msup = sum(1 << i for i, e in enumerate(mono) if e)
            vec = [fone if msup & ~s == 0 else fzero for s in supports]
        else:
            vec = [_evaluate_mono(mono, p, one) for p in pts]
        combo = {mono: one}
        for pivot, rvec, rcombo in rows:
            f = vec[pivot]
            if f:
                vec = [a - f * b for a, b in zip(vec, rvec)]
                for m, c in rcombo.items():
                    cur = combo.get(m)
                    cur = -f * c if cur is None else cur - f * c
                    if cur:
                        combo[m] = cur
                    else:
                        combo.pop(m, None)
        return vec, combo

    start = mono_one(nvars)
    heap = [(DEGLEX.key(start), start)]
    seen = {start}
    while heap and len(sm) < npts:
        _, mono = heapq.heappop(heap)
        if any(mono_divides(lm, mono) for lm in lms):
            continue
        vec, combo = reduce_candidate(mono)
        pivot = None
        for i, x in enumerate(vec):
            if x:
                pivot = i
                break
        if pivot is None:
            # dependent: the tracked combination vanishes on every point and
            # is monic in the current monomial by construction
            basis.append(Polynomial(field, nvars, combo))
            lms.append(mono)
        else:
            pv = vec[pivot]
            if pv != 1:
                vec = [x / pv for x in vec]
                combo = {m: c / pv for m, c in combo.items()}
            rows.append((pivot, vec, combo))
            sm.append(mono)
            for i in range(nvars):
                child = tuple(e + 1 if j == i else e for j, e in enumerate(mono))
                if child not in seen:
                    seen.add(child)
                    heapq.heappush(heap, (DEGLEX.key(child), child))
    if len(sm) != npts:
        raise InvariantError("monomial scan terminated before spanning the point set")
    # once |sm| = |V| the standard monomials span all functions on the set,
    # so every remaining border candidate must be dependent
    while heap:
        _, mono = heapq.heappop(heap)
        if any(mono_divides(lm, mono) for lm in lms):
            continue
        vec, combo = reduce_candidate(mono)
        if any(vec):
            raise InvariantError("independent monomial found beyond a spanning set")
        basis.append(Polynomial(field, nvars, combo))
        lms.append(mono)
    return GroebnerData(V, basis, sm)


def standard_monomials(V: PointSet):
    """Standard monomials of the vanishing ideal, in increasing deglex order."""
    return list(buchberger_moller(V).sm)


def indicator_expansion(data: GroebnerData, point) -> IndicatorExpansion:
    return data.indicator_expansion(point)


def normal_form(data: GroebnerData, f: Polynomial) -> Polynomial:
    return data.normal_form(f)


def separating_degree(V: PointSet, point) -> int:
    """Least degree of a polynomial vanishing on V minus the point, nonzero there."""
    return buchberger_moller(V).separating_degree(point)
