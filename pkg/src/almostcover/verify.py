"""Verification suites tying the solvers to the known exact values.

Each check function returns a list of CheckResult records; the CLI's
``verify`` command groups them into named suites and the acceptance tests
run them all.  Exact cover computations are memoized per family so that
overlapping suites do not redo the expensive searches.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .bounds import (
    ball_size,
    certificate_lower_bound,
    check_binomial_inequalities,
    cor_bounds,
    counting_lower_bound,
    cube_counting_lower_bound,
)
from .cover import ac_numbers, min_almost_cover, orbit_reduce, verify_cover
from .families import FamilySpec, generate, sharp_cover_vnk, symmetry_generators, szw_sharp_polynomial
from .fields import QQ
from .linalg import PointSet
from .polyring import DEGLEX, mono_deg
from .vanishing import buchberger_moller


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name, passed, detail=""):
    return CheckResult(name=name, passed=bool(passed), detail=detail)


@lru_cache(maxsize=None)
def _family_points(desc: str) -> PointSet:
    return generate(FamilySpec.parse(desc))


@lru_cache(maxsize=None)
def _family_groebner(desc: str):
    return buchberger_moller(_family_points(desc))


@lru_cache(maxsize=None)
def _family_ac(desc: str, symmetric: bool = False):
    """Exact per-point cover numbers of a family, solved once."""
    V = _family_points(desc)
    gens = symmetry_generators(FamilySpec.parse(desc)) if symmetric else None
    return ac_numbers(V, generators=gens)


@lru_cache(maxsize=None)
def _family_point_cover(desc: str, idx: int):
    V = _family_points(desc)
    return min_almost_cover(V, V.points[idx])


def check_vnk_standard_monomials(max_n: int = 6):
    """Standard monomials of vnk:n:k are exactly the square-free ones of
    degree at most k, in increasing deglex order."""
    results = []
    for n in range(1, max_n + 1):
        for k in range(n):
            data = _family_groebner(f"vnk:{n}:{k}")
            expected = []
            for size in range(k + 1):
                for combo in itertools.combinations(range(n), size):
                    expected.append(tuple(1 if i in combo else 0 for i in range(n)))
            expected.sort(key=DEGLEX.key)
            ok = list(data.sm) == expected
            results.append(
                _result(
                    f"standard-monomials vnk:{n}:{k}",
                    ok,
                    f"|sm| = {len(data.sm)}",
                )
            )
    return results


def check_separating_degrees(max_n: int = 5):
    """Adding one outside cube vertex to vnk:n:k makes its separating degree
    exactly k+1, via one extra standard monomial supported inside the vertex."""
    results = []
    for n in range(1, max_n + 1):
        for k in range(n):
            base = _family_points(f"vnk:{n}:{k}")
            base_sm = set(_family_groebner(f"vnk:{n}:{k}").sm)
            failures = []
            cases = 0
            for vertex in itertools.product((0, 1), repeat=n):
                if sum(vertex) <= k:
                    continue
                cases += 1
                point = tuple(QQ.from_int(x) for x in vertex)
                W = PointSet(QQ, n, list(base.points) + [point])
                data = buchberger_moller(W)
                extra = set(data.sm) - base_sm
                reasons = []
                if data.separating_degree(point) != k + 1:
                    reasons.append(f"degree {data.separating_degree(point)}")
                if len(extra) != 1:
                    reasons.append(f"{len(extra)} extra monomials")
                else:
                    mono = next(iter(extra))
                    if mono_deg(mono) != k + 1 or any(e > 1 for e in mono):
                        reasons.append(f"extra monomial {mono}")
                    elif any(e and not v for e, v in zip(mono, vertex)):
                        reasons.append(f"support of {mono} leaves the vertex")
                if reasons:
                    failures.append(f"{vertex}: {', '.join(reasons)}")
            results.append(
                _result(
                    f"separating-degree vnk:{n}:{k}",
                    not failures,
                    f"{cases} vertices" if not failures else "; ".join(failures[:3]),
                )
            )
    return results


def check_vnk_cover_sharpness(max_n: int = 4):
    """The level hyperplanes are an optimal almost cover of vnk at the origin
    and the exact maximum cover number is k; the 0-1 counting bound jumps to
    k+1 one point past the family size."""
    results = []
    for n in range(1, max_n + 1):
        for k in range(n):
            desc = f"vnk:{n}:{k}"
            V = _family_points(desc)
            origin = V.points[0]
            witness = sharp_cover_vnk(n, k)
            ok_witness = len(witness) == k and verify_cover(V, origin, witness)
            acn = _family_ac(desc)
            ok_exact = acn.optimal and acn.ac_max == k
            ok_bound = cube_counting_lower_bound(n, len(V) + 1).value == k + 1
            results.append(
                _result(
                    f"cover-sharpness {desc}",
                    ok_witness and ok_exact and ok_bound,
                    f"AC = {acn.ac_max}, witness size {len(witness)}",
                )
            )
    return results


def check_cube_alon_furedi(max_n: int = 4):
    """Every cube vertex needs exactly n hyperplanes, matching the counting
    bound at full size."""
    results = []
    for n in range(1, max_n + 1):
        desc = f"cube:{n}"
        acn = _family_ac(desc)
        ok = acn.optimal and all(v == n for v in acn.per_point)
        ok_bound = cube_counting_lower_bound(n, 2**n).value == n
        results.append(
            _result(
                f"alon-furedi {desc}",
                ok and ok_bound,
                f"per-point values {sorted(set(acn.per_point))}",
            )
        )
    return results


JNQ_GRID = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3))


def check_jnq_sharpness(grid=JNQ_GRID):
    """The non-decreasing-sequence families have exact cover number q-1 and
    sit exactly on the counting bound's boundary."""
    results = []
    for n, q in grid:
        desc = f"jnq:{n}:{q}"
        acn = _family_ac(desc)
        ok_exact = acn.optimal and acn.ac_max == q - 1 and acn.ac_min == q - 1
        ok_bound = counting_lower_bound(n, ball_size(n, q - 1)).value == q - 1
        results.append(
            _result(
                f"jnq-sharpness {desc}",
                ok_exact and ok_bound,
                f"AC = {acn.ac_max}, counting bound {counting_lower_bound(n, len(_family_points(desc))).value}",
            )
        )
    return results


AG_GRID = ((2, 2), (2, 3), (3, 2))


def check_ag_jamison(grid=AG_GRID):
    """Full affine spaces need (q-1)n hyperplanes at every point, and the
    closed-set search agrees with exhaustive hyperplane enumeration."""
    results = []
    for n, q in grid:
        desc = f"ag:{n}:{q}"
        V = _family_points(desc)
        expected = (q - 1) * n
        ok = True
        details = []
        for point in V.points:
            closed = min_almost_cover(V, point, mode="closed")
            exhaustive = min_almost_cover(V, point, mode="hyperplanes")
            if not (
                closed.optimal
                and exhaustive.optimal
                and closed.size == exhaustive.size == expected
            ):
                ok = False
                details.append(
                    f"{V.format_point(point)}: closed {closed.size}, "
                    f"exhaustive {exhaustive.size}"
                )
        results.append(
            _result(
                f"jamison {desc}",
                ok,
                f"all {len(V)} points at {expected}" if ok else "; ".join(details[:3]),
            )
        )
    return results


def check_permutohedron(max_n: int = 4):
    """Permutation-vertex families have the expected constant cover number:
    3 for three coordinates, 6 for four."""
    results = []
    if max_n >= 3:
        acn = _family_ac("perm:3")
        ok = acn.optimal and set(acn.per_point) == {3}
        results.append(
            _result("permutohedron perm:3", ok, f"per-point values {sorted(set(acn.per_point))}")
        )
    if max_n >= 4:
        spec = FamilySpec.parse("perm:4")
        V = _family_points("perm:4")
        partition = orbit_reduce(V, symmetry_generators(spec))
        first = _family_point_cover("perm:4", 0)
        second = _family_point_cover("perm:4", 1)
        ok = (
            partition.is_transitive
            and first.optimal
            and second.optimal
            and first.size == second.size == 6
        )
        results.append(
            _result(
                "permutohedron perm:4",
                ok,
                f"transitive = {partition.is_transitive}, sizes {first.size}, {second.size}",
            )
        )
    return results


def check_orbit_constancy():
    """Transitive symmetry makes per-point cover numbers constant; checked by
    independent solves on families with a declared symmetry group."""
    results = []
    for desc in ("cube:2", "cube:3", "ag:2:3", "perm:3"):
        spec = FamilySpec.parse(desc)
        V = _family_points(desc)
        partition = orbit_reduce(V, symmetry_generators(spec))
        values = {min_almost_cover(V, V.points[idx]).size for idx in (0, len(V) - 1)}
        ok = partition.is_transitive and len(values) == 1
        results.append(
            _result(
                f"orbit-constancy {desc}",
                ok,
                f"transitive = {partition.is_transitive}, values {sorted(values)}",
            )
        )
    return results


def _chain_instances(include_perm4: bool = False):
    specs = []
    for n in range(1, 5):
        for k in range(n):
            specs.append((f"vnk:{n}:{k}", False))
        specs.append((f"cube:{n}", False))
    specs.extend((f"jnq:{n}:{q}", False) for n, q in JNQ_GRID)
    specs.extend((f"ag:{n}:{q}", False) for n, q in AG_GRID)
    specs.append(("perm:3", False))
    if include_perm4:
        specs.append(("perm:4", True))
    return specs


def check_bound_ordering(include_perm4: bool = False):
    """On every verified family the bounds form the expected chain:
    e-based <= counting <= 0-1 counting <= certificate <= exact, with
    certificate equality on the sharp families."""
    results = []
    tight = {"vnk", "cube", "jnq"}
    for desc, symmetric in _chain_instances(include_perm4):
        V = _family_points(desc)
        acn = _family_ac(desc, symmetric)
        exact = acn.ac_max
        data = _family_groebner(desc)
        count = counting_lower_bound(V.dim, len(V)).value
        cert = certificate_lower_bound(V, groebner=data).value
        _, cor_e = cor_bounds(V.dim, len(V))
        chain = [cor_e.value, count]
        if V.is_zero_one():
            chain.append(cube_counting_lower_bound(V.dim, len(V)).value)
        chain.extend([cert, exact])
        ok = all(a <= b for a, b in zip(chain, chain[1:])) and acn.optimal
        kind = desc.split(":")[0]
        if kind in tight and cert != exact:
            ok = False
        results.append(
            _result(
                f"bound-chain {desc}",
                ok,
                " <= ".join(str(x) for x in chain),
            )
        )
    return results


def check_binomial_grid(max_n: int = 30):
    """Both strict binomial inequalities certify for every 1 <= k <= n."""
    results = []
    bad = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            verdicts = check_binomial_inequalities(n, k)
            if not all(verdicts.values()):
                bad.append((n, k, verdicts))
    results.append(
        _result(
            f"binomial-inequalities n<={max_n}",
            not bad,
            f"{max_n * (max_n + 1) // 2} pairs" if not bad else f"failures {bad[:3]}",
        )
    )
    degenerate = check_binomial_inequalities(4, -1)
    results.append(
        _result(
            "binomial-inequalities degenerate k=-1",
            degenerate.get("bin_upper2", False),
            "C(3,4) = 0 case",
        )
    )
    return results


def check_szw_polynomials(max_n: int = 5):
    """The product of level forms reduces to zero over vnk and is nonzero at
    every other cube vertex."""
    results = []
    for n in range(1, max_n + 1):
        for k in range(n):
            f = szw_sharp_polynomial(n, k)
            data = _family_groebner(f"vnk:{n}:{k}")
            nf = data.normal_form(f)
            ok = nf.is_zero()
            nonzero_outside = all(
                f.evaluate(tuple(QQ.from_int(x) for x in vertex))
                for vertex in itertools.product((0, 1), repeat=n)
                if sum(vertex) > k
            )
            results.append(
                _result(
                    f"szw-sharp vnk:{n}:{k}",
                    ok and nonzero_outside,
                    f"degree {f.degree()}",
                )
            )
    return results


SUITES = {
    "main": "Separating degrees and standard monomial structure of the 0-1 families",
    "main2": "Counting bound sharpness on the non-decreasing-sequence families",
    "main3": "0-1 counting bound sharpness: level covers and the cube",
    "main4": "Constancy of per-point cover numbers under transitive symmetry",
    "sharpness": "Explicit sharp covers match the exact optima",
    "binomial": "Certified strict binomial upper bounds",
    "szw": "The sharp vanishing polynomial of the level families",
}


def run_suite(name: str, max_n: int | None = None):
    """All checks of one suite, honouring an optional grid cap."""

    def cap(default):
        return default if max_n is None else min(default, max_n)

    if name == "main":
        return check_vnk_standard_monomials(cap(6)) + check_separating_degrees(cap(5))
    if name == "main2":
        grid = tuple((n, q) for n, q in JNQ_GRID if max_n is None or n <= max_n)
        return check_jnq_sharpness(grid)
    if name == "main3":
        return check_vnk_cover_sharpness(cap(4)) + check_cube_alon_furedi(cap(4))
    if name == "main4":
        return check_orbit_constancy() + check_permutohedron(cap(4))
    if name == "sharpness":
        return check_vnk_cover_sharpness(cap(4)) + check_jnq_sharpness()
    if name == "binomial":
        return check_binomial_grid(cap(30))
    if name == "szw":
        return check_szw_polynomials(cap(5))
    raise ValueError(f"unknown suite {name!r} (choose from {', '.join(SUITES)})")
