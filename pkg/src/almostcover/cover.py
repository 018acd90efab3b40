"""Exact minimum almost-covers of finite point sets by affine hyperplanes.

An almost cover for (V, v) is a set of hyperplanes whose union contains
every point of V except v and misses v.  Over an infinite field the
hyperplanes themselves cannot be enumerated, so the search runs over
*traces* instead: the subsets of V minus v that a hyperplane avoiding v
can cut out.  The reduction is lossless, because

  * every hyperplane trace T = meet(H, V) with v not on H is affinely
    closed inside V (T equals the meet of its own span with V) and
    avoids v, while

  * every affinely closed C avoiding v has v outside span(C) - otherwise
    v would lie in meet(span(C), V) = C - so a hyperplane containing
    span(C) and missing v exists.

Minimum covers by hyperplanes therefore coincide with minimum covers by
maximal affinely closed sets avoiding v, and those are enumerated exactly.

Over a finite field an exhaustive-hyperplane mode enumerates every
hyperplane directly and serves as a cross-check of the closed-set mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import InvariantError
from .linalg import (
    AffineMap,
    Hyperplane,
    PointSet,
    affine_span,
    hyperplane_containing_avoiding,
)
from .vanishing import buchberger_moller

__all__ = [
    "AffineMap",
    "TraceFamily",
    "CoverSolution",
    "OrbitPartition",
    "ACNumbers",
    "trace_family",
    "hyperplane_trace_family",
    "min_almost_cover",
    "verify_cover",
    "orbit_reduce",
    "ac_numbers",
]


@dataclass(frozen=True)
class TraceFamily:
    """Maximal candidate traces for covering V minus one excluded point.

    Traces are tuples of point indices into the source set, sorted
    ascending, and the family itself is sorted by those tuples.  In
    exhaustive mode each trace carries the hyperplane that produced it.
    """

    source: PointSet
    excluded_index: int
    traces: tuple
    hyperplanes: tuple | None = None

    @property
    def excluded(self):
        return self.source.points[self.excluded_index]


@dataclass(frozen=True)
class CoverSolution:
    """A minimum (or best-found) almost cover at one excluded point."""

    excluded: tuple
    size: int
    hyperplanes: tuple
    lower_bound_used: int
    optimal: bool
    node_count: int = 0


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple
    is_transitive: bool


@dataclass
class ACNumbers:
    """Per-point almost-cover numbers with their max and min."""

    per_point: tuple
    ac_max: int
    ac_min: int
    optimal: bool
    solutions: dict = dataclass_field(default_factory=dict)
    orbits: OrbitPartition | None = None


def _maximal_closed_sets(V: PointSet, v_idx: int):
    """All maximal affinely closed subsets of V avoiding the excluded point.

    Breadth-first closure enumeration: start from singletons and extend one
    point at a time.  Each node keeps, for every point outside it, the
    residual of (point - base) against the node's echelonized direction
    rows, so an extension's closure is read off by a parallelism test and
    the residuals propagate in O(|V| n) per extension.
    """
    pts = V.points
    m = len(pts)
    others = [j for j in range(m) if j != v_idx]
    maximal = []
    seen = set()
    queue = []
    for j in others:
        base = pts[j]
        res = [None] * m
        for w in range(m):
            if w != j:
                res[w] = [a - b for a, b in zip(pts[w], base)]
        key = frozenset((j,))
        seen.add(key)
        queue.append((key, res))
    head = 0
    while head < len(queue):
        key, res = queue[head]
        head += 1
        alive = False
        absorbed = set()
        for u in others:
            if u in key or u in absorbed:
                continue
            r = res[u]
            pivot = next(i for i, x in enumerate(r) if x)
            rp = r[pivot]
            rhat = r if rp == 1 else [x / rp for x in r]
            joins = []
            contains_v = False
            for w in range(m):
                rw = res[w]
                if rw is None:
                    continue
                lam = rw[pivot]
                if lam and all(a == lam * b for a, b in zip(rw, rhat)):
                    if w == v_idx:
                        contains_v = True
                        break
                    joins.append(w)
            if contains_v:
                continue
            alive = True
            absorbed.update(joins)
            new_key = key.union(joins)
            if new_key not in seen:
                seen.add(new_key)
                join_set = set(joins)
                new_res = [None] * m
                for w in range(m):
                    rw = res[w]
                    if rw is None or w in join_set:
                        continue
                    lam = rw[pivot]
                    new_res[w] = [a - lam * b for a, b in zip(rw, rhat)] if lam else rw
                queue.append((new_key, new_res))
        if not alive:
            maximal.append(tuple(sorted(key)))
    maximal.sort()
    return maximal


def trace_family(V: PointSet, point) -> TraceFamily:
    """The maximal affinely closed subsets of V avoiding the given point."""
    v_idx = V.index_of(point)
    traces = _maximal_closed_sets(V, v_idx)
    return TraceFamily(source=V, excluded_index=v_idx, traces=tuple(traces))


def hyperplane_trace_family(V: PointSet, point) -> TraceFamily:
    """Traces of every hyperplane of a finite-field ambient space.

    Only available over GF(p); enumerates all (p^n - 1)/(p - 1) * p
    hyperplanes in canonical form, keeps the nonempty traces avoiding the
    excluded point, and prunes duplicates and non-maximal traces.
    """
    field = V.field
    if field.is_rational:
        raise ValueError("exhaustive hyperplane enumeration needs a finite field")
    v_idx = V.index_of(point)
    v_pt = V.points[v_idx]
    n = V.dim
    zero, one = field.zero(), field.one()
    elements = field.elements()

    def normals():
        for lead in range(n):
            tail_len = n - lead - 1
            stack = [()]
            for _ in range(tail_len):
                stack = [t + (e,) for t in stack for e in elements]
            for tail in stack:
                yield (zero,) * lead + (one,) + tail

    best = {}
    for normal in normals():
        for offset in elements:
            H = Hyperplane(normal, offset)
            if H.contains(v_pt):
                continue
            trace = tuple(j for j, p in enumerate(V.points) if j != v_idx and H.contains(p))
            if trace and trace not in best:
                best[trace] = H
    # drop traces strictly inside another trace
    keys = sorted(best, key=len, reverse=True)
    kept = []
    kept_sets = []
    for t in keys:
        s = set(t)
        if not any(s < k for k in kept_sets):
            kept.append(t)
            kept_sets.append(s)
    kept.sort()
    return TraceFamily(
        source=V,
        excluded_index=v_idx,
        traces=tuple(kept),
        hyperplanes=tuple(best[t] for t in kept),
    )


def _min_cover_over_masks(masks, nelements, floor, budget):
    """Exact minimum set cover over bitmasks by branch and bound.

    Branches on a least-covered uncovered element, trying its traces in
    decreasing size; prunes with the uncovered/max-trace-size ratio and
    stops early when the certificate floor is attained.  Returns
    (chosen index list, optimal, nodes).
    """
    full = (1 << nelements) - 1
    sizes = [mask.bit_count() for mask in masks]
    cover_lists = []
    for e in range(nelements):
        owners = [i for i, mask in enumerate(masks) if mask >> e & 1]
        owners.sort(key=lambda i: (-sizes[i], i))
        cover_lists.append(owners)

    chosen = []
    cov = 0
    while cov != full:
        best_i, best_gain = None, 0
        for i, mask in enumerate(masks):
            gain = (mask & ~cov).bit_count()
            if gain > best_gain:
                best_i, best_gain = i, gain
        if best_i is None:
            raise InvariantError("trace family does not cover the ground set")
        chosen.append(best_i)
        cov |= masks[best_i]
    best = sorted(chosen)
    best_size = len(best)
    if best_size <= floor:
        return best, True, 0

    state = {"nodes": 0, "aborted": False, "best": best, "best_size": best_size}

    def dfs(cov, stack):
        state["nodes"] += 1
        if budget is not None and state["nodes"] > budget:
            state["aborted"] = True
            return True
        if cov == full:
            if len(stack) < state["best_size"]:
                state["best"] = sorted(stack)
                state["best_size"] = len(stack)
            return state["best_size"] <= floor
        depth = len(stack)
        if depth + 1 >= state["best_size"]:
            return False
        rem_mask = full & ~cov
        rem = rem_mask.bit_count()
        maxcov = 0
        for mask in masks:
            c = (mask & rem_mask).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0 or depth + -(-rem // maxcov) >= state["best_size"]:
            return False
        pick, pick_freq = None, None
        scan = rem_mask
        while scan:
            e = (scan & -scan).bit_length() - 1
            freq = len(cover_lists[e])
            if pick_freq is None or freq < pick_freq:
                pick, pick_freq = e, freq
            scan &= scan - 1
        for i in cover_lists[pick]:
            if masks[i] & cov == masks[i]:
                continue
            stack.append(i)
            done = dfs(cov | masks[i], stack)
            stack.pop()
            if done:
                return True
            if depth + 1 >= state["best_size"]:
                break
        return False

    dfs(0, [])
    optimal = not state["aborted"] or state["best_size"] <= floor
    return state["best"], optimal, state["nodes"]


def realize_trace(V: PointSet, point, trace) -> Hyperplane:
    """A hyperplane through all the trace's points that avoids the given one."""
    span = affine_span([V.points[j] for j in trace])
    return hyperplane_containing_avoiding(span, tuple(V.field.scalar(x) for x in point))


def min_almost_cover(V: PointSet, point, budget=None, mode="closed") -> CoverSolution:
    """Exact smallest almost cover of (V, point), with witness hyperplanes."""
    v_idx = V.index_of(point)
    v_pt = V.points[v_idx]
    others = [j for j in range(len(V)) if j != v_idx]
    if not others:
        return CoverSolution(
            excluded=v_pt, size=0, hyperplanes=(), lower_bound_used=0, optimal=True
        )
    if mode == "closed":
        family = trace_family(V, v_pt)
    elif mode == "hyperplanes":
        family = hyperplane_trace_family(V, v_pt)
    else:
        raise ValueError(f"unknown solve mode {mode!r}")
    floor = buchberger_moller(V).separating_degree(v_pt)
    position = {j: i for i, j in enumerate(others)}
    masks = [sum(1 << position[j] for j in t) for t in family.traces]
    union = 0
    for mask in masks:
        union |= mask
    if union != (1 << len(others)) - 1:
        raise InvariantError("trace family does not cover the remaining points")
    chosen, optimal, nodes = _min_cover_over_masks(masks, len(others), floor, budget)
    if family.hyperplanes is not None:
        witnesses = tuple(family.hyperplanes[i] for i in chosen)
    else:
        witnesses = tuple(realize_trace(V, v_pt, family.traces[i]) for i in chosen)
    if not verify_cover(V, v_pt, witnesses):
        raise InvariantError("solver produced an invalid cover")
    if optimal and len(chosen) < floor:
        raise InvariantError("solver undercut the certificate lower bound")
    return CoverSolution(
        excluded=v_pt,
        size=len(chosen),
        hyperplanes=witnesses,
        lower_bound_used=floor,
        optimal=optimal,
        node_count=nodes,
    )


def verify_cover(V: PointSet, point, hyperplanes) -> bool:
    """True when the union covers every point of V except the given one."""
    v_pt = tuple(V.field.scalar(x) for x in point)
    for H in hyperplanes:
        if H.contains(v_pt):
            return False
    for u in V.points:
        if u == v_pt:
            continue
        if not any(H.contains(u) for H in hyperplanes):
            return False
    return True


def orbit_reduce(V: PointSet, generators) -> OrbitPartition:
    """Orbit partition of the points under the group the generators produce.

    Each generator must map the set bijectively onto itself; violations are
    reported with the offending point.  Orbits are listed by smallest
    member, each sorted ascending.
    """
    perms = []
    for g in generators:
        perm = []
        for p in V.points:
            image = g.apply(p)
            try:
                perm.append(V.index_of(image))
            except ValueError:
                raise ValueError(
                    "generator does not preserve the point set: maps "
                    f"{V.format_point(p)} to {V.format_point(image)}"
                ) from None
        if len(set(perm)) != len(perm):
            raise ValueError("generator is not injective on the point set")
        perms.append(perm)
    assigned = [None] * len(V)
    orbits = []
    for start in range(len(V)):
        if assigned[start] is not None:
            continue
        orbit = [start]
        assigned[start] = len(orbits)
        frontier = [start]
        while frontier:
            nxt = []
            for j in frontier:
                for perm in perms:
                    k = perm[j]
                    if assigned[k] is None:
                        assigned[k] = len(orbits)
                        orbit.append(k)
                        nxt.append(k)
            frontier = nxt
        orbits.append(tuple(sorted(orbit)))
    return OrbitPartition(orbits=tuple(orbits), is_transitive=len(orbits) == 1)


def ac_numbers(
    V: PointSet, budget=None, generators=None, mode="closed", threads=1
) -> ACNumbers:
    """Almost-cover numbers of every point: the per-point table, max and min.

    With symmetry generators, one representative per orbit is solved and the
    value shared across the orbit (covers map to covers under any affine
    symmetry of the set).
    """
    partition = None
    if generators:
        partition = orbit_reduce(V, generators)
        reps = [orbit[0] for orbit in partition.orbits]
    else:
        reps = list(range(len(V)))

    def solve(idx):
        return min_almost_cover(V, V.points[idx], budget=budget, mode=mode)

    if threads > 1 and len(reps) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            solutions = dict(zip(reps, pool.map(solve, reps)))
    else:
        solutions = {idx: solve(idx) for idx in reps}

    per_point = [None] * len(V)
    if partition is not None:
        for orbit in partition.orbits:
            value = solutions[orbit[0]].size
            for j in orbit:
                per_point[j] = value
    else:
        for idx, sol in solutions.items():
            per_point[idx] = sol.size
    return ACNumbers(
        per_point=tuple(per_point),
        ac_max=max(per_point),
        ac_min=min(per_point),
        optimal=all(sol.optimal for sol in solutions.values()),
        solutions=solutions,
        orbits=partition,
    )
