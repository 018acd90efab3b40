"""Exact affine linear algebra: point sets, row reduction, spans, hyperplanes.

Points are plain tuples of field scalars.  All operations are pure and all
results are canonical: row reduction picks the leftmost pivot in the first
eligible row, and hyperplanes are scaled so their first nonzero normal entry
is one, making every representation unique and reproducible.
"""

from __future__ import annotations

from .fields import Field, scalar_field

Point = tuple


def _entry_field(entries) -> Field:
    field = None
    for x in entries:
        f = scalar_field(x)
        if field is None:
            field = f
        elif field != f:
            raise TypeError(f"mixed fields: {field!r} vs {f!r}")
    if field is None:
        raise ValueError("cannot infer field from no entries")
    return field


def rref(matrix):
    """Reduced row echelon form of a rectangular scalar matrix.

    Returns (rank, rows, pivot_columns) with rows as tuples.  Pivot choice is
    the leftmost nonzero column, first eligible row; pivots are normalized to
    one and cleared above and below.
    """
    rows = [list(r) for r in matrix]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        _entry_field(x for r in rows for x in r)
    else:
        width = 0
    pivots = []
    r = 0
    for c in range(width):
        hit = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                hit = i
                break
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return r, tuple(tuple(row) for row in rows), tuple(pivots)


class PointSet:
    """Ordered, duplicate-free points sharing one field and dimension."""

    __slots__ = ("field", "dim", "points", "_index")

    def __init__(self, field: Field, dim: int, points):
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        pts = []
        index = {}
        for p in points:
            p = tuple(field.scalar(x) for x in p)
            if len(p) != dim:
                raise ValueError(f"point {p} has {len(p)} coordinates, expected {dim}")
            if p in index:
                raise ValueError(f"duplicate point at positions {index[p]} and {len(pts)}")
            index[p] = len(pts)
            pts.append(p)
        if not pts:
            raise ValueError("point set must be nonempty")
        self.field = field
        self.dim = dim
        self.points = tuple(pts)
        self._index = index

    @classmethod
    def from_ints(cls, field: Field, rows) -> "PointSet":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ValueError("point set must be nonempty")
        return cls(field, len(rows[0]), rows)

    def index_of(self, point) -> int:
        p = tuple(self.field.scalar(x) for x in point)
        i = self._index.get(p)
        if i is None:
            raise ValueError(f"point {self.format_point(p)} is not in the set")
        return i

    def __contains__(self, point) -> bool:
        try:
            self.index_of(point)
            return True
        except (ValueError, TypeError):
            return False

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.field == other.field
            and self.dim == other.dim
            and self.points == other.points
        )

    def is_zero_one(self) -> bool:
        zero, one = self.field.zero(), self.field.one()
        return all(x == zero or x == one for p in self.points for x in p)

    def format_point(self, point) -> str:
        return "(" + ", ".join(self.field.format(x) for x in point) + ")"

    def __repr__(self):
        return f"PointSet({self.field!r}, dim={self.dim}, n={len(self.points)})"


class AffineSubspace:
    """base + span(directions), directions kept in reduced echelon form."""

    __slots__ = ("base", "rows", "pivots")

    def __init__(self, base, rows, pivots):
        self.base = tuple(base)
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    def residual(self, vector):
        """Remainder of a vector after eliminating against the direction rows."""
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, point) -> bool:
        if len(point) != len(self.base):
            raise ValueError("dimension mismatch")
        return not any(self.residual([x - b for x, b in zip(point, self.base)]))

    def __repr__(self):
        return f"AffineSubspace(dim={self.dim}, ambient={len(self.base)})"


def affine_span(points) -> AffineSubspace:
    """Smallest affine subspace containing the given nonempty points."""
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("affine span of no points")
    base = points[0]
    if any(len(p) != len(base) for p in points):
        raise ValueError("points of differing dimensions")
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return AffineSubspace(base, (), ())
    rank, rows, pivots = rref(diffs)
    return AffineSubspace(base, rows[:rank], pivots)


class Hyperplane:
    """Affine hyperplane given by the form normal . x - offset.

    The representation is canonical: the first nonzero normal entry is
    scaled to one, so equal hyperplanes compare equal.
    """

    __slots__ = ("normal", "offset")

    def __init__(self, normal, offset):
        normal = tuple(normal)
        field = _entry_field(normal)
        offset = field.scalar(offset)
        lead = None
        for x in normal:
            if x:
                lead = x
                break
        if lead is None:
            raise ValueError("hyperplane normal must be nonzero")
        if lead != 1:
            normal = tuple(x / lead for x in normal)
            offset = offset / lead
        self.normal = normal
        self.offset = offset

    @classmethod
    def from_ints(cls, field: Field, normal, offset) -> "Hyperplane":
        return cls([field.scalar(x) for x in normal], field.scalar(offset))

    def evaluate(self, point):
        """normal . point - offset; zero exactly on the hyperplane."""
        if len(point) != len(self.normal):
            raise ValueError("dimension mismatch")
        return sum(a * x for a, x in zip(self.normal, point)) - self.offset

    def contains(self, point) -> bool:
        return not self.evaluate(point)

    def as_text(self) -> str:
        field = scalar_field(self.normal[0])
        parts = []
        for i, a in enumerate(self.normal):
            if not a:
                continue
            name = f"x{i + 1}"
            txt = field.format(a)
            if txt == "1":
                term = name
            elif txt == "-1":
                term = f"-{name}"
            else:
                term = f"{txt}*{name}"
            if parts:
                if term.startswith("-"):
                    parts.append(f" - {term[1:]}")
                else:
                    parts.append(f" + {term}")
            else:
                parts.append(term)
        return "".join(parts) + f" = {field.format(self.offset)}"

    def __eq__(self, other):
        return (
            isinstance(other, Hyperplane)
            and self.normal == other.normal
            and self.offset == other.offset
        )

    def __hash__(self):
        return hash((self.normal, self.offset))

    def __repr__(self):
        return f"Hyperplane({self.as_text()})"


def hyperplane_containing_avoiding(subspace: AffineSubspace, point) -> Hyperplane:
    """A hyperplane containing the subspace but not the point.

    The normal comes from the canonical null-space basis of the direction
    rows (read off the reduced echelon form, free columns in ascending
    order); the first basis vector not orthogonal to point - base works.
    Such a vector always exists when the point is outside the subspace.
    """
    n = subspace.ambient_dim
    if len(point) != n:
        raise ValueError("dimension mismatch")
    if subspace.dim >= n:
        raise ValueError("no proper hyperplane contains a full-dimensional subspace")
    field = scalar_field(subspace.base[0])
    zero, one = field.zero(), field.one()
    diff = [x - b for x, b in zip(point, subspace.base)]
    pivot_row = {p: i for i, p in enumerate(subspace.pivots)}
    for free in range(n):
        if free in pivot_row:
            continue
        normal = [zero] * n
        normal[free] = one
        for p, i in pivot_row.items():
            normal[p] = -subspace.rows[i][free]
        if sum(a * d for a, d in zip(normal, diff)):
            offset = sum(a * b for a, b in zip(normal, subspace.base))
            return Hyperplane(normal, offset)
    raise ValueError("inseparable: the point lies in the subspace")


class AffineMap:
    """Invertible affine transformation x -> matrix . x + translation."""

    __slots__ = ("matrix", "translation")

    def __init__(self, matrix, translation):
        self.matrix = tuple(tuple(row) for row in matrix)
        self.translation = tuple(translation)
        n = len(self.translation)
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix shape does not match translation length")
        rank, _, _ = rref(self.matrix)
        if rank != n:
            raise ValueError("affine map matrix is singular")

    @classmethod
    def from_ints(cls, field: Field, matrix, translation) -> "AffineMap":
        return cls(
            [[field.scalar(x) for x in row] for row in matrix],
            [field.scalar(x) for x in translation],
        )

    def apply(self, point):
        if len(point) != len(self.translation):
            raise ValueError("dimension mismatch")
        return tuple(
            sum(a * x for a, x in zip(row, point)) + t
            for row, t in zip(self.matrix, self.translation)
        )

    def __repr__(self):
        return f"AffineMap(n={len(self.translation)})"
