"""H- and V-representations over exact rationals.

Internally constraints are also handled as primitive integer rows
``(a_1, ..., a_d, b)``: ``a.x >= b`` for inequalities, ``a.x = b`` for
equalities.  Integer rows are what the elimination kernels operate on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

GE = ">="
EQ = "="
_RELATIONS = {">=": GE, "=": EQ, "==": EQ, "<=": "<="}


def primitive(row: Sequence[int]) -> tuple[int, ...]:
    g = gcd(*row)
    if g > 1:
        return tuple(x // g for x in row)
    return tuple(row)


def rational_row_to_int(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers by a positive factor."""
    values = [Fraction(x) for x in values]
    scale = lcm(*(x.denominator for x in values)) if values else 1
    return primitive([int(x * scale) for x in values])


def sign_canonical(row: Sequence[int]) -> tuple[int, ...]:
    for x in row:
        if x:
            return tuple(row) if x > 0 else tuple(-y for y in row)
    return tuple(row)


@dataclass(frozen=True)
class LinearConstraint:
    """``coeffs . x >= rhs`` or ``coeffs . x = rhs``."""

    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        rel = _RELATIONS.get(self.relation)
        if rel is None:
            raise ValueError(f"unknown relation {self.relation!r}")
        coeffs = tuple(Fraction(a) for a in self.coeffs)
        rhs = Fraction(self.rhs)
        if rel == "<=":
            coeffs, rhs, rel = tuple(-a for a in coeffs), -rhs, GE
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "relation", rel)

    @property
    def is_equality(self) -> bool:
        return self.relation == EQ

    def lhs(self, point) -> Fraction:
        return sum((a * Fraction(x) for a, x in zip(self.coeffs, point)), Fraction(0))

    def satisfied_by(self, point) -> bool:
        val = self.lhs(point)
        return val == self.rhs if self.is_equality else val >= self.rhs

    def satisfied_by_ray(self, ray) -> bool:
        val = self.lhs(ray)
        return val == 0 if self.is_equality else val >= 0

    def to_int_row(self) -> tuple[int, ...]:
        row = rational_row_to_int(self.coeffs + (self.rhs,))
        return sign_canonical(row) if self.is_equality else row

    @classmethod
    def from_int_row(cls, row, relation) -> LinearConstraint:
        return cls(tuple(Fraction(a) for a in row[:-1]), relation, Fraction(row[-1]))

    def format(self, names: Sequence[str]) -> str:
        terms = []
        for a, name in zip(self.coeffs, names):
            if a == 0:
                continue
            mag = abs(a)
            body = name if mag == 1 else f"{mag}*{name}"
            if not terms:
                terms.append(body if a > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if a > 0 else '-'} {body}")
        return f"{' '.join(terms) or '0'} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class HPolyhedron:
    """Finite system of linear constraints over named variables."""

    names: tuple[str, ...]
    constraints: tuple[LinearConstraint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for c in self.constraints:
            if len(c.coeffs) != len(self.names):
                raise ValueError(f"constraint has {len(c.coeffs)} coefficients, dimension is {len(self.names)}")

    @property
    def dimension(self) -> int:
        return len(self.names)

    @classmethod
    def from_rows(cls, names, ineqs=(), eqs=()) -> HPolyhedron:
        cons = [LinearConstraint.from_int_row(r, EQ) for r in eqs]
        cons += [LinearConstraint.from_int_row(r, GE) for r in ineqs]
        return cls(tuple(names), tuple(cons))

    @classmethod
    def whole_space(cls, names) -> HPolyhedron:
        return cls(tuple(names), ())

    @classmethod
    def empty(cls, names) -> HPolyhedron:
        d = len(tuple(names))
        return cls.from_rows(names, ineqs=[(0,) * d + (1,)])

    def int_rows(self):
        """(inequality rows, equality rows) as primitive integer tuples."""
        ineqs, eqs = [], []
        for c in self.constraints:
            (eqs if c.is_equality else ineqs).append(c.to_int_row())
        return ineqs, eqs

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def contains(self, point) -> bool:
        if len(point) != self.dimension:
            raise ValueError(f"point has {len(point)} coordinates, dimension is {self.dimension}")
        return all(c.satisfied_by(point) for c in self.constraints)

    def intersect(self, other: HPolyhedron) -> HPolyhedron:
        if other.names != self.names:
            raise ValueError("intersection needs identical variable lists")
        return HPolyhedron(self.names, self.constraints + other.constraints)

    def with_constraints(self, extra) -> HPolyhedron:
        return HPolyhedron(self.names, self.constraints + tuple(extra))

    def rename(self, names) -> HPolyhedron:
        names = tuple(names)
        if len(names) != self.dimension:
            raise ValueError("rename needs one name per variable")
        return HPolyhedron(names, self.constraints)

    def reorder(self, names) -> HPolyhedron:
        """Same set with coordinates permuted to the order of ``names``."""
        names = tuple(names)
        if sorted(names) != sorted(self.names):
            raise ValueError("reorder needs the same variable names")
        perm = [self.index(nm) for nm in names]
        cons = tuple(LinearConstraint(tuple(c.coeffs[j] for j in perm), c.relation, c.rhs) for c in self.constraints)
        return HPolyhedron(names, cons)

    def __str__(self):
        if not self.constraints:
            return "(whole space)"
        return "\n".join(c.format(self.names) for c in self.constraints)

    def dumps(self) -> str:
        lines = [" ".join(self.names)]
        for c in self.constraints:
            lines.append(" ".join([*(str(a) for a in c.coeffs), c.relation, str(c.rhs)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> HPolyhedron:
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty H-representation")
        names = tuple(lines[0].split())
        cons = []
        for lineno, line in enumerate(lines[1:], start=2):
            toks = line.split()
            if not toks:
                continue
            if len(toks) != len(names) + 2 or toks[-2] not in _RELATIONS:
                raise ValueError(f"line {lineno}: expected {len(names)} coefficients, relation, rhs")
            try:
                cons.append(LinearConstraint(tuple(Fraction(t) for t in toks[:-2]), toks[-2], Fraction(toks[-1])))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        return cls(names, tuple(cons))


def canonical_ray(ray) -> tuple[int, ...]:
    """Coprime integer direction; the sign (direction) is preserved."""
    return rational_row_to_int(ray)


@dataclass(frozen=True)
class VPolyhedron:
    """Vertices and extreme rays.  Empty vertex list means the empty set."""

    names: tuple[str, ...]
    vertices: tuple[tuple[Fraction, ...], ...] = ()
    rays: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        d = len(self.names)
        verts = tuple(sorted({tuple(Fraction(x) for x in p) for p in self.vertices}))
        rays = tuple(sorted({canonical_ray(r) for r in self.rays}))
        for p in verts + rays:
            if len(p) != d:
                raise ValueError("generator dimension mismatch")
        if any(not any(r) for r in rays):
            raise ValueError("rays must be nonzero")
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", rays)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    def dumps(self) -> str:
        lines = [" ".join(self.names)]
        lines += ["V " + " ".join(str(x) for x in p) for p in self.vertices]
        lines += ["R " + " ".join(str(x) for x in r) for r in self.rays]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> VPolyhedron:
        lines = text.splitlines()
        if not lines:
            raise ValueError("empty V-representation")
        names = tuple(lines[0].split())
        verts, rays = [], []
        for lineno, line in enumerate(lines[1:], start=2):
            toks = line.split()
            if not toks:
                continue
            if toks[0] not in ("V", "R") or len(toks) != len(names) + 1:
                raise ValueError(f"line {lineno}: expected 'V' or 'R' and {len(names)} coordinates")
            coords = tuple(Fraction(t) for t in toks[1:])
            (verts if toks[0] == "V" else rays).append(coords)
        return cls(names, tuple(verts), tuple(rays))
