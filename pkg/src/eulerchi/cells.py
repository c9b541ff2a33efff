"""Exact Euler calculus on finite cell decompositions.

A space is a finite list of open cells, each carrying only an id and a
dimension.  The Euler characteristic is the combinatorial one: an open
d-cell contributes (-1)^d.  It is finitely additive and multiplicative but
not homotopy invariant (an open interval has chi = -1, a half-open interval
has chi = 0, a closed interval has chi = 1).

Two modeling choices are deliberate and worth stating up front:

* Cells carry no attachment or adjacency data.  Everything computed here
  (chi, integrals of constructible functions, pushforwards) depends only on
  the multiset of cell dimensions, so boundary maps would be dead weight.
* No ambient embedding is stored.  chi of a definable set is independent of
  how it sits in Euclidean space, so the library works directly on
  decompositions and treats them as the space.

Maps between cell spaces (``CellMap``) are cell-to-cell assignments with
trivialized-fiber semantics: the fiber over a point of a target cell c
meets a source cell s assigned to c in a single open cell of dimension
dim(s) - dim(c).  That convention makes the Fubini identity
``integrate(pushforward(m, f)) == integrate(f)`` exact on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ValidationError

# Used to join ids when forming products; rejected in user-supplied ids so
# generated ids can never collide with input ones.
RESERVED_SEPARATOR = "⊗"  # ⊗


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int


@dataclass(frozen=True)
class CellSpace:
    """A finite disjoint union of open cells.  The empty space is allowed."""

    cells: tuple[Cell, ...] = ()

    def __post_init__(self):
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        seen: dict[str, int] = {}
        for i, c in enumerate(cells):
            if not isinstance(c, Cell):
                raise ValidationError(f"cells[{i}]: expected a Cell, got {type(c).__name__}")
            if not c.id:
                raise ValidationError(f"cells[{i}].id: empty id")
            if not isinstance(c.dim, int) or isinstance(c.dim, bool) or c.dim < 0:
                raise ValidationError(f"cells[{i}].dim: expected a non-negative integer, got {c.dim!r}")
            if c.id in seen:
                raise ValidationError(f"cells[{i}].id: duplicate id {c.id!r} (first at index {seen[c.id]})")
            seen[c.id] = i
        object.__setattr__(self, "_dims", {c.id: c.dim for c in cells})

    @classmethod
    def from_dims(cls, dims: Mapping[str, int]) -> "CellSpace":
        return cls(tuple(Cell(i, d) for i, d in dims.items()))

    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.cells)

    def dim_of(self, cell_id: str) -> int:
        try:
            return self._dims[cell_id]  # type: ignore[attr-defined]
        except KeyError:
            raise ValidationError(f"unknown cell id {cell_id!r}") from None

    def has_cell(self, cell_id: str) -> bool:
        return cell_id in self._dims  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.cells)


def chi(space: CellSpace) -> int:
    """Euler characteristic: the signed count sum((-1)^dim) over cells."""
    return sum(-1 if c.dim % 2 else 1 for c in space.cells)


@dataclass(frozen=True, eq=False)
class ConstructibleFunction:
    """An integer value per cell; the function is constant on each cell."""

    space: CellSpace
    values: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        vals = dict(self.values)
        for cid, v in vals.items():
            if not self.space.has_cell(cid):
                raise ValidationError(f"values: {cid!r} is not a cell of the space")
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"values[{cid!r}]: expected an integer, got {v!r}")
        missing = [c.id for c in self.space.cells if c.id not in vals]
        if missing:
            raise ValidationError(f"values: missing cells {missing}")
        object.__setattr__(self, "values", vals)

    def __call__(self, cell_id: str) -> int:
        return self.values[cell_id]

    @classmethod
    def constant(cls, space: CellSpace, c: int) -> "ConstructibleFunction":
        return cls(space, {cid: c for cid in space.ids()})


def integrate(f: ConstructibleFunction) -> int:
    """Integral of f with respect to chi: sum over cells of f(c) * (-1)^dim c.

    Equivalently sum_k k * chi({f = k}); the cell-wise sum is the faster
    route and is exact.
    """
    return sum(
        f.values[c.id] * (-1 if c.dim % 2 else 1) for c in f.space.cells
    )


# the level-set route walks every k up to max |f|; refuse runaway inputs
LEVELSET_VALUE_BOUND = 10**6


def integrate_levelset(f: ConstructibleFunction) -> int:
    """The same integral evaluated through level sets:

        sum_{k >= 0} [ chi({f > k}) - chi({f < -k}) ]

    computed literally, one k at a time.  Always equals ``integrate(f)``;
    kept as an independent route so the two can be checked against each
    other.
    """
    if not f.space.cells:
        return 0
    bound = max(abs(v) for v in f.values.values())
    if bound > LEVELSET_VALUE_BOUND:
        raise ValidationError(
            f"level-set integration walks every value up to {bound}; "
            f"values beyond {LEVELSET_VALUE_BOUND} are refused (use integrate)"
        )
    total = 0
    for k in range(bound):
        above = [cid for cid, v in f.values.items() if v > k]
        below = [cid for cid, v in f.values.items() if v < -k]
        total += chi(restrict(f.space, above)) - chi(restrict(f.space, below))
    return total


def product(x: CellSpace, y: CellSpace) -> CellSpace:
    """Product space: cells are pairs, ids joined by the reserved separator,
    dimensions add.  chi is multiplicative: chi(x*y) = chi(x)*chi(y).
    """
    for s in (x, y):
        for c in s.cells:
            if RESERVED_SEPARATOR in c.id:
                raise ValidationError(
                    f"cell id {c.id!r} contains the reserved separator {RESERVED_SEPARATOR!r}"
                )
    return CellSpace(
        tuple(
            Cell(f"{a.id}{RESERVED_SEPARATOR}{b.id}", a.dim + b.dim)
            for a in x.cells
            for b in y.cells
        )
    )


def restrict(x: CellSpace, keep: Iterable[str]) -> CellSpace:
    """Sub-collection of cells.  chi is additive across a partition."""
    keep = set(keep)
    unknown = keep - set(x.ids())
    if unknown:
        raise ValidationError(f"restrict: unknown cell ids {sorted(unknown)}")
    return CellSpace(tuple(c for c in x.cells if c.id in keep))


@dataclass(frozen=True, eq=False)
class CellMap:
    """A cell-to-cell map with trivialized fibers.

    ``assign`` sends each source cell to a target cell of dimension at most
    its own.  The fiber over a point of target cell c meets source cell s
    (with assign(s) = c) in one open cell of dimension dim(s) - dim(c);
    maps violating the dimension inequality cannot arise that way and are
    rejected at construction.
    """

    source: CellSpace
    target: CellSpace
    assign: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        assign = dict(self.assign)
        for sid, tid in assign.items():
            if not self.source.has_cell(sid):
                raise ValidationError(f"assign: {sid!r} is not a cell of the source")
            if not self.target.has_cell(tid):
                raise ValidationError(f"assign[{sid!r}]: {tid!r} is not a cell of the target")
            if self.source.dim_of(sid) < self.target.dim_of(tid):
                raise ValidationError(
                    f"assign[{sid!r}]: dimension {self.source.dim_of(sid)} "
                    f"maps onto higher dimension {self.target.dim_of(tid)}"
                )
        missing = [c.id for c in self.source.cells if c.id not in assign]
        if missing:
            raise ValidationError(f"assign: missing source cells {missing}")
        object.__setattr__(self, "assign", assign)

    @classmethod
    def identity(cls, space: CellSpace) -> "CellMap":
        return cls(space, space, {cid: cid for cid in space.ids()})


def fiber_chi(m: CellMap, target_cell: str) -> int:
    """chi of the fiber over (any point of) a target cell.

    Each source cell s over c contributes a (dim s - dim c)-cell to the
    fiber, so the value is sum (-1)^(dim s - dim c).
    """
    cdim = m.target.dim_of(target_cell)
    total = 0
    for s in m.source.cells:
        if m.assign[s.id] == target_cell:
            total += -1 if (s.dim - cdim) % 2 else 1
    return total


def pushforward(m: CellMap, f: ConstructibleFunction) -> ConstructibleFunction:
    """Fiberwise integration of f along m.

    (pushforward f)(c) = sum over s with assign(s) = c of
    f(s) * (-1)^(dim s - dim c).  Integrating the result over the target
    gives back integrate(f) exactly.
    """
    if f.space != m.source:
        raise ValidationError("pushforward: function space differs from map source")
    out = {cid: 0 for cid in m.target.ids()}
    for s in m.source.cells:
        tid = m.assign[s.id]
        sign = -1 if (s.dim - m.target.dim_of(tid)) % 2 else 1
        out[tid] += f.values[s.id] * sign
    return ConstructibleFunction(m.target, out)
