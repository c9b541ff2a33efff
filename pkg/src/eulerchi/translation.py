"""Finite group actions on rigid cell complexes, and the Euler
characteristics of the groupoids they generate.

A ``RigidGComplex`` is a finite group acting on a cell space by
dimension-preserving bijections of cells.  Rigidity, meaning an element
that maps a cell to itself fixes it pointwise, is a modeling assumption the
combinatorics cannot check; it is what makes fixed sets subcomplexes and
the fixed-point formulas below correct.  Complexes that are not rigid
(e.g. a reflection stabilizing an edge while flipping it) must be
subdivided before being encoded.

Five routes to the same integers live here and are cross-validated by the
test suite and the ``verify`` harness:

* ``chi_gamma_strata`` -- integrate homomorphism-quotient chi over the
  orbit space, stratum by stratum;
* ``lambda_chi`` -- build the inertia complex of commuting-with-relations
  labels explicitly and take chi of its orbit space;
* ``chi_gamma_noniter`` -- sum fixed-set orbit-space chi over conjugation
  classes of homomorphism tuples;
* ``chi_string_orb`` -- the classical one-generator case, summing over
  conjugacy classes of the group;
* ``chi_order_ell`` -- the recursive order-ell characteristic over
  iterated centralizer actions on fixed sets.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import groups
from .catalog import FiniteIsotropy
from .cells import Cell, CellMap, CellSpace
from .errors import RecursionCapExceeded, ValidationError
from .groupoid import OrbitGroupoid, chi_gamma
from .groups import FiniteGroup, HomTuple, Presentation

DEFAULT_RECURSION_CAP = 4

# separator between the homomorphism index and the base cell id in
# generated inertia cell ids; input ids can never contain it
_SEP = "⊗"


class RigidGComplex:
    """A finite group acting cellwise on a cell space.

    ``action[g]`` maps cell ids to cell ids; the identity entry may be
    omitted and defaults to the identity map.  Construction checks that
    each element acts by a dimension-preserving bijection and, for
    ``check="full"``, that the assignment is a homomorphism on every pair
    of elements.  Internally derived complexes (inertia complexes, fixed
    subcomplexes) are homomorphisms by construction and use
    ``check="closure"`` to skip the quadratic pair sweep.
    """

    __slots__ = ("group", "space", "action", "_stab")

    def __init__(
        self,
        group: FiniteGroup,
        space: CellSpace,
        action: Mapping[int, Mapping[str, str]],
        check: str = "full",
    ):
        if check not in ("full", "closure"):
            raise ValidationError(f"unknown check mode {check!r}")
        self.group = group
        self.space = space
        ids = space.ids()
        idset = set(ids)
        identity = {cid: cid for cid in ids}
        act: dict[int, dict[str, str]] = {}
        for g in group.elements():
            if g in action:
                m = dict(action[g])
            elif g == 0:
                m = dict(identity)
            else:
                raise ValidationError(f"action: missing entry for element {g}")
            if set(m) != idset:
                bad = sorted(set(m) ^ idset)
                raise ValidationError(f"action[{g}]: cell set mismatch at {bad}")
            if set(m.values()) != idset:
                raise ValidationError(f"action[{g}] is not a bijection of cells")
            for cid, img in m.items():
                if space.dim_of(cid) != space.dim_of(img):
                    raise ValidationError(
                        f"action[{g}] maps {cid!r} (dim {space.dim_of(cid)}) "
                        f"to {img!r} (dim {space.dim_of(img)})"
                    )
            act[g] = m
        extra = set(action) - set(group.elements())
        if extra:
            raise ValidationError(f"action: entries for non-elements {sorted(extra)}")
        if act[0] != identity:
            bad = next(c for c in ids if act[0][c] != c)
            raise ValidationError(f"action[0] must be the identity map (moves {bad!r})")
        if check == "full":
            for g in group.elements():
                for h in group.elements():
                    gh = group.mul(g, h)
                    mg, mh, mgh = act[g], act[h], act[gh]
                    for cid in ids:
                        if mg[mh[cid]] != mgh[cid]:
                            raise ValidationError(
                                f"action is not a homomorphism: "
                                f"({g}*{h}) and composition disagree at cell {cid!r}"
                            )
        self.action = act
        self._stab: dict[str, frozenset[int]] | None = None

    def act(self, g: int, cell_id: str) -> str:
        return self.action[g][cell_id]

    def stabilizer_sets(self) -> dict[str, frozenset[int]]:
        if self._stab is None:
            self._stab = {
                cid: frozenset(g for g in self.group.elements() if self.action[g][cid] == cid)
                for cid in self.space.ids()
            }
        return self._stab


def point_complex(group: FiniteGroup, cell_id: str = "pt") -> RigidGComplex:
    """The group acting (necessarily trivially) on a single point."""
    space = CellSpace((Cell(cell_id, 0),))
    return RigidGComplex(
        group, space, {g: {cell_id: cell_id} for g in group.elements()}, check="closure"
    )


def coset_complex(
    group: FiniteGroup, subgroup: Sequence[int], dim: int = 0, prefix: str = "c"
) -> RigidGComplex:
    """The left translation action on cosets of a subgroup, one cell per
    coset, all of the given dimension."""
    ca = groups.coset_action(group, subgroup)
    ids = [f"{prefix}{i}" for i in range(len(ca.reps))]
    space = CellSpace(tuple(Cell(cid, dim) for cid in ids))
    action = {
        g: {ids[i]: ids[ca.perms[g][i]] for i in range(len(ids))}
        for g in group.elements()
    }
    return RigidGComplex(group, space, action, check="closure")


def stabilizer(x: RigidGComplex, cell_id: str) -> list[int]:
    """Sorted list of elements mapping the cell to itself."""
    if not x.space.has_cell(cell_id):
        raise ValidationError(f"unknown cell id {cell_id!r}")
    return sorted(x.stabilizer_sets()[cell_id])


def cell_orbits(x: RigidGComplex) -> tuple[tuple[str, ...], dict[str, str]]:
    """Orbits of cells: (sorted minimal representatives, cell -> rep map)."""
    rep_of: dict[str, str] = {}
    reps = []
    for cid in x.space.ids():
        if cid in rep_of:
            continue
        orbit = {x.action[g][cid] for g in x.group.elements()}
        rep = min(orbit)
        reps.append(rep)
        for member in orbit:
            rep_of[member] = rep
    return tuple(sorted(reps)), rep_of


def orbit_space(x: RigidGComplex) -> CellSpace:
    """Cell space of orbit representatives (dimension is preserved)."""
    reps, _ = cell_orbits(x)
    return CellSpace(tuple(Cell(r, x.space.dim_of(r)) for r in reps))


def orbit_groupoid(x: RigidGComplex) -> OrbitGroupoid:
    """Orbit space with each representative labeled by its stabilizer."""
    reps, _ = cell_orbits(x)
    space = CellSpace(tuple(Cell(r, x.space.dim_of(r)) for r in reps))
    stabs = x.stabilizer_sets()
    iso = {}
    for r in reps:
        sub, _ = groups.subgroup_group(x.group, sorted(stabs[r]))
        iso[r] = FiniteIsotropy(sub)
    return OrbitGroupoid(space, iso)


def restrict_complex(x: RigidGComplex, keep: Iterable[str]) -> RigidGComplex:
    """Restriction to an invariant set of cells (checked)."""
    keep = set(keep)
    unknown = keep - set(x.space.ids())
    if unknown:
        raise ValidationError(f"restrict_complex: unknown cell ids {sorted(unknown)}")
    for g in x.group.elements():
        moved = {x.action[g][cid] for cid in keep}
        if moved != keep:
            raise ValidationError("restrict_complex: cell set is not invariant")
    space = CellSpace(tuple(c for c in x.space.cells if c.id in keep))
    action = {
        g: {cid: x.action[g][cid] for cid in keep} for g in x.group.elements()
    }
    return RigidGComplex(x.group, space, action, check="closure")


def product_complex(x: RigidGComplex, y: RigidGComplex) -> RigidGComplex:
    """Product action of the product group on the product space."""
    from .cells import product as space_product

    group = groups.direct_product(x.group, y.group)
    space = space_product(x.space, y.space)
    m = y.group.order
    action = {}
    for a in x.group.elements():
        for b in y.group.elements():
            action[a * m + b] = {
                f"{cx}{_SEP}{cy}": f"{x.action[a][cx]}{_SEP}{y.action[b][cy]}"
                for cx in x.space.ids()
                for cy in y.space.ids()
            }
    return RigidGComplex(group, space, action, check="closure")


def fixed_subcomplex(x: RigidGComplex, t: HomTuple) -> RigidGComplex:
    """Cells fixed by every image of the tuple, as a complex over the
    centralizer of the tuple (reindexed into its own group)."""
    for e in t:
        if not 0 <= e < x.group.order:
            raise ValidationError(f"fixed_subcomplex: element {e} out of range")
    stabs = x.stabilizer_sets()
    fixed = [cid for cid in x.space.ids() if all(e in stabs[cid] for e in t)]
    cent = groups.centralizer(x.group, t)
    cgroup, elems = groups.subgroup_group(x.group, cent)
    space = CellSpace(tuple(c for c in x.space.cells if c.id in set(fixed)))
    action = {
        i: {cid: x.action[e][cid] for cid in fixed} for i, e in enumerate(elems)
    }
    return RigidGComplex(cgroup, space, action, check="closure")


def chi_string_orb(x: RigidGComplex) -> int:
    """Sum over conjugacy classes of chi of the centralizer quotient of the
    class representative's fixed set."""
    from .cells import chi

    total = 0
    for cls in groups.conjugacy_classes(x.group):
        total += chi(orbit_space(fixed_subcomplex(x, (cls.rep,))))
    return total


def chi_order_ell(
    x: RigidGComplex, ell: int, cap: int = DEFAULT_RECURSION_CAP
) -> int:
    """Order-ell characteristic, recursing over conjugacy classes.

    Order 0 is chi of the orbit space; order 1 equals ``chi_string_orb``.
    The recursion cap (default 4) bounds the cost, which grows as products
    of class counts.
    """
    from .cells import chi

    if ell < 0:
        raise ValidationError("ell must be >= 0")
    if ell > cap:
        raise RecursionCapExceeded(ell, cap)
    if ell == 0:
        return chi(orbit_space(x))
    total = 0
    for cls in groups.conjugacy_classes(x.group):
        total += chi_order_ell(fixed_subcomplex(x, (cls.rep,)), ell - 1, cap)
    return total


class InertiaComplex(RigidGComplex):
    """The complex of pairs (homomorphism tuple, cell it stabilizes).

    Cells are pairs (t, c) with every image of t stabilizing c; the pair
    inherits the dimension of c (the label factor is zero-dimensional for a
    finite group).  The group acts by simultaneous conjugation on t and the
    original action on c.  ``pairs`` maps each generated cell id back to
    its (tuple, base cell) pair.
    """

    __slots__ = ("presentation", "base", "tuples", "pairs")

    def __init__(self, p: Presentation, x: RigidGComplex):
        homs = groups.hom_enumerate(p, x.group)
        index = {t: i for i, t in enumerate(homs)}
        stabs = x.stabilizer_sets()
        pairs: dict[str, tuple[HomTuple, str]] = {}
        for c in x.space.cells:
            stab = stabs[c.id]
            for i, t in enumerate(homs):
                if all(e in stab for e in t):
                    pairs[f"{i}{_SEP}{c.id}"] = (t, c.id)
        space = CellSpace(
            tuple(Cell(pid, x.space.dim_of(cid)) for pid, (_, cid) in pairs.items())
        )
        action: dict[int, dict[str, str]] = {}
        for g in x.group.elements():
            m = {}
            for pid, (t, cid) in pairs.items():
                # conjugate tuples stay homomorphisms and stabilize the
                # translated cell, so the lookups below cannot miss
                m[pid] = f"{index[x.group.conj_tuple(g, t)]}{_SEP}{x.action[g][cid]}"
            action[g] = m
        super().__init__(x.group, space, action, check="closure")
        self.presentation = p
        self.base = x
        self.tuples = homs
        self.pairs = pairs


def inertia_complex(p: Presentation, x: RigidGComplex) -> InertiaComplex:
    return InertiaComplex(p, x)


def lambda_chi(p: Presentation, x: RigidGComplex) -> int:
    """chi of the orbit space of the inertia complex."""
    from .cells import chi

    return chi(orbit_space(inertia_complex(p, x)))


def chi_gamma_strata(p: Presentation, x: RigidGComplex) -> int:
    """Stratum-wise integral over the orbit space of x."""
    return chi_gamma(orbit_groupoid(x), p)


def chi_gamma_noniter(p: Presentation, x: RigidGComplex) -> int:
    """Sum over conjugation classes of homomorphism tuples of chi of the
    centralizer quotient of the tuple's fixed set.

    Specializes to ``chi_string_orb`` for the one-generator free case and
    to ``chi_order_ell(x, ell)`` for the free abelian case of rank ell.
    """
    from .cells import chi

    homs = groups.hom_enumerate(p, x.group)
    orbits = groups.conj_orbit_count(homs, x.group)
    total = 0
    for t in orbits.reps:
        total += chi(orbit_space(fixed_subcomplex(x, t)))
    return total


def anchor_map(p: Presentation, x: RigidGComplex) -> CellMap:
    """The forgetful map from the inertia orbit space to the orbit space
    of x, sending the class of (t, c) to the class of c.

    Dimensions match cell by cell, and pushing the constant function 1
    forward along this map integrates to ``lambda_chi(p, x)``.
    """
    ic = inertia_complex(p, x)
    _, base_rep = cell_orbits(x)
    base_space = orbit_space(x)
    reps, _ = cell_orbits(ic)
    source = CellSpace(tuple(Cell(r, ic.space.dim_of(r)) for r in reps))
    assign = {r: base_rep[ic.pairs[r][1]] for r in reps}
    return CellMap(source, base_space, assign)


def iterate_inertia(
    p1: Presentation, p2: Presentation, x: RigidGComplex
) -> tuple[int, int]:
    """Compare iterating the inertia construction against the product
    presentation: (chi via inertia of inertia, chi via the product).

    The two are equal; both are returned so callers can assert it.
    """
    chi_iterated = lambda_chi(p2, inertia_complex(p1, x))
    chi_product = lambda_chi(groups.product_presentation(p1, p2), x)
    return chi_iterated, chi_product
