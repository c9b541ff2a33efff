"""Finite groups as multiplication tables and finitely presented groups.

A finite group is an n x n table over 0..n-1 with the identity pinned at
index 0; validation checks the identity row/column, that every row and
column is a permutation, and associativity for every triple (skipped above
order 256, far beyond anything this library is used for).

A presentation is a generator count plus relator words; a word is a list of
nonzero signed integers, 1-based generator indices with sign meaning
inverse.  Homomorphisms into a finite group are enumerated as tuples of
generator images satisfying every relator, via depth-first assignment with
relator pruning; the output is defined to equal the brute-force filter of
the full tuple space and is emitted in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

HomTuple = tuple[int, ...]


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    """Generators and relators; ``generators`` may be 0 (the trivial group)."""

    generators: int
    relators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.generators, int) or self.generators < 0:
            raise ValidationError(f"generators: expected a non-negative integer, got {self.generators!r}")
        rels = tuple(tuple(w) for w in self.relators)
        for i, w in enumerate(rels):
            for letter in w:
                if not isinstance(letter, int) or letter == 0 or abs(letter) > self.generators:
                    raise ValidationError(
                        f"relators[{i}]: letter {letter!r} out of range for {self.generators} generators"
                    )
        object.__setattr__(self, "relators", rels)

    @classmethod
    def trivial(cls) -> "Presentation":
        return cls(0)

    @classmethod
    def cyclic(cls, k: int) -> "Presentation":
        if k < 1:
            raise ValidationError(f"cyclic order must be >= 1, got {k}")
        return cls(1, ((1,) * k,))

    @classmethod
    def free_abelian(cls, rank: int) -> "Presentation":
        if rank < 0:
            raise ValidationError(f"free abelian rank must be >= 0, got {rank}")
        rels = tuple(
            (i + 1, j + 1, -(i + 1), -(j + 1))
            for i in range(rank)
            for j in range(i + 1, rank)
        )
        return cls(rank, rels)

    @classmethod
    def free(cls, rank: int) -> "Presentation":
        return cls(rank)


# ``Z`` is the one-generator free presentation; the workhorse for inertia.
Z = Presentation.free(1)


def presentation_class(p: Presentation) -> str | None:
    """Syntactic class of a presentation, or None when unrecognized.

    Recognized classes: "trivial", "Z", "cyclic(k)", "free_abelian(r)".
    Classification is purely syntactic (the canonical relator sets of the
    shorthand constructors); recognizing e.g. the integers presented with a
    redundant relator is out of scope.
    """
    if p.generators == 0:
        return "trivial"
    if p.generators == 1:
        if not p.relators:
            return "Z"
        if len(p.relators) == 1:
            w = p.relators[0]
            if all(l == 1 for l in w):
                return f"cyclic({len(w)})"
        return None
    canonical = set(Presentation.free_abelian(p.generators).relators)
    if set(p.relators) == canonical and len(p.relators) == len(canonical):
        return f"free_abelian({p.generators})"
    return None


def product_presentation(p1: Presentation, p2: Presentation) -> Presentation:
    """Presentation of the direct product: generators side by side, original
    relators, plus all cross commutators."""
    n1, n2 = p1.generators, p2.generators

    def shift(w: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(l + n1 if l > 0 else l - n1 for l in w)

    cross = tuple(
        (i + 1, n1 + j + 1, -(i + 1), -(n1 + j + 1))
        for i in range(n1)
        for j in range(n2)
    )
    return Presentation(n1 + n2, p1.relators + tuple(shift(w) for w in p2.relators) + cross)


# ---------------------------------------------------------------------------
# finite groups


def _check_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if len(table) == 0:
        raise ValidationError("group table is empty (order must be >= 1)")
    n = len(table)
    rows = []
    for i, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise ValidationError(f"table row {i} has length {len(row)}, expected {n}")
        rows.append(row)
    arr = np.asarray(rows, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise ValidationError(f"table entry at ({bad[0]},{bad[1]}) out of range 0..{n - 1}")
    idx = np.arange(n)
    if not np.array_equal(arr[0], idx):
        raise ValidationError("identity failure: row 0 is not the identity permutation")
    if not np.array_equal(arr[:, 0], idx):
        raise ValidationError("identity failure: column 0 is not the identity permutation")
    row_ok = np.all(np.sort(arr, axis=1) == idx, axis=1)
    if not row_ok.all():
        raise ValidationError(f"row {int(np.argmin(row_ok))} is not a permutation")
    col_ok = np.all(np.sort(arr, axis=0) == idx[:, None], axis=0)
    if not col_ok.all():
        raise ValidationError(f"column {int(np.argmin(col_ok))} is not a permutation")
    if n <= 256:
        small = arr.astype(np.int32)
        left = small[small]            # left[a,b,c]  = (ab)c
        right = small[:, small]        # right[a,b,c] = a(bc)
        if not np.array_equal(left, right):
            a, b, c = (int(v) for v in np.argwhere(left != right)[0])
            raise ValidationError(
                f"associativity failure at triple ({a},{b},{c}): "
                f"({a}*{b})*{c} = {int(left[a, b, c])} but {a}*({b}*{c}) = {int(right[a, b, c])}"
            )
    return tuple(rows)


class FiniteGroup:
    """A finite group given by its multiplication table; identity is 0."""

    __slots__ = ("order", "table", "_inv", "_conj")

    def __init__(self, table: Sequence[Sequence[int]]):
        self.table = _check_table(table)
        self.order = len(self.table)
        # a * a^-1 = 0: the inverse is the column holding 0 in row a
        self._inv = tuple(self.table[a].index(0) for a in range(self.order))
        self._conj: tuple[tuple[int, ...], ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj_perm(self, a: int) -> tuple[int, ...]:
        """The permutation x -> a x a^-1, as a row of the cached table."""
        if self._conj is None:
            conj = []
            for g in range(self.order):
                gi = self._inv[g]
                row_g = self.table[g]
                conj.append(tuple(self.table[row_g[x]][gi] for x in range(self.order)))
            self._conj = tuple(conj)
        return self._conj[a]

    def conj_tuple(self, a: int, t: HomTuple) -> HomTuple:
        perm = self.conj_perm(a)
        return tuple(perm[x] for x in t)

    def elements(self) -> range:
        return range(self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def validate_group(table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Validate a multiplication table; raises ValidationError naming the
    failed axiom (with a witness triple for associativity)."""
    return FiniteGroup(table)


# ---------------------------------------------------------------------------
# standard constructions


def trivial_group() -> FiniteGroup:
    return FiniteGroup(((0,),))


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with elements enumerated in lexicographic one-line order, so the
    identity permutation sits at index 0.  mul(p, q) applies q first."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms
    )
    return FiniteGroup(table)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: element i + n*j is r^i s^j."""
    if n < 1:
        raise ValidationError("dihedral parameter must be >= 1")
    order = 2 * n

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        k, l = y % n, y // n
        rot = (i + (k if j == 0 else -k)) % n
        return rot + n * ((j + l) % 2)

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(order)) for a in range(order)))


def quaternion_group() -> FiniteGroup:
    """Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    # (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    def unpack(x: int) -> tuple[int, int]:
        return (-1 if x % 2 else 1, x // 2)

    def pack(sign: int, axis: int) -> int:
        return 2 * axis + (0 if sign == 1 else 1)

    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
        (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
        (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
        (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2),
    }

    def mul(x: int, y: int) -> int:
        sx, ax = unpack(x)
        sy, ay = unpack(y)
        s, a = axis_mul[(ax, ay)]
        return pack(sx * sy * s, a)

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(8)) for a in range(8)))


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with pair (a, b) at index a * |h| + b."""
    n, m = g.order, h.order
    table = tuple(
        tuple(g.mul(a1, a2) * m + h.mul(b1, b2) for a2 in range(n) for b2 in range(m))
        for a1 in range(n)
        for b1 in range(m)
    )
    return FiniteGroup(table)


# ---------------------------------------------------------------------------
# words and homomorphism enumeration


def evaluate_word(word: Iterable[int], images: Sequence[int], g: FiniteGroup) -> int:
    """Substitute generator images into a relator word, left to right."""
    acc = 0
    for letter in word:
        e = images[letter - 1] if letter > 0 else g.inv(images[-letter - 1])
        acc = g.mul(acc, e)
    return acc


def hom_enumerate(p: Presentation, g: FiniteGroup) -> list[HomTuple]:
    """All homomorphisms p -> g as tuples of generator images, in
    lexicographic order.

    Depth-first assignment; a relator is checked as soon as its last-needed
    generator receives an image, which prunes without changing the output:
    the result equals filtering all of g^ell by every relator.
    """
    ell = p.generators
    if ell == 0:
        return [()]
    by_depth: list[list[tuple[int, ...]]] = [[] for _ in range(ell + 1)]
    for w in p.relators:
        by_depth[max(abs(l) for l in w)].append(w)
    out: list[HomTuple] = []
    images = [0] * ell

    def descend(depth: int) -> None:
        if depth == ell:
            out.append(tuple(images))
            return
        for e in range(g.order):
            images[depth] = e
            if all(evaluate_word(w, images, g) == 0 for w in by_depth[depth + 1]):
                descend(depth + 1)

    descend(0)
    return out


def is_homomorphism(p: Presentation, g: FiniteGroup, t: HomTuple) -> bool:
    if len(t) != p.generators or any(not 0 <= e < g.order for e in t):
        return False
    return all(evaluate_word(w, t, g) == 0 for w in p.relators)


# ---------------------------------------------------------------------------
# conjugation orbits, centralizers, classes


@dataclass(frozen=True)
class ConjOrbits:
    count: int
    reps: tuple[HomTuple, ...]


def conj_orbit_count(tuples: Sequence[HomTuple], g: FiniteGroup) -> ConjOrbits:
    """Orbits of simultaneous conjugation on a set of tuples.

    The input must be closed under conjugation by every group element
    (checked).  Representatives are the lexicographic minima, returned
    sorted.
    """
    pool = set(tuples)
    if len(pool) != len(tuples):
        raise ValidationError("conj_orbit_count: duplicate tuples in input")
    reps = []
    seen: set[HomTuple] = set()
    for t in sorted(pool):
        if t in seen:
            continue
        orbit = {g.conj_tuple(a, t) for a in g.elements()}
        if not orbit <= pool:
            stray = sorted(orbit - pool)[0]
            raise ValidationError(
                f"conj_orbit_count: input not conjugation-closed (missing {stray})"
            )
        seen |= orbit
        reps.append(min(orbit))
    return ConjOrbits(len(reps), tuple(sorted(reps)))


def centralizer(g: FiniteGroup, t: HomTuple) -> list[int]:
    """Sorted elements commuting with every image of the tuple."""
    for e in t:
        if not 0 <= e < g.order:
            raise ValidationError(f"centralizer: element {e} out of range")
    return [
        a
        for a in g.elements()
        if all(g.mul(a, e) == g.mul(e, a) for e in t)
    ]


@dataclass(frozen=True)
class ConjugacyClass:
    rep: int
    size: int


def conjugacy_classes(g: FiniteGroup) -> list[ConjugacyClass]:
    """Conjugacy classes with minimal-index representatives, ordered by rep."""
    out = []
    seen: set[int] = set()
    for a in g.elements():
        if a in seen:
            continue
        orbit = {g.conj_perm(b)[a] for b in g.elements()}
        seen |= orbit
        out.append(ConjugacyClass(min(orbit), len(orbit)))
    return out


# ---------------------------------------------------------------------------
# subgroups and coset actions


def is_subgroup(g: FiniteGroup, elements: Iterable[int]) -> bool:
    elems = set(elements)
    if 0 not in elems or not elems <= set(g.elements()):
        return False
    return all(g.mul(a, b) in elems for a in elems for b in elems) and all(
        g.inv(a) in elems for a in elems
    )


def subgroup_closure(g: FiniteGroup, generators: Iterable[int]) -> list[int]:
    """Smallest subgroup containing the given elements, as a sorted list."""
    elems = {0}
    frontier = [e for e in generators]
    for e in frontier:
        if not 0 <= e < g.order:
            raise ValidationError(f"subgroup_closure: element {e} out of range")
    while frontier:
        e = frontier.pop()
        if e in elems:
            continue
        elems.add(e)
        frontier.extend(g.mul(e, x) for x in list(elems))
        frontier.extend(g.mul(x, e) for x in list(elems))
        frontier.append(g.inv(e))
    return sorted(elems)


def subgroup_group(g: FiniteGroup, elements: Sequence[int]) -> tuple[FiniteGroup, list[int]]:
    """Reindex a subgroup's multiplication into its own FiniteGroup.

    Returns the group together with the sorted element list; position i of
    the list is element i of the new group (identity lands at 0 because 0
    is the minimal element of any subgroup).
    """
    elems = sorted(set(elements))
    pos = {e: i for i, e in enumerate(elems)}
    try:
        table = tuple(tuple(pos[g.mul(a, b)] for b in elems) for a in elems)
    except KeyError as exc:
        raise ValidationError(f"subgroup_group: set not closed under product (missing {exc})") from None
    return FiniteGroup(table), elems


@dataclass(frozen=True)
class CosetAction:
    """Left action of a group on the left cosets of a subgroup.

    ``reps`` are the canonical (minimal) coset representatives in increasing
    order; ``perms[a][i]`` is the index of the coset a * (reps[i] H).
    """

    reps: tuple[int, ...]
    coset_of: tuple[int, ...]
    perms: tuple[tuple[int, ...], ...]


def coset_action(g: FiniteGroup, subgroup: Sequence[int]) -> CosetAction:
    elems = sorted(set(subgroup))
    if not is_subgroup(g, elems):
        raise ValidationError("coset_action: the given set is not a subgroup")
    coset_of = [-1] * g.order
    reps = []
    for a in g.elements():
        if coset_of[a] >= 0:
            continue
        idx = len(reps)
        reps.append(a)  # a is minimal in its coset: all smaller elements are assigned
        for h in elems:
            coset_of[g.mul(a, h)] = idx
    perms = tuple(
        tuple(coset_of[g.mul(a, r)] for r in reps) for a in g.elements()
    )
    return CosetAction(tuple(reps), tuple(coset_of), perms)


# ---------------------------------------------------------------------------
# Smith normal form and abelianization


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form, non-negative with d1 | d2 | ...

    Plain integer row/column reduction with smallest-nonzero pivot
    selection; fine for the small matrices produced by presentations.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    t = 0
    while t < min(rows, cols):
        # locate the smallest nonzero entry in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // p
                if q:
                    for j in range(t, cols):
                        m[i][j] -= q * m[t][j]
                if m[i][t]:
                    m[t], m[i] = m[i], m[t]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, cols):
                q = m[t][j] // p
                if q:
                    for i in range(t, rows):
                        m[i][j] -= q * m[i][t]
                if m[t][j]:
                    for i in range(rows):
                        m[i][t], m[i][j] = m[i][j], m[i][t]
                    dirty = True
                    break
            if dirty:
                continue
            # pivot must divide every remaining entry for the divisibility chain
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                m[t][j] += m[offender][j]
        diag.append(abs(m[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class SnfResult:
    """Free rank and torsion of a finitely generated abelian group."""

    rank: int
    torsion: tuple[int, ...]


def abelianize_snf(p: Presentation) -> SnfResult:
    """Abelianization via the exponent-sum matrix of the relators.

    Returns free rank and the invariant factors >= 2, which identify the
    abelianized group as Z^rank + sum of Z/d_i.
    """
    mat = [[0] * len(p.relators) for _ in range(p.generators)]
    for j, w in enumerate(p.relators):
        for letter in w:
            mat[abs(letter) - 1][j] += 1 if letter > 0 else -1
    diag = [d for d in smith_normal_form(mat) if d != 0] if p.generators else []
    return SnfResult(p.generators - len(diag), tuple(d for d in diag if d >= 2))
