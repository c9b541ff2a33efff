"""Symbolic catalog of compact isotropy groups.

Each entry answers two questions exactly, for the presentation classes it
covers:

* ``chi_hom_quotient`` -- chi of the conjugation quotient of the space of
  homomorphisms from a finitely presented group into the entry;
* ``ad_quotient_model`` -- an explicit cell model of the quotient of the
  entry by its own conjugation action.

Finite entries compute both by direct enumeration.  Torus entries reduce to
the abelianization: a homomorphism from a group into a torus factors
through the abelianization, so chi is 0 when the abelianization has free
rank and the torsion-point count otherwise.  The two nonabelian
positive-dimensional entries, the rotation groups of the plane-with-
reflections and of 3-space, carry only the values their conjugation
quotients pin down: the one-generator free case (a closed interval,
respectively an interval plus an isolated point) and the trivial case.
Every other request is refused with UnsupportedCombination; the catalog
never extrapolates.

Custom entries let callers extend the catalog with externally computed
values keyed by presentation class; reports flag them as user-supplied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import groups
from .cells import Cell, CellSpace, RESERVED_SEPARATOR, chi
from .errors import UnsupportedCombination, ValidationError
from .groups import FiniteGroup, Presentation, presentation_class


@dataclass(frozen=True)
class FiniteIsotropy:
    group: FiniteGroup


@dataclass(frozen=True)
class TorusIsotropy:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValidationError(f"torus dimension must be a positive integer, got {self.n!r}")


@dataclass(frozen=True)
class SO3Isotropy:
    pass


@dataclass(frozen=True)
class O2Isotropy:
    pass


@dataclass(frozen=True)
class ProductIsotropy:
    factors: tuple["IsotropyModel", ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise ValidationError("product isotropy needs at least one factor")
        object.__setattr__(self, "factors", factors)


@dataclass(frozen=True)
class CustomIsotropy:
    """User-supplied entry: chi values (and optional cell models) keyed by
    presentation class strings such as "Z" or "cyclic(3)"."""

    name: str
    chi_table: tuple[tuple[str, int], ...]
    cell_models: tuple[tuple[str, CellSpace], ...] = ()

    def chi_for(self, cls: str) -> int | None:
        for key, value in self.chi_table:
            if key == cls:
                return value
        return None

    def cell_model_for(self, cls: str) -> CellSpace | None:
        for key, value in self.cell_models:
            if key == cls:
                return value
        return None


IsotropyModel = (
    FiniteIsotropy | TorusIsotropy | SO3Isotropy | O2Isotropy | ProductIsotropy | CustomIsotropy
)

SO3 = SO3Isotropy()
O2 = O2Isotropy()


def trivial_isotropy() -> FiniteIsotropy:
    return FiniteIsotropy(groups.trivial_group())


@lru_cache(maxsize=None)
def _finite_chi(g: FiniteGroup, p: Presentation) -> int:
    homs = groups.hom_enumerate(p, g)
    return groups.conj_orbit_count(homs, g).count


def hom_chi_abelian(m: TorusIsotropy, p: Presentation) -> int:
    """chi of the homomorphism space into a torus (conjugation is trivial,
    so this equals the quotient chi).

    Homomorphisms factor through the abelianization Z^r + sum Z/d_i; a free
    factor contributes a copy of the torus (chi 0) and each torsion factor
    contributes its d_i^n torsion points.
    """
    if not isinstance(m, TorusIsotropy):
        raise ValidationError("hom_chi_abelian expects a torus entry")
    snf = groups.abelianize_snf(p)
    if snf.rank >= 1:
        return 0
    total = 1
    for d in snf.torsion:
        total *= d
    return total ** m.n


def chi_hom_quotient(m: IsotropyModel, p: Presentation) -> int:
    """chi of (conjugation quotient of) the homomorphism space into m.

    Raises UnsupportedCombination when the catalog holds no exact value for
    the pair.
    """
    cls = presentation_class(p)
    if isinstance(m, FiniteIsotropy):
        return _finite_chi(m.group, p)
    if isinstance(m, TorusIsotropy):
        return hom_chi_abelian(m, p)
    if isinstance(m, SO3Isotropy):
        if cls == "trivial":
            return 1
        if cls == "Z":
            return 1  # conjugation classes of rotations form a closed interval
        raise UnsupportedCombination(m, p)
    if isinstance(m, O2Isotropy):
        if cls == "trivial":
            return 1
        if cls == "Z":
            return 2  # rotation classes form an interval, reflections a point
        raise UnsupportedCombination(m, p)
    if isinstance(m, ProductIsotropy):
        total = 1
        for factor in m.factors:
            total *= chi_hom_quotient(factor, p)
        return total
    if isinstance(m, CustomIsotropy):
        if cls is not None:
            value = m.chi_for(cls)
            if value is not None:
                return value
        raise UnsupportedCombination(m, p)
    raise ValidationError(f"unknown isotropy model {m!r}")


def ad_quotient_model(m: IsotropyModel) -> CellSpace:
    """Explicit cell model of the conjugation quotient of the entry.

    chi of the model equals chi_hom_quotient(m, Z) in every supported case;
    tori of dimension >= 2 have no bundled cell model (their chi is still
    available through chi_hom_quotient).
    """
    if isinstance(m, FiniteIsotropy):
        classes = groups.conjugacy_classes(m.group)
        return CellSpace(tuple(Cell(f"cls{c.rep}", 0) for c in classes))
    if isinstance(m, TorusIsotropy):
        if m.n == 1:
            return CellSpace((Cell("v", 0), Cell("e", 1)))
        raise UnsupportedCombination(m, groups.Z)
    if isinstance(m, SO3Isotropy):
        return CellSpace((Cell("v0", 0), Cell("v1", 0), Cell("e", 1)))
    if isinstance(m, O2Isotropy):
        # rotations-up-to-inversion: a closed interval; reflections: a point
        return CellSpace((Cell("v0", 0), Cell("v1", 0), Cell("e", 1), Cell("refl", 0)))
    if isinstance(m, ProductIsotropy):
        # one-pass n-ary join; iterating the public binary product would
        # trip its reserved-separator input check on the generated ids
        models = [ad_quotient_model(factor) for factor in m.factors]
        joined = tuple(
            Cell(
                RESERVED_SEPARATOR.join(c.id for c in combo),
                sum(c.dim for c in combo),
            )
            for combo in itertools.product(*(mdl.cells for mdl in models))
        )
        return CellSpace(joined)
    if isinstance(m, CustomIsotropy):
        model = m.cell_model_for("Z")
        if model is not None:
            return model
        raise UnsupportedCombination(m, groups.Z)
    raise ValidationError(f"unknown isotropy model {m!r}")


def ad_quotient_chi(m: IsotropyModel) -> int:
    """chi of the conjugation quotient, preferring the cell model route and
    falling back to the homomorphism route where no model is bundled."""
    try:
        return chi(ad_quotient_model(m))
    except UnsupportedCombination:
        return chi_hom_quotient(m, groups.Z)


def is_user_supplied(m: IsotropyModel) -> bool:
    """True when the model (or any product factor) is a custom entry."""
    if isinstance(m, CustomIsotropy):
        return True
    if isinstance(m, ProductIsotropy):
        return any(is_user_supplied(f) for f in m.factors)
    return False
