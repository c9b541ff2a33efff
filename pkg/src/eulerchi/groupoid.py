"""Labeled cell spaces: a groupoid seen through its orbit space.

An ``OrbitGroupoid`` is a cell space with an isotropy model attached to
every cell.  The integrand "chi of the homomorphism quotient at the
isotropy of this stratum" is constant on each cell, so integrating it with
respect to chi is a finite signed sum; that sum is the groupoid's Euler
characteristic for a chosen finitely presented group.

Labels are compared structurally, which refines the partition into
isomorphism classes of isotropy; the integrals are computed per cell, so
the refinement never changes a value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import catalog, cells
from .catalog import IsotropyModel, ProductIsotropy, chi_hom_quotient
from .cells import CellSpace, ConstructibleFunction, integrate
from .errors import CrossCheckError, UnsupportedCombination, ValidationError
from .groups import FiniteGroup, Presentation


@dataclass(frozen=True, eq=False)
class OrbitGroupoid:
    space: CellSpace
    isotropy: Mapping[str, IsotropyModel]

    def __post_init__(self):
        iso = dict(self.isotropy)
        for cid in iso:
            if not self.space.has_cell(cid):
                raise ValidationError(f"isotropy: {cid!r} is not a cell of the space")
        missing = [cid for cid in self.space.ids() if cid not in iso]
        if missing:
            raise ValidationError(f"isotropy: unlabeled cells {missing}")
        object.__setattr__(self, "isotropy", iso)

    def label(self, cell_id: str) -> IsotropyModel:
        return self.isotropy[cell_id]


def integrand(g: OrbitGroupoid, p: Presentation) -> ConstructibleFunction:
    """The constructible function cell -> chi_hom_quotient(label, p)."""
    values = {}
    for cid in g.space.ids():
        try:
            values[cid] = chi_hom_quotient(g.label(cid), p)
        except UnsupportedCombination as exc:
            raise exc.with_cell(cid) from None
    return ConstructibleFunction(g.space, values)


def chi_gamma(g: OrbitGroupoid, p: Presentation) -> int:
    """Integral over the orbit space of the per-stratum homomorphism
    quotient chi.

    Computed twice, as a direct signed sum over cells and through
    ``integrate`` on the induced constructible function; the two are
    asserted equal.
    """
    f = integrand(g, p)
    direct = sum(
        f.values[c.id] * (-1 if c.dim % 2 else 1) for c in g.space.cells
    )
    integral = integrate(f)
    if direct != integral:
        raise CrossCheckError(
            f"chi_gamma: direct sum {direct} != integrate {integral}"
        )
    return integral


def chi_z(g: OrbitGroupoid) -> int:
    """The one-generator-free case through conjugation-quotient cell models.

    The integrand at each cell is chi of the label's conjugation quotient,
    an independent route from the homomorphism enumeration that
    ``chi_gamma(g, Z)`` uses; the two agree by construction of the catalog
    (and are cross-checked by the test suite).
    """
    total = 0
    for c in g.space.cells:
        try:
            value = catalog.ad_quotient_chi(g.label(c.id))
        except UnsupportedCombination as exc:
            raise exc.with_cell(c.id) from None
        total += value * (-1 if c.dim % 2 else 1)
    return total


def product_groupoid(a: OrbitGroupoid, b: OrbitGroupoid) -> OrbitGroupoid:
    """Product space with product labels; chi_gamma is multiplicative."""
    space = cells.product(a.space, b.space)
    sep = cells.RESERVED_SEPARATOR
    iso = {}
    for ca in a.space.ids():
        for cb in b.space.ids():
            iso[f"{ca}{sep}{cb}"] = ProductIsotropy((a.label(ca), b.label(cb)))
    return OrbitGroupoid(space, iso)


def restrict_groupoid(g: OrbitGroupoid, keep: Iterable[str]) -> OrbitGroupoid:
    keep = set(keep)
    space = cells.restrict(g.space, keep)
    return OrbitGroupoid(space, {cid: g.label(cid) for cid in keep})


def chi_gamma_atlas(pieces: Sequence, p: Presentation) -> int:
    """Sum of translation-groupoid values over disjoint chart pieces.

    Each piece is a finite group acting on a rigid complex; disjointness of
    the chart images is the caller's assertion and is merely recorded, not
    verifiable from the pieces themselves.
    """
    from . import translation

    total = 0
    for i, piece in enumerate(pieces):
        try:
            total += translation.chi_gamma_strata(p, piece)
        except UnsupportedCombination as exc:
            where = f"piece {i}" + (f", {exc.cell_id}" if exc.cell_id else "")
            raise UnsupportedCombination(exc.model, exc.presentation, where) from None
    return total


@dataclass(frozen=True)
class ExtensionPrediction:
    predicted: int
    factor_b: int
    factor_h: int


def abelian_extension_chi(
    bundle_fiber: IsotropyModel,
    h: FiniteGroup,
    x,
    ell: int,
) -> ExtensionPrediction:
    """Prediction for a groupoid extending the action of h on x by a bundle
    with the given abelian fiber: the free-abelian chi of the fiber times
    the free-abelian chi of the base action.

    Both factors are reported so a disagreement with a directly computed
    value can be audited.  The factorization needs the fiber to be abelian;
    a nonabelian finite fiber is rejected (and the identity genuinely fails
    for nonabelian fibers, which is what makes the reported factors
    interesting).
    """
    from . import translation

    if ell < 0:
        raise ValidationError("ell must be >= 0")
    if isinstance(bundle_fiber, catalog.FiniteIsotropy):
        b = bundle_fiber.group
        if any(
            b.mul(i, j) != b.mul(j, i)
            for i in b.elements()
            for j in b.elements()
        ):
            raise ValidationError("abelian_extension_chi: finite fiber is not abelian")
        factor_b = b.order ** ell
    elif isinstance(bundle_fiber, catalog.TorusIsotropy):
        factor_b = catalog.hom_chi_abelian(bundle_fiber, Presentation.free_abelian(ell))
    else:
        raise ValidationError(
            "abelian_extension_chi: fiber must be a finite abelian or torus entry"
        )
    if x.group != h:
        raise ValidationError("abelian_extension_chi: complex is not an action of the given group")
    factor_h = translation.chi_gamma_strata(Presentation.free_abelian(ell), x)
    return ExtensionPrediction(factor_b * factor_h, factor_b, factor_h)
