"""JSON schemas for every value the library exchanges with files.

Loaders take either an already-parsed object or a file path; wherever a
schema allows a nested value (a function's space, a map's source, a
complex's group) the nested value may be given inline or as a path string,
resolved relative to the referring file.  Errors name the offending field.

The id separator "⊗" is reserved for generated ids (products, inertia
cells) and rejected in all input ids; a dumped product space is therefore
not re-loadable, by design.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import catalog, groupoid, groups, translation
from .cells import Cell, CellMap, CellSpace, ConstructibleFunction, RESERVED_SEPARATOR
from .errors import ValidationError


def _read_json(path: Path) -> Any:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from None


def _resolve(obj_or_path: Any, base: Path | None) -> tuple[Any, Path | None]:
    """Return (parsed object, new base dir) for an inline value or path."""
    if isinstance(obj_or_path, str):
        path = Path(obj_or_path)
        if base is not None and not path.is_absolute():
            path = base / path
        return _read_json(path), path.parent
    return obj_or_path, base


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ValidationError(f"{where}: missing field {key!r}")
    return obj[key]


def _check_input_id(cid: Any, where: str) -> str:
    if not isinstance(cid, str) or not cid:
        raise ValidationError(f"{where}: id must be a non-empty string, got {cid!r}")
    if RESERVED_SEPARATOR in cid:
        raise ValidationError(f"{where}: id {cid!r} contains the reserved separator")
    return cid


# ---------------------------------------------------------------------------
# cell spaces, functions, maps


def load_cell_space(obj: Any, base: Path | None = None) -> CellSpace:
    obj, _ = _resolve(obj, base)
    raw = _require(obj, "cells", "cell space")
    if not isinstance(raw, list):
        raise ValidationError("cells: expected a list")
    out = []
    for i, entry in enumerate(raw):
        cid = _check_input_id(_require(entry, "id", f"cells[{i}]"), f"cells[{i}].id")
        dim = _require(entry, "dim", f"cells[{i}]")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ValidationError(f"cells[{i}].dim: expected a non-negative integer, got {dim!r}")
        out.append(Cell(cid, dim))
    return CellSpace(tuple(out))


def dump_cell_space(space: CellSpace) -> dict:
    return {"cells": [{"id": c.id, "dim": c.dim} for c in space.cells]}


def load_function(obj: Any, base: Path | None = None) -> ConstructibleFunction:
    obj, base = _resolve(obj, base)
    space = load_cell_space(_require(obj, "space", "function"), base)
    values = _require(obj, "values", "function")
    if not isinstance(values, dict):
        raise ValidationError("values: expected an object")
    for k, v in values.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValidationError(f"values[{k!r}]: expected an integer, got {v!r}")
    return ConstructibleFunction(space, values)


def load_cell_map(obj: Any, base: Path | None = None) -> CellMap:
    obj, base = _resolve(obj, base)
    source = load_cell_space(_require(obj, "source", "map"), base)
    target = load_cell_space(_require(obj, "target", "map"), base)
    assign = _require(obj, "assign", "map")
    if not isinstance(assign, dict):
        raise ValidationError("assign: expected an object")
    return CellMap(source, target, assign)


# ---------------------------------------------------------------------------
# groups and presentations


def load_group(obj: Any, base: Path | None = None) -> groups.FiniteGroup:
    obj, _ = _resolve(obj, base)
    order = _require(obj, "order", "group")
    table = _require(obj, "table", "group")
    if not isinstance(table, list) or not isinstance(order, int):
        raise ValidationError("group: 'order' must be an integer and 'table' a list")
    if len(table) != order:
        raise ValidationError(f"group: order {order} does not match table size {len(table)}")
    return groups.validate_group(table)


def dump_group(g: groups.FiniteGroup) -> dict:
    return {"order": g.order, "table": [list(row) for row in g.table]}


def load_presentation(obj: Any, base: Path | None = None) -> groups.Presentation:
    obj, _ = _resolve(obj, base)
    kind = _require(obj, "kind", "presentation")
    if kind == "trivial":
        return groups.Presentation.trivial()
    if kind == "cyclic":
        return groups.Presentation.cyclic(_require(obj, "order", "presentation"))
    if kind == "free_abelian":
        return groups.Presentation.free_abelian(_require(obj, "rank", "presentation"))
    if kind == "presentation":
        gens = _require(obj, "generators", "presentation")
        rels = obj.get("relators", [])
        if not isinstance(rels, list):
            raise ValidationError("relators: expected a list of words")
        return groups.Presentation(gens, tuple(tuple(w) for w in rels))
    raise ValidationError(f"presentation: unknown kind {kind!r}")


def dump_presentation(p: groups.Presentation) -> dict:
    return {
        "kind": "presentation",
        "generators": p.generators,
        "relators": [list(w) for w in p.relators],
    }


def load_presentation_arg(arg: str) -> groups.Presentation:
    """A --gamma argument: a file path if one exists there, else inline JSON."""
    path = Path(arg)
    if path.exists():
        return load_presentation(str(path), Path.cwd())
    try:
        obj = json.loads(arg)
    except json.JSONDecodeError:
        raise ValidationError(
            f"--gamma: {arg!r} is neither an existing file nor valid JSON"
        ) from None
    return load_presentation(obj)


# ---------------------------------------------------------------------------
# isotropy models and groupoids


def load_isotropy(obj: Any, base: Path | None = None) -> catalog.IsotropyModel:
    obj, base = _resolve(obj, base)
    kind = _require(obj, "kind", "isotropy")
    if kind == "finite":
        return catalog.FiniteIsotropy(load_group(_require(obj, "group", "isotropy"), base))
    if kind == "torus":
        return catalog.TorusIsotropy(_require(obj, "n", "isotropy"))
    if kind == "SO3":
        return catalog.SO3
    if kind == "O2":
        return catalog.O2
    if kind == "product":
        factors = _require(obj, "factors", "isotropy")
        if not isinstance(factors, list) or not factors:
            raise ValidationError("isotropy: 'factors' must be a non-empty list")
        return catalog.ProductIsotropy(tuple(load_isotropy(f, base) for f in factors))
    if kind == "custom":
        name = _require(obj, "name", "isotropy")
        chi_table = _require(obj, "chi", "isotropy")
        if not isinstance(chi_table, dict):
            raise ValidationError("isotropy: 'chi' must be an object")
        for k, v in chi_table.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"isotropy chi[{k!r}]: expected an integer")
        models = obj.get("cell_models", {})
        cm = tuple(
            (k, load_cell_space(v, base)) for k, v in models.items()
        )
        return catalog.CustomIsotropy(name, tuple(sorted(chi_table.items())), cm)
    raise ValidationError(f"isotropy: unknown kind {kind!r}")


def load_groupoid(obj: Any, base: Path | None = None) -> groupoid.OrbitGroupoid:
    obj, base = _resolve(obj, base)
    strata = _require(obj, "strata", "groupoid")
    if not isinstance(strata, list):
        raise ValidationError("strata: expected a list")
    cells = []
    iso = {}
    for i, entry in enumerate(strata):
        cid = _check_input_id(_require(entry, "id", f"strata[{i}]"), f"strata[{i}].id")
        dim = _require(entry, "dim", f"strata[{i}]")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ValidationError(f"strata[{i}].dim: expected a non-negative integer")
        cells.append(Cell(cid, dim))
        iso[cid] = load_isotropy(_require(entry, "isotropy", f"strata[{i}]"), base)
    return groupoid.OrbitGroupoid(CellSpace(tuple(cells)), iso)


# ---------------------------------------------------------------------------
# rigid complexes


def load_complex(obj: Any, base: Path | None = None) -> translation.RigidGComplex:
    obj, base = _resolve(obj, base)
    group = load_group(_require(obj, "group", "complex"), base)
    space = load_cell_space({"cells": _require(obj, "cells", "complex")}, base)
    raw_action = _require(obj, "action", "complex")
    if not isinstance(raw_action, dict):
        raise ValidationError("action: expected an object keyed by element index")
    action: dict[int, dict[str, str]] = {}
    for key, mapping in raw_action.items():
        try:
            g = int(key)
        except (TypeError, ValueError):
            raise ValidationError(f"action key {key!r} is not an element index") from None
        if not isinstance(mapping, dict):
            raise ValidationError(f"action[{key!r}]: expected an object")
        action[g] = mapping
    return translation.RigidGComplex(group, space, action, check="full")


def dump_complex(x: translation.RigidGComplex) -> dict:
    return {
        "group": dump_group(x.group),
        "cells": [{"id": c.id, "dim": c.dim} for c in x.space.cells],
        "action": {str(g): dict(x.action[g]) for g in x.group.elements()},
    }


def load_extension(obj: Any, base: Path | None = None) -> dict:
    """Extension description: fiber model, acting group, base complex, order."""
    obj, base = _resolve(obj, base)
    ell = _require(obj, "ell", "extension")
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 0:
        raise ValidationError("extension: 'ell' must be a non-negative integer")
    return {
        "fiber": load_isotropy(_require(obj, "fiber", "extension"), base),
        "group": load_group(_require(obj, "group", "extension"), base),
        "complex": load_complex(_require(obj, "complex", "extension"), base),
        "ell": ell,
    }


def load_file(path: str | Path, loader) -> Any:
    """Load a file with one of the load_* functions above."""
    p = Path(path)
    return loader(str(p), Path.cwd())
