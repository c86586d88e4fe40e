"""Algebra definition files (JSON): schema, loading and canonical dumping."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Optional

import jsonschema

from .errors import ColorLieError, ParseError, SchemaError
from .gmod import GradedModule
from .grading import Cocycle, GroupSpec, bicharacter_from_json, cocycle_from_json, verify_bicharacter
from .liealg import ColorLieAlgebra, from_brackets
from .parsing import parse_scalar
from .scalars import ZERO

_NAME = {"type": "string", "pattern": r"^[A-Za-z_][A-Za-z0-9_]*$"}
_INDEX = {"oneOf": [{"type": "integer", "minimum": 0}, _NAME]}
_SCALAR = {"oneOf": [{"type": "string"}, {"type": "integer"}]}
_DEGREE = {"type": "array", "items": {"type": "integer"}}
_MATRIX = {
    "type": "object",
    "required": ["matrix"],
    "properties": {"matrix": {"type": "array", "items": {"type": "array", "items": _SCALAR}}},
}
_BASIS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["name", "degree"],
        "properties": {"name": _NAME, "degree": _DEGREE},
        "additionalProperties": False,
    },
}
MODULE_SCHEMA = {
    "type": "object",
    "required": ["basis", "actions"],
    "properties": {
        "name": {"type": "string"},
        "basis": _BASIS,
        "actions": {"type": "object",
                    "additionalProperties": {"type": "array", "items": {"type": "array", "items": _SCALAR}}},
    },
    "additionalProperties": False,
}
ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["group", "gamma", "basis"],
    "properties": {
        "name": {"type": "string"},
        "version": {},
        "group": {
            "type": "object",
            "required": ["free_rank"],
            "properties": {
                "free_rank": {"type": "integer", "minimum": 0, "maximum": 16},
                "torsion_orders": {"type": "array", "items": {"type": "integer", "minimum": 1, "maximum": 1000}},
            },
            "additionalProperties": False,
        },
        "gamma": _MATRIX,
        "sigma": _MATRIX,
        "basis": _BASIS,
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "result"],
                "properties": {
                    "i": _INDEX,
                    "j": _INDEX,
                    "result": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["k", "coeff"],
                            "properties": {"k": _INDEX, "coeff": _SCALAR},
                            "additionalProperties": False,
                        },
                    },
                },
                "additionalProperties": False,
            },
        },
        "modules": {"type": "object", "additionalProperties": MODULE_SCHEMA},
    },
    "additionalProperties": False,
}


@dataclass
class AlgebraFile:
    lie: ColorLieAlgebra
    sigma: Optional[Cocycle] = None
    modules: Dict[str, GradedModule] = field(default_factory=dict)


_VALIDATORS = {}


def _validate(data, schema, what):
    key = id(schema)
    if key not in _VALIDATORS:
        cls = jsonschema.validators.validator_for(schema)
        cls.check_schema(schema)
        _VALIDATORS[key] = cls(schema)
    e = jsonschema.exceptions.best_match(_VALIDATORS[key].iter_errors(data))
    if e is not None:
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{what} does not match the schema at {where}: {e.message}")


def _scalar(v):
    return parse_scalar(str(v))


def _resolve(ref, names, what):
    if isinstance(ref, int):
        if ref >= len(names):
            raise SchemaError(f"{what} index {ref} out of range")
        return ref
    if ref not in names:
        raise SchemaError(f"{what} refers to unknown generator {ref!r}")
    return names.index(ref)


def _matrix_shape(rows, n, what):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise SchemaError(f"{what} matrix must be {n}x{n}")


def _degree(spec: GroupSpec, coords, what):
    if len(coords) != spec.ngens:
        raise SchemaError(f"{what}: degree must have {spec.ngens} coordinates")
    return spec.element(*coords)


def module_from_json(L: ColorLieAlgebra, data, name: str = "") -> GradedModule:
    _validate(data, MODULE_SCHEMA, "module")
    basis = [(b["name"], _degree(L.group, b["degree"], f"module vector {b['name']}")) for b in data["basis"]]
    d = len(basis)
    acts = []
    for g in data["actions"]:
        if g not in L.names:
            raise SchemaError(f"module action for unknown generator {g!r}")
    for x in L.names:
        rows = data["actions"].get(x)
        if rows is None:
            acts.append([[ZERO] * d for _ in range(d)])
            continue
        if len(rows) != d or any(len(r) != d for r in rows):
            raise SchemaError(f"action of {x} must be a {d}x{d} matrix")
        acts.append([[_scalar(v) for v in r] for r in rows])
    return GradedModule(L, basis, acts, data.get("name", name))


def module_to_json(M: GradedModule):
    return {
        "basis": [{"name": n, "degree": list(g.coords)} for n, g in zip(M.names, M.degrees)],
        "actions": {x: [[str(v) for v in row] for row in M.actions[i]] for i, x in enumerate(M.lie.names)},
    }


def algebra_from_json(data) -> AlgebraFile:
    _validate(data, ALGEBRA_SCHEMA, "algebra file")
    g = data["group"]
    spec = GroupSpec(g["free_rank"], tuple(g.get("torsion_orders", [])))
    _matrix_shape(data["gamma"]["matrix"], spec.ngens, "gamma")
    gamma = bicharacter_from_json(spec, data["gamma"])
    rep = verify_bicharacter(gamma)
    if not rep.ok:
        raise SchemaError("gamma is not a skew-symmetric bicharacter: " + rep.first)
    sigma = None
    if "sigma" in data:
        _matrix_shape(data["sigma"]["matrix"], spec.ngens, "sigma")
        sigma = cocycle_from_json(spec, data["sigma"])
        bad = sigma.torsion_violations()
        if bad:
            raise SchemaError("invalid sigma: " + bad[0])
    names = [b["name"] for b in data["basis"]]
    if len(set(names)) != len(names):
        raise SchemaError("generator names must be distinct")
    if "q" in names:
        raise SchemaError("'q' is reserved for the scalar parameter and cannot name a generator")
    basis = [(b["name"], _degree(spec, b["degree"], f"generator {b['name']}")) for b in data["basis"]]
    brackets = []
    for br in data.get("brackets", []):
        i = _resolve(br["i"], names, "bracket")
        j = _resolve(br["j"], names, "bracket")
        vec: Dict[int, object] = {}
        for t in br["result"]:
            k = _resolve(t["k"], names, "bracket result")
            vec[k] = vec.get(k, ZERO) + _scalar(t["coeff"])
        brackets.append((i, j, vec))
    lie = from_brackets(gamma, basis, brackets, data.get("name", ""))
    modules = {}
    for mname, mdata in sorted(data.get("modules", {}).items()):
        modules[mname] = module_from_json(lie, mdata, mname)
    return AlgebraFile(lie, sigma, modules)


def algebra_to_json(L: ColorLieAlgebra, sigma: Optional[Cocycle] = None, modules=None):
    out = {}
    if L.name:
        out["name"] = L.name
    out["group"] = L.group.to_json()
    out["gamma"] = L.gamma.to_json()
    if sigma is not None:
        out["sigma"] = sigma.to_json()
    out["basis"] = [{"name": n, "degree": list(g.coords)} for n, g in zip(L.names, L.degrees)]
    brackets = []
    for (i, j), vec in sorted(L.structure.items()):
        if i < j or (i == j and vec):
            res = [{"k": k, "coeff": str(c)} for k, c in sorted(vec.items()) if not c.is_zero()]
            if res:
                brackets.append({"i": i, "j": j, "result": res})
    out["brackets"] = brackets
    if modules:
        out["modules"] = {k: module_to_json(M) for k, M in sorted(modules.items())}
    return out


def cocycle_from_file_data(spec: GroupSpec, data) -> Cocycle:
    _validate(data, _MATRIX, "cocycle file")
    _matrix_shape(data["matrix"], spec.ngens, "sigma")
    try:
        sigma = cocycle_from_json(spec, data)
    except (ValueError, TypeError) as e:
        raise SchemaError(f"invalid cocycle: {e}") from None
    bad = sigma.torsion_violations()
    if bad:
        raise SchemaError("invalid sigma: " + bad[0])
    return sigma


def load_algebra(path) -> AlgebraFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ColorLieError(f"cannot read {path}: {e.strerror}") from None
    return loads_algebra(text)


def loads_algebra(text: str) -> AlgebraFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    try:
        return algebra_from_json(data)
    except ColorLieError:
        raise
    except (ValueError, TypeError, KeyError, OverflowError) as e:
        raise SchemaError(f"invalid algebra file: {e}") from None


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
