"""Homotopy groups of spheres as declared data.

A :class:`Catalog` holds groups ``pi_m(S^n)`` keyed by ``(m, n)`` together
with the homomorphisms the coincidence engine needs:

* ``suspension``    E : pi_m(S^n) -> pi_{m+1}(S^{n+1})
* ``hopf_hilton``   h'_j : pi_m(S^n) -> pi_m(S^{n+j(n-1)})
* ``minus_iota``    [f] -> (-iota) o [f], an involution of pi_m(S^n)
* ``total_h_prime`` the total Hopf-Hilton map out of pi_m(S^n), into the
                    sum over j of pi_m(S^{n+j(n-1)}) with Witt multiplicities
* ``boundary``      d : pi_m(S^n) -> pi_{m-1}(S^{n-1}) of the tangent
                    sphere bundle sequence

Nothing here is computed from first principles; files are parsed, checked
for consistency and then treated as immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, NamedTuple

import jsonschema

from .abelian import (
    INFINITE,
    FgAbGroup,
    Homomorphism,
    Subgroup,
    compose,
    direct_sum,
    image,
    kernel,
    stack,
)
from .errors import (
    IllDefinedHom,
    InconsistentStability,
    MissingData,
    ParseError,
    SchemaViolation,
    ShapeMismatch,
)

HOM_KINDS = ("suspension", "hopf_hilton", "minus_iota", "total_h_prime", "boundary")
WECKEN_VALUES = ("yes", "no", "unknown")

_SCHEMA = {
    "type": "object",
    "properties": {
        "description": {"type": "string"},
        "groups": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["m", "n", "factors", "generators"],
                "properties": {
                    "m": {"type": "integer", "minimum": 1},
                    "n": {"type": "integer", "minimum": 1},
                    "factors": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "generators": {"type": "array", "items": {"type": "string"}},
                    "note": {"type": "string"},
                },
                "additionalProperties": False,
            },
        },
        "homs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "m", "n"],
                "properties": {
                    "kind": {"enum": list(HOM_KINDS)},
                    "m": {"type": "integer", "minimum": 1},
                    "n": {"type": "integer", "minimum": 1},
                    "j": {"type": "integer", "minimum": 1},
                    "matrix": {"type": "array", "items": {
                        "type": "array", "items": {"type": "integer"}}},
                    "images": {"type": "object", "additionalProperties": {
                        "type": "object", "additionalProperties": {"type": "integer"}}},
                    "target": {"type": "array", "items": {
                        "type": "array", "items": {"type": "integer"},
                        "minItems": 2, "maxItems": 2}},
                    "note": {"type": "string"},
                },
                "oneOf": [{"required": ["matrix"]}, {"required": ["images"]}],
                "additionalProperties": False,
            },
        },
        "flags": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["m", "n"],
                "properties": {
                    "m": {"type": "integer", "minimum": 1},
                    "n": {"type": "integer", "minimum": 1},
                    "all_suspended": {"type": "boolean"},
                    "h_prime_zero": {"type": "boolean"},
                    "wecken": {"enum": list(WECKEN_VALUES)},
                    "stable_from": {"type": "integer", "minimum": 0},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


class SphereGroupKey(NamedTuple):
    """Key ``(m, n)`` of the group ``pi_m(S^n)``."""

    m: int
    n: int

    def check(self) -> SphereGroupKey:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"sphere group key needs m, n >= 1, got {tuple(self)}")
        return self

    def __str__(self):
        return f"pi_{self.m}(S^{self.n})"


def _key(m, n=None) -> SphereGroupKey:
    if n is None:
        m, n = m
    return SphereGroupKey(int(m), int(n)).check()


def hopf_target(key: SphereGroupKey, j: int) -> SphereGroupKey:
    return SphereGroupKey(key.m, key.n + j * (key.n - 1))


def witt_count(weight: int) -> int:
    """Number of basic products of the given weight in two letters."""
    total = 0
    for d in range(1, weight + 1):
        if weight % d == 0:
            total += _moebius(d) * 2 ** (weight // d)
    return total // weight


def _moebius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def default_total_targets(key: SphereGroupKey) -> list[SphereGroupKey]:
    """Summands of the total Hopf-Hilton target for ``pi_m(S^n)``."""
    out = []
    if key.n < 2:
        return out
    j = 1
    while hopf_target(key, j).n <= key.m:
        out += [hopf_target(key, j)] * witt_count(j + 1)
        j += 1
    return out


@dataclass(frozen=True)
class KeyFlags:
    all_suspended: bool | None = None
    h_prime_zero: bool | None = None
    wecken: str | None = None
    stable_from: int | None = None

    def to_json(self, key: SphereGroupKey) -> dict:
        out: dict = {"m": key.m, "n": key.n}
        for name in ("all_suspended", "h_prime_zero", "wecken", "stable_from"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out


@dataclass(frozen=True)
class Catalog:
    """Validated, immutable store of sphere groups and maps between them."""

    groups: dict = field(default_factory=dict)
    suspensions: dict = field(default_factory=dict)
    hopf_hilton: dict = field(default_factory=dict)
    minus_iota: dict = field(default_factory=dict)
    total_h_prime: dict = field(default_factory=dict)
    boundary: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)
    description: str = ""
    # memo for suspension composites; not part of the value
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    # -- lookups ------------------------------------------------------------

    def keys(self) -> list[SphereGroupKey]:
        return sorted(self.groups)

    def has_group(self, key) -> bool:
        key = _key(key)
        return key in self.groups or key.m < key.n

    def group(self, key) -> FgAbGroup:
        key = _key(key)
        if key in self.groups:
            return self.groups[key]
        if key.m < key.n:
            return FgAbGroup.trivial()
        raise MissingData(f"{key} is not in the catalog")

    def key_flags(self, key) -> KeyFlags:
        return self.flags.get(_key(key), KeyFlags())

    def default_stable_from(self, key) -> int:
        key = _key(key)
        return max(0, key.m - 2 * key.n + 2)

    def stable_from(self, key) -> int:
        key = _key(key)
        declared = self.key_flags(key).stable_from
        return self.default_stable_from(key) if declared is None else declared

    def all_suspended(self, key) -> bool:
        return bool(self.key_flags(key).all_suspended)

    def h_prime_zero(self, key) -> bool:
        # Hopf-Hilton invariants vanish on suspended classes.
        flags = self.key_flags(key)
        return bool(flags.h_prime_zero) or bool(flags.all_suspended)

    def wecken(self, key) -> str:
        """Status ``yes``/``no``/``unknown`` of the Wecken condition at ``(m, n)``."""
        key = _key(key)
        declared = self.key_flags(key).wecken
        if declared is not None:
            return declared
        m, n = key
        if n % 2 == 1 or n == 2 or m < n or m < 2 * n - 2:
            return "yes"
        return _derive_wecken(self, key)

    def suspension(self, key) -> Homomorphism:
        key = _key(key)
        if key in self.suspensions:
            return self.suspensions[key]
        source = self.group(key)
        nxt = SphereGroupKey(key.m + 1, key.n + 1)
        if source.is_trivial() and self.has_group(nxt):
            return Homomorphism.zero(source, self.group(nxt))
        raise MissingData(f"suspension {key} -> {nxt} is not in the catalog")

    # -- iteration / serialisation -----------------------------------------

    def iter_homs(self) -> Iterator[tuple[str, SphereGroupKey, int | None, Homomorphism]]:
        for key in sorted(self.suspensions):
            yield "suspension", key, None, self.suspensions[key]
        for key, j in sorted(self.hopf_hilton):
            yield "hopf_hilton", key, j, self.hopf_hilton[(key, j)]
        for key in sorted(self.minus_iota):
            yield "minus_iota", key, None, self.minus_iota[key]
        for key in sorted(self.total_h_prime):
            yield "total_h_prime", key, None, self.total_h_prime[key]
        for key in sorted(self.boundary):
            yield "boundary", key, None, self.boundary[key]

    def to_json(self) -> dict:
        groups = []
        for key in self.keys():
            G = self.groups[key]
            item = {"m": key.m, "n": key.n, "factors": list(G.factors),
                    "generators": list(G.generator_names)}
            if ("group", key, None) in self.notes:
                item["note"] = self.notes[("group", key, None)]
            groups.append(item)
        homs = []
        for kind, key, j, hom in self.iter_homs():
            item = {"kind": kind, "m": key.m, "n": key.n}
            if j is not None:
                item["j"] = j
            item["matrix"] = [list(row) for row in hom.matrix]
            if kind == "total_h_prime":
                targets = self._total_targets.get(key)
                if targets is not None:
                    item["target"] = [list(t) for t in targets]
            if (kind, key, j) in self.notes:
                item["note"] = self.notes[(kind, key, j)]
            homs.append(item)
        flags = [self.flags[key].to_json(key) for key in sorted(self.flags)]
        out: dict = {}
        if self.description:
            out["description"] = self.description
        out.update({"groups": groups, "homs": homs, "flags": flags})
        return out

    @property
    def _total_targets(self) -> dict:
        return self._memo.setdefault("total_targets", {})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, ensure_ascii=False) + "\n"

    def replace_hom(self, kind: str, key, matrix, j: int | None = None) -> Catalog:
        """Copy of the catalog with one stored matrix swapped (revalidated)."""
        data = self.to_json()
        key = _key(key)
        for item in data["homs"]:
            if (item["kind"], item["m"], item["n"], item.get("j")) == (kind, key.m, key.n, j):
                item["matrix"] = [list(r) for r in matrix]
                break
        else:
            raise MissingData(f"no {kind} entry at {key}")
        return parse_catalog(data)


def save_catalog(cat: Catalog, path) -> None:
    Path(path).write_text(cat.dumps(), encoding="utf-8")


# ---------------------------------------------------------------------------
# Loading and validation
# ---------------------------------------------------------------------------

def load_catalog(path) -> Catalog:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read catalog {path}: {exc}") from exc
    return loads_catalog(text, source=str(path))


def loads_catalog(text: str, source: str = "<string>") -> Catalog:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: not valid JSON ({exc})") from exc
    return parse_catalog(data, source=source)


def bundled_path(name: str):
    return resources.files("coincidence") / "data" / name


def bundled_catalog(name: str = "toda_16_6.catalog") -> Catalog:
    return loads_catalog(bundled_path(name).read_text(encoding="utf-8"), source=name)


BUNDLED_CATALOGS = ("toda_16_6.catalog", "small_cases.catalog")


def merge_catalog_data(*documents: dict) -> dict:
    """Concatenate decoded catalogs; duplicate keys are caught when parsing."""
    merged = {"groups": [], "homs": [], "flags": []}
    for doc in documents:
        for part in merged:
            merged[part].extend(doc.get(part, []))
    return merged


def default_catalog() -> Catalog:
    """All bundled catalogs merged into one."""
    docs = []
    for name in BUNDLED_CATALOGS:
        try:
            docs.append(json.loads(bundled_path(name).read_text(encoding="utf-8")))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{name}: not valid JSON ({exc})") from exc
    return parse_catalog(merge_catalog_data(*docs), source="bundled catalogs")


def _where(item: dict) -> str:
    key = f"({item.get('m')}, {item.get('n')})"
    if "kind" in item:
        j = f", j={item['j']}" if "j" in item else ""
        return f"{item['kind']} at {key}{j}"
    return f"entry at {key}"


def parse_catalog(data, source: str = "<data>") -> Catalog:
    """Build and validate a catalog from decoded JSON."""
    try:
        jsonschema.validate(data, _SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        bad = exc.instance if isinstance(exc.instance, dict) else None
        where = _where(bad) if bad and "m" in bad else path or "top level"
        raise SchemaViolation(f"{source}: {where}: {exc.message}") from exc

    groups: dict = {}
    notes: dict = {}
    for item in data.get("groups", []):
        key = _key(item["m"], item["n"])
        if key in groups:
            raise SchemaViolation(f"{source}: duplicate group {key}")
        try:
            groups[key] = FgAbGroup(tuple(item["factors"]), tuple(item["generators"]))
        except (ValueError, ShapeMismatch) as exc:
            raise SchemaViolation(f"{source}: group {key}: {exc}") from exc
        if "note" in item:
            notes[("group", key, None)] = item["note"]

    def need(key: SphereGroupKey, what: str) -> FgAbGroup:
        if key in groups:
            return groups[key]
        if key.m < key.n:
            return FgAbGroup.trivial()
        raise SchemaViolation(f"{source}: {what} refers to {key}, which is not declared")

    tables = {kind: {} for kind in HOM_KINDS}
    total_targets: dict = {}
    for item in data.get("homs", []):
        kind = item["kind"]
        key = _key(item["m"], item["n"])
        where = f"{source}: {_where(item)}"
        j = item.get("j")
        if (kind == "hopf_hilton") != (j is not None):
            raise SchemaViolation(f"{where}: 'j' is required for hopf_hilton and only there")
        if "target" in item and kind != "total_h_prime":
            raise SchemaViolation(f"{where}: 'target' is only allowed on total_h_prime")
        src = need(key, where)
        if kind == "suspension":
            tgt = need(SphereGroupKey(key.m + 1, key.n + 1), where)
        elif kind == "hopf_hilton":
            if key.n < 2:
                raise SchemaViolation(f"{where}: Hopf-Hilton invariants need n >= 2")
            tgt = need(hopf_target(key, j), where)
        elif kind == "minus_iota":
            tgt = src
        elif kind == "total_h_prime":
            if "target" in item:
                targets = [_key(t) for t in item["target"]]
                total_targets[key] = targets
            else:
                targets = default_total_targets(key)
            tgt = direct_sum(*(need(t, where) for t in targets))
        else:
            if key.n < 2:
                raise SchemaViolation(f"{where}: boundary needs n >= 2")
            tgt = need(SphereGroupKey(key.m - 1, key.n - 1), where)
        matrix = item.get("matrix")
        if matrix is None:
            matrix = _matrix_from_images(item["images"], src, tgt, where)
        slot = (key, j) if kind == "hopf_hilton" else key
        if slot in tables[kind]:
            raise SchemaViolation(f"{where}: duplicate entry")
        try:
            tables[kind][slot] = Homomorphism(src, tgt, matrix)
        except ShapeMismatch as exc:
            raise SchemaViolation(f"{where}: {exc}") from exc
        except IllDefinedHom as exc:
            raise IllDefinedHom(f"{where}: {exc}") from exc
        if "note" in item:
            notes[(kind, key, j)] = item["note"]

    flags: dict = {}
    for item in data.get("flags", []):
        key = _key(item["m"], item["n"])
        if key in flags:
            raise SchemaViolation(f"{source}: duplicate flags for {key}")
        need(key, f"flags at {tuple(key)}")
        flags[key] = KeyFlags(
            all_suspended=item.get("all_suspended"),
            h_prime_zero=item.get("h_prime_zero"),
            wecken=item.get("wecken"),
            stable_from=item.get("stable_from"),
        )

    cat = Catalog(
        groups=groups,
        suspensions=tables["suspension"],
        hopf_hilton=tables["hopf_hilton"],
        minus_iota=tables["minus_iota"],
        total_h_prime=tables["total_h_prime"],
        boundary=tables["boundary"],
        flags=flags,
        notes=notes,
        description=data.get("description", ""),
    )
    cat._total_targets.update(total_targets)
    _check_consistency(cat, source)
    return cat


def _matrix_from_images(images: dict, src: FgAbGroup, tgt: FgAbGroup, where: str):
    M = [[0] * len(src) for _ in tgt.factors]
    for sname, column in images.items():
        if sname not in src.generator_names:
            raise SchemaViolation(f"{where}: unknown source generator {sname!r}")
        j = src.generator_names.index(sname)
        for tname, coeff in column.items():
            if tname not in tgt.generator_names:
                raise SchemaViolation(f"{where}: unknown target generator {tname!r}")
            M[tgt.generator_names.index(tname)][j] = coeff
    return M


def _check_consistency(cat: Catalog, source: str) -> None:
    for key, hom in cat.minus_iota.items():
        if compose(hom, hom) != Homomorphism.identity(hom.source):
            raise SchemaViolation(f"{source}: minus_iota at {tuple(key)} is not an involution")
    for key, flags in cat.flags.items():
        if flags.all_suspended:
            prev = SphereGroupKey(key.m - 1, key.n - 1)
            if prev in cat.suspensions and not cat.suspensions[prev].is_surjective():
                raise SchemaViolation(
                    f"{source}: flags at {tuple(key)}: all_suspended but the stored "
                    f"suspension from {prev} is not onto")
        if flags.h_prime_zero or flags.all_suspended:
            for (hkey, j), hom in cat.hopf_hilton.items():
                if hkey == key and any(any(row) for row in hom.matrix):
                    raise SchemaViolation(
                        f"{source}: flags at {tuple(key)}: h' declared zero but "
                        f"hopf_hilton j={j} is nonzero")
    for key in cat.keys():
        _check_stability(cat, key, source)


def _check_stability(cat: Catalog, key: SphereGroupKey, source: str) -> None:
    s = cat.stable_from(key)
    level = SphereGroupKey(key.m + s, key.n + s)
    if s < cat.default_stable_from(key) and level not in cat.suspensions:
        raise InconsistentStability(
            f"{source}: stable_from={s} at {tuple(key)} is below the default "
            f"{cat.default_stable_from(key)} but the suspension from {level} is not stored")
    while level in cat.suspensions:
        if not cat.suspensions[level].is_isomorphism():
            raise InconsistentStability(
                f"{source}: {tuple(key)} is declared stable from r={s}, but the "
                f"suspension out of {level} is not an isomorphism")
        level = SphereGroupKey(level.m + 1, level.n + 1)


def _derive_wecken(cat: Catalog, key: SphereGroupKey) -> str:
    prev = SphereGroupKey(key.m - 1, key.n - 1)
    if not cat.has_group(prev):
        return "unknown"
    if cat.group(prev).is_trivial():
        return "yes"
    try:
        E = cat.suspension(prev)
    except MissingData:
        return "unknown"
    ker = kernel(E)
    if ker.cardinality() == 1:
        return "yes"
    if key in cat.boundary:
        meet = image(cat.boundary[key]).intersection(ker)
        return "yes" if meet.cardinality() == 1 else "no"
    return "unknown"


# ---------------------------------------------------------------------------
# Derived homomorphisms
# ---------------------------------------------------------------------------

def _levels(cat: Catalog, key: SphereGroupKey, r) -> int:
    if r != INFINITE and (not isinstance(r, int) or r < 0):
        raise ValueError(f"suspension level must be a non-negative integer or INFINITE, got {r!r}")
    s = cat.stable_from(key)
    return s if r == INFINITE else min(r, s)


def suspension_power(cat: Catalog, key, r) -> Homomorphism:
    """Iterated suspension ``E^r`` out of ``pi_m(S^n)``.

    Beyond the stable level the remaining suspensions are isomorphisms, so
    the composite is cut off there.
    """
    key = _key(key)
    levels = _levels(cat, key, r)
    memo = cat._memo.setdefault("suspension_power", {})
    if (key, levels) in memo:
        return memo[(key, levels)]
    hom = Homomorphism.identity(cat.group(key))
    for i in range(levels):
        hom = compose(cat.suspension(SphereGroupKey(key.m + i, key.n + i)), hom)
    memo[(key, levels)] = hom
    return hom


def hopf_blocks(cat: Catalog, key) -> list[tuple[int, Homomorphism]]:
    """The nonzero ``h'_j`` out of ``pi_m(S^n)`` (missing entries must be provably zero)."""
    key = _key(key)
    source = cat.group(key)
    if key.n < 2 or cat.h_prime_zero(key) or source.is_trivial():
        return []
    blocks = []
    j = 1
    while hopf_target(key, j).n <= key.m:
        tkey = hopf_target(key, j)
        hom = cat.hopf_hilton.get((key, j))
        if hom is not None:
            if any(any(row) for row in hom.matrix):
                blocks.append((j, hom))
        elif cat.has_group(tkey) and cat.group(tkey).is_trivial():
            pass
        elif source.is_finite() and (
                tkey.n == tkey.m or (cat.has_group(tkey) and not cat.group(tkey).is_finite()
                                     and set(cat.group(tkey).factors) == {0})):
            pass  # finite group into a free one
        else:
            raise MissingData(f"Hopf-Hilton invariant h'_{j} on {key} (into {tkey}) is not in the catalog")
        j += 1
    return blocks


def e_r_h(cat: Catalog, key, r) -> Homomorphism:
    """``E^r o h = (E^r, E^r o h'_1, E^r o h'_2, ...)`` with zero blocks dropped."""
    key = _key(key)
    levels = _levels(cat, key, r)
    memo = cat._memo.setdefault("e_r_h", {})
    if (key, levels) in memo:
        return memo[(key, levels)]
    parts = [suspension_power(cat, key, r)]
    for j, hom in hopf_blocks(cat, key):
        parts.append(compose(suspension_power(cat, hopf_target(key, j), r), hom))
    result = stack(cat.group(key), parts)
    memo[(key, levels)] = result
    return result


def e_r_h_prime(cat: Catalog, key, r) -> Homomorphism:
    """Only the Hopf-Hilton part ``(E^r o h'_1, E^r o h'_2, ...)``."""
    key = _key(key)
    source = cat.group(key)
    parts = [compose(suspension_power(cat, hopf_target(key, j), r), hom)
             for j, hom in hopf_blocks(cat, key)]
    return stack(source, parts)


def minus_iota_action(cat: Catalog, key) -> Homomorphism:
    """The involution ``[f] -> (-iota) o [f]`` on ``pi_m(S^n)``."""
    key = _key(key)
    if key in cat.minus_iota:
        return cat.minus_iota[key]
    G = cat.group(key)
    if G.is_trivial() or cat.all_suspended(key):
        return Homomorphism.scalar(G, -1)
    raise MissingData(
        f"(-iota) action on {key} is not in the catalog and the group is not all suspended")


def total_h_prime(cat: Catalog, key) -> Homomorphism:
    key = _key(key)
    if key in cat.total_h_prime:
        return cat.total_h_prime[key]
    G = cat.group(key)
    if G.is_trivial():
        return Homomorphism.zero(G, FgAbGroup.trivial())
    if cat.all_suspended(key):
        targets = default_total_targets(key)
        if all(cat.has_group(t) for t in targets):
            return Homomorphism.zero(G, direct_sum(*(cat.group(t) for t in targets)))
    raise MissingData(f"total Hopf-Hilton homomorphism on {key} is not in the catalog")


# ---------------------------------------------------------------------------
# Validation reports
# ---------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        tail = "" if not self.details else ": " + "; ".join(self.details)
        return f"{status} {self.name}{tail}"


def validate_hopf_invariance(cat: Catalog, key) -> CheckResult:
    """Check ``h'_j(f) = h'_j(((-1)^(n+1) iota) o f)`` for every stored ``h'_j``."""
    key = _key(key)
    name = f"hopf-hilton invariance under (-1)^(n+1) iota at {tuple(key)}"
    stored = sorted(j for (k, j) in cat.hopf_hilton if k == key)
    if not stored or key.n % 2 == 1:
        return CheckResult(name, True, ["vacuous"] if not stored else [])
    try:
        action = minus_iota_action(cat, key)
    except MissingData as exc:
        return CheckResult(name, False, [str(exc)])
    G = cat.group(key)
    samples = list(G.enumerate()) if G.is_finite() and G.cardinality() <= 10**4 else G.generators()
    violations = []
    for j in stored:
        h = cat.hopf_hilton[(key, j)]
        for x in samples:
            if h.apply(x) != h.apply(action.apply(x)):
                violations.append(f"h'_{j}({x}) != h'_{j}((-iota) o {x})")
                break
    return CheckResult(name, not violations, violations)


def kernel_sequence(cat: Catalog, key, r_max: int | None = None) -> list:
    """``#Ker(E^r o h)`` for ``r = 0 .. r_max`` (default: the stable level)."""
    key = _key(key)
    top = cat.stable_from(key) if r_max is None else r_max
    return [kernel(e_r_h(cat, key, r)).cardinality() for r in range(top + 1)]


def validate_catalog(cat: Catalog) -> list[CheckResult]:
    """Run every data-level invariant; loading already enforced the hard ones."""
    results = []
    product = []
    for kind, key, j, hom in cat.iter_homs():
        if hom.source.is_finite():
            k = kernel(hom).cardinality()
            i = image(hom).cardinality()
            if k * i != hom.source.cardinality():
                product.append(f"{kind} at {tuple(key)}: {k}*{i} != {hom.source.cardinality()}")
    results.append(CheckResult("kernel-image product on stored maps", not product, product))
    for key in cat.keys():
        results.append(validate_hopf_invariance(cat, key))
    for key in cat.keys():
        name = f"kernel sequence of E^r o h at {tuple(key)} is nondecreasing"
        try:
            seq = kernel_sequence(cat, key)
        except MissingData as exc:
            results.append(CheckResult(name, True, [f"skipped: {exc}"]))
            continue
        ok = all(a <= b for a, b in zip(seq, seq[1:]))
        ok = ok and all(divides(a, b) for a, b in zip(seq, seq[1:]) if a != INFINITE)
        results.append(CheckResult(name, ok, [", ".join(str(v) for v in seq)]))
    return results


def divides(a, b) -> bool:
    if b == INFINITE:
        return True
    return b % a == 0


def subgroup_of_suspensions(cat: Catalog, key) -> Subgroup:
    """``E(pi_{m-1}(S^{n-1}))`` inside ``pi_m(S^n)``."""
    key = _key(key)
    G = cat.group(key)
    if cat.all_suspended(key):
        return Subgroup.whole(G)
    prev = SphereGroupKey(key.m - 1, key.n - 1)
    if prev.n >= 1 and cat.has_group(prev) and cat.group(prev).is_trivial():
        return Subgroup(G, ())
    return image(cat.suspension(prev))


def suspended_kernel_of_total(cat: Catalog, key) -> Subgroup:
    """``E(Ker total_h')`` inside ``pi_m(S^n)``."""
    key = _key(key)
    G = cat.group(key)
    prev = SphereGroupKey(key.m - 1, key.n - 1)
    if cat.has_group(prev) and cat.group(prev).is_trivial():
        return Subgroup(G, ())
    E = cat.suspension(prev)
    if prev not in cat.total_h_prime and cat.all_suspended(prev):
        # Hilton-Hopf invariants vanish on suspensions, so the kernel is everything
        return image(E)
    ker = kernel(total_h_prime(cat, prev))
    return Subgroup(G, tuple(E.apply(x) for x in ker.generators))


__all__ = [
    "BUNDLED_CATALOGS", "Catalog", "CheckResult", "KeyFlags", "SphereGroupKey", "bundled_catalog",
    "bundled_path", "default_catalog", "default_total_targets", "e_r_h", "e_r_h_prime", "hopf_blocks",
    "hopf_target", "kernel_sequence", "load_catalog", "loads_catalog",
    "merge_catalog_data", "minus_iota_action", "parse_catalog", "save_catalog", "subgroup_of_suspensions",
    "suspended_kernel_of_total", "suspension_power", "total_h_prime",
    "validate_catalog", "validate_hopf_invariance", "witt_count",
]
