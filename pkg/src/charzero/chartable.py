"""Character-table data model: exact constructors, ingestion, validation.

Tables are immutable after construction.  Constructors cover symmetric,
dihedral, cyclic and abelian groups plus direct products; everything else is
ingested from the JSON schema and gated by validate().
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from .cyclotomic import Cyclotomic, cyc_from_json, cyc_to_json, root_of_unity
from .partitions import mn_value, partitions_of, z_order

__all__ = [
    "ConjClass",
    "Character",
    "TableMetadata",
    "CharacterTable",
    "SchemaError",
    "build_symmetric",
    "build_dihedral",
    "build_cyclic",
    "build_abelian",
    "direct_product",
    "validate",
    "load_table",
    "save_table",
    "table_to_json",
    "table_from_json",
]


class SchemaError(ValueError):
    """The input does not conform to the table JSON schema."""


@dataclass(frozen=True)
class ConjClass:
    name: str
    size: int
    element_order: int
    label: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Character:
    name: str
    values: tuple[Cyclotomic, ...]

    @property
    def degree(self) -> int:
        d = self.values[0].as_integer()
        if d is None:
            raise ValueError(f"character {self.name} has non-integer identity value")
        return d


@dataclass(frozen=True)
class TableMetadata:
    solvable: bool | None = None
    nilpotent: bool | None = None
    abelian_by_metanilpotent: bool | None = None
    fitting_height: int | None = None
    r_value: int | None = None
    simple: bool | None = None
    notes: str | None = None


@dataclass(frozen=True)
class CharacterTable:
    group_name: str
    order: int
    classes: tuple[ConjClass, ...]
    characters: tuple[Character, ...]
    metadata: TableMetadata = field(default_factory=TableMetadata)

    @property
    def n_linear(self) -> int:
        return sum(1 for ch in self.characters if ch.degree == 1)

    @property
    def derived_order(self) -> int:
        # |G'| = |G| / #linear characters, since G/G' indexes the linear ones.
        return self.order // self.n_linear

    def nonlinear_indices(self) -> list[int]:
        return [i for i, ch in enumerate(self.characters) if ch.degree > 1]


# ---------------------------------------------------------------------------
# constructors


def build_symmetric(n: int) -> CharacterTable:
    """Exact character table of S_n via the Murnaghan-Nakayama recursion."""
    if not 1 <= n <= 14:
        raise ValueError("build_symmetric supports 1 <= n <= 14")
    parts = partitions_of(n)
    # Identity class (cycle type 1^n) goes first; the rest keep reverse-lex order.
    identity = (1,) * n
    class_order = [identity] + [mu for mu in parts if mu != identity]
    nfact = math.factorial(n)
    classes = tuple(
        ConjClass(
            name=f"g{mu}" if mu else "g()",
            size=nfact // z_order(mu),
            element_order=math.lcm(*mu) if mu else 1,
            label=mu,
        )
        for mu in class_order
    )
    characters = tuple(
        Character(
            name=f"chi{lam}",
            values=tuple(Cyclotomic.from_rational(mn_value(lam, mu)) for mu in class_order),
        )
        for lam in parts
    )
    meta = TableMetadata(solvable=(n <= 4), simple=False)
    return CharacterTable(f"S{n}", nfact, classes, characters, meta)


def build_dihedral(m: int) -> CharacterTable:
    """Character table of the dihedral group D_{2m} of order 2m, m >= 3."""
    if m < 3:
        raise ValueError("build_dihedral requires m >= 3")
    order = 2 * m
    one = Cyclotomic.one()
    zero = Cyclotomic.zero()
    two = Cyclotomic.from_rational(2)

    def rot_order(j: int) -> int:
        return m // math.gcd(m, j) if j else 1

    classes = [ConjClass("e", 1, 1)]
    if m % 2 == 0:
        # e, x^(m/2), pairs {x^j, x^-j}, two reflection classes
        classes.append(ConjClass(f"x^{m // 2}", 1, 2))
        for j in range(1, m // 2):
            classes.append(ConjClass(f"x^{j}", 2, rot_order(j)))
        classes.append(ConjClass("refl_even", m // 2, 2))
        classes.append(ConjClass("refl_odd", m // 2, 2))
        refl_cols = 2
        rot_js = [0, m // 2] + list(range(1, m // 2))
    else:
        for j in range(1, (m + 1) // 2):
            classes.append(ConjClass(f"x^{j}", 2, rot_order(j)))
        classes.append(ConjClass("refl", m, 2))
        refl_cols = 1
        rot_js = [0] + list(range(1, (m + 1) // 2))

    characters = []
    if m % 2 == 0:
        for a in (1, -1):
            for b in (1, -1):
                vals = [Cyclotomic.from_rational(a**j) for j in rot_js]
                vals.append(Cyclotomic.from_rational(b))
                vals.append(Cyclotomic.from_rational(a * b))
                characters.append(Character(f"lin[{a},{b}]", tuple(vals)))
        n_nonlin = m // 2 - 1
    else:
        for b in (1, -1):
            vals = [one] * len(rot_js) + [Cyclotomic.from_rational(b)]
            characters.append(Character(f"lin[{b}]", tuple(vals)))
        n_nonlin = (m - 1) // 2

    for i in range(1, n_nonlin + 1):
        vals = []
        for j in rot_js:
            if j == 0:
                vals.append(two)
            else:
                vals.append(root_of_unity(m, i * j) + root_of_unity(m, -i * j))
        vals.extend([zero] * refl_cols)
        characters.append(Character(f"chi_{i}", tuple(vals)))

    is_2power = m & (m - 1) == 0
    meta = TableMetadata(
        solvable=True,
        nilpotent=is_2power,
        fitting_height=1 if is_2power else None,
        simple=False,
    )
    return CharacterTable(f"D{order}", order, tuple(classes), tuple(characters), meta)


def build_cyclic(n: int) -> CharacterTable:
    """Cyclic group C_n; all characters linear with root-of-unity values."""
    if n < 1:
        raise ValueError("build_cyclic requires n >= 1")
    classes = tuple(
        ConjClass("e" if k == 0 else f"x^{k}", 1, n // math.gcd(n, k) if k else 1)
        for k in range(n)
    )
    characters = tuple(
        Character(f"lin_{j}", tuple(root_of_unity(n, j * k) for k in range(n)))
        for j in range(n)
    )
    meta = TableMetadata(
        solvable=True,
        nilpotent=True,
        fitting_height=1 if n > 1 else None,
        r_value=1 if n > 1 else None,
        simple=False,
    )
    return CharacterTable(f"C{n}", n, classes, characters, meta)


def build_abelian(invariant_factors: list[int]) -> CharacterTable:
    """Abelian group as a direct product of cyclic groups."""
    factors = list(invariant_factors)
    if any(f < 2 for f in factors):
        raise ValueError("invariant factors must be >= 2")
    if not factors:
        return build_cyclic(1)
    table = build_cyclic(factors[0])
    for f in factors[1:]:
        table = direct_product(table, build_cyclic(f))
    name = "x".join(f"C{f}" for f in factors)
    meta = TableMetadata(
        solvable=True,
        nilpotent=True,
        fitting_height=1,
        r_value=len(factors),
        simple=False,
    )
    return replace(table, group_name=name, metadata=meta)


def _combine_metadata(a: TableMetadata, b: TableMetadata) -> TableMetadata:
    def both_and(x, y):
        return (x and y) if (x is not None and y is not None) else None

    solvable = both_and(a.solvable, b.solvable)
    nilpotent = both_and(a.nilpotent, b.nilpotent)
    fh = None
    if solvable and a.fitting_height is not None and b.fitting_height is not None:
        fh = max(a.fitting_height, b.fitting_height)
    return TableMetadata(solvable=solvable, nilpotent=nilpotent, fitting_height=fh)


def direct_product(a: CharacterTable, b: CharacterTable) -> CharacterTable:
    """Kronecker construction: paired classes, pairwise character products."""
    classes = tuple(
        ConjClass(
            name=f"{ca.name}|{cb.name}",
            size=ca.size * cb.size,
            element_order=math.lcm(ca.element_order, cb.element_order),
        )
        for ca in a.classes
        for cb in b.classes
    )
    characters = tuple(
        Character(
            name=f"{xa.name}*{xb.name}",
            values=tuple(va * vb for va in xa.values for vb in xb.values),
        )
        for xa in a.characters
        for xb in b.characters
    )
    return CharacterTable(
        group_name=f"{a.group_name}x{b.group_name}",
        order=a.order * b.order,
        classes=classes,
        characters=characters,
        metadata=_combine_metadata(a.metadata, b.metadata),
    )


# ---------------------------------------------------------------------------
# validation


def validate(t: CharacterTable) -> list[str]:
    """Check every table invariant; returns a list of failure descriptions
    (empty list = table is consistent)."""
    fails: list[str] = []
    nc = len(t.classes)

    ident = [i for i, c in enumerate(t.classes) if c.element_order == 1]
    if len(ident) != 1:
        fails.append(f"expected exactly one identity class, found {len(ident)}")
    else:
        i = ident[0]
        if i != 0:
            fails.append(f"identity class must be first, found at index {i}")
        if t.classes[i].size != 1:
            fails.append(f"identity class has size {t.classes[i].size}")

    if sum(c.size for c in t.classes) != t.order:
        fails.append("class sizes do not sum to the group order")
    for i, c in enumerate(t.classes):
        if c.size < 1 or t.order % c.size != 0:
            fails.append(f"class {i} size {c.size} does not divide order")
        if c.element_order < 1 or t.order % c.element_order != 0:
            fails.append(f"class {i} element order {c.element_order} does not divide order")

    if len(t.characters) != nc:
        fails.append(f"{len(t.characters)} characters vs {nc} classes")

    degrees = []
    for r, ch in enumerate(t.characters):
        if len(ch.values) != nc:
            fails.append(f"character {r} has {len(ch.values)} values, expected {nc}")
            continue
        d = ch.values[0].as_integer()
        if d is None or d < 1:
            fails.append(f"character {r} degree is not a positive integer")
        else:
            degrees.append(d)

    if len(degrees) == len(t.characters):
        if sum(d * d for d in degrees) != t.order:
            fails.append("sum of squared degrees does not equal the group order")
        n_linear = sum(1 for d in degrees if d == 1)
        if n_linear == 0 or t.order % n_linear != 0:
            fails.append(f"number of linear characters {n_linear} does not divide order")

    if any(len(ch.values) != nc for ch in t.characters):
        return fails  # orthogonality is meaningless with ragged rows

    conj_rows = [[v.conj() for v in ch.values] for ch in t.characters]
    order_c = Cyclotomic.from_rational(t.order)

    # first (row) orthogonality
    for r1, ch1 in enumerate(t.characters):
        for r2 in range(r1, len(t.characters)):
            acc = Cyclotomic.zero()
            for c, cls in enumerate(t.classes):
                acc = acc + cls.size * (ch1.values[c] * conj_rows[r2][c])
            expect = order_c if r1 == r2 else Cyclotomic.zero()
            if acc != expect:
                fails.append(f"row orthogonality fails for characters {r1},{r2}")

    # second (column) orthogonality
    for c1 in range(nc):
        for c2 in range(c1, nc):
            acc = Cyclotomic.zero()
            for r in range(len(t.characters)):
                acc = acc + t.characters[r].values[c1] * conj_rows[r][c2]
            if c1 == c2:
                expect = Cyclotomic.from_rational(Fraction(t.order, t.classes[c1].size))
            else:
                expect = Cyclotomic.zero()
            if acc != expect:
                fails.append(f"column orthogonality fails for classes {c1},{c2}")

    m = t.metadata
    if m.nilpotent and m.fitting_height is not None and m.fitting_height != 1:
        fails.append("nilpotent table must have fitting_height 1")
    if m.solvable is False:
        for name in ("fitting_height", "r_value", "abelian_by_metanilpotent"):
            if getattr(m, name) is not None:
                fails.append(f"non-solvable table must not carry {name}")
    if m.fitting_height is not None and m.fitting_height < 1:
        fails.append("fitting_height must be a positive integer")
    if m.r_value is not None and m.r_value < 1:
        fails.append("r_value must be a positive integer")
    return fails


# ---------------------------------------------------------------------------
# serialization


_META_FIELDS = (
    "solvable",
    "nilpotent",
    "abelian_by_metanilpotent",
    "fitting_height",
    "r_value",
    "simple",
    "notes",
)


def table_to_json(t: CharacterTable) -> dict:
    meta = {k: getattr(t.metadata, k) for k in _META_FIELDS if getattr(t.metadata, k) is not None}
    return {
        "group_name": t.group_name,
        "order": t.order,
        "classes": [
            {
                "name": c.name,
                "size": c.size,
                "element_order": c.element_order,
                **({"label": list(c.label)} if c.label is not None else {}),
            }
            for c in t.classes
        ],
        "characters": [
            {"name": ch.name, "values": [cyc_to_json(v) for v in ch.values]}
            for ch in t.characters
        ],
        "metadata": meta,
    }


def _require(obj: dict, key: str, kinds, where: str):
    if key not in obj:
        raise SchemaError(f"missing field '{key}' in {where}")
    val = obj[key]
    if not isinstance(val, kinds) or isinstance(val, bool) and kinds is int:
        raise SchemaError(f"field '{key}' in {where} has wrong type")
    return val


def table_from_json(data: dict) -> CharacterTable:
    if not isinstance(data, dict):
        raise SchemaError("table document must be a JSON object")
    name = _require(data, "group_name", str, "table")
    order = _require(data, "order", int, "table")
    raw_classes = _require(data, "classes", list, "table")
    raw_chars = _require(data, "characters", list, "table")

    classes = []
    for i, rc in enumerate(raw_classes):
        if not isinstance(rc, dict):
            raise SchemaError(f"class {i} must be an object")
        label = rc.get("label")
        classes.append(
            ConjClass(
                name=_require(rc, "name", str, f"class {i}"),
                size=_require(rc, "size", int, f"class {i}"),
                element_order=_require(rc, "element_order", int, f"class {i}"),
                label=tuple(label) if label is not None else None,
            )
        )

    characters = []
    for i, rc in enumerate(raw_chars):
        if not isinstance(rc, dict):
            raise SchemaError(f"character {i} must be an object")
        vals = _require(rc, "values", list, f"character {i}")
        if len(vals) != len(classes):
            raise SchemaError(
                f"character {i} has {len(vals)} values for {len(classes)} classes"
            )
        try:
            values = tuple(cyc_from_json(v) for v in vals)
        except (ValueError, KeyError, TypeError) as exc:
            raise SchemaError(f"character {i} has a malformed value: {exc}") from exc
        characters.append(Character(name=_require(rc, "name", str, f"character {i}"), values=values))

    raw_meta = data.get("metadata", {})
    if not isinstance(raw_meta, dict):
        raise SchemaError("metadata must be an object")
    unknown = set(raw_meta) - set(_META_FIELDS)
    if unknown:
        raise SchemaError(f"unknown metadata fields: {sorted(unknown)}")
    meta = TableMetadata(**raw_meta)

    # The identity class must be first; ingestion reorders if needed.
    ident = [i for i, c in enumerate(classes) if c.element_order == 1]
    if len(ident) == 1 and ident[0] != 0:
        k = ident[0]
        perm = [k] + [i for i in range(len(classes)) if i != k]
        classes = [classes[i] for i in perm]
        characters = [
            Character(ch.name, tuple(ch.values[i] for i in perm)) for ch in characters
        ]

    for i, ch in enumerate(characters):
        if ch.values and ch.values[0].as_integer() is None:
            raise SchemaError(f"character {i} identity value is not a rational integer")

    return CharacterTable(name, order, tuple(classes), tuple(characters), meta)


def save_table(t: CharacterTable, path) -> None:
    Path(path).write_text(json.dumps(table_to_json(t), indent=1) + "\n")


def load_table(path, check: bool = False) -> CharacterTable:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON in {path}: {exc}") from exc
    t = table_from_json(data)
    if check:
        fails = validate(t)
        if fails:
            raise ValueError(f"table {path} failed validation: {fails}")
    return t
