"""Zero-pattern extraction and element-level classifications.

The ZeroPattern is the boolean incidence matrix (nonlinear characters x all
classes, entry true iff the exact character value is zero) that everything
downstream -- covers, graphs, Camina/central-type detection -- works from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartable import CharacterTable

__all__ = [
    "ZeroPattern",
    "DataIntegrityError",
    "zero_pattern",
    "vanishing_classes",
    "nonvanishing_classes",
    "burnside_check",
    "prime_power_check",
    "camina_classes",
    "central_type_characters",
    "is_prime_power",
    "pattern_to_json",
]


class DataIntegrityError(RuntimeError):
    """A theorem-level equivalence failed on supposedly validated data."""


@dataclass(frozen=True)
class ZeroPattern:
    table_ref: str
    nonlinear_idx: tuple[int, ...]
    class_idx: tuple[int, ...]
    class_sizes: tuple[int, ...]
    zeros: tuple[tuple[bool, ...], ...]  # rows: nonlinear chars, cols: classes
    row_names: tuple[str, ...]
    col_names: tuple[str, ...]

    @property
    def n_rows(self) -> int:
        return len(self.nonlinear_idx)

    @property
    def n_cols(self) -> int:
        return len(self.class_idx)


def zero_pattern(t: CharacterTable) -> ZeroPattern:
    nonlin = tuple(t.nonlinear_indices())
    zeros = tuple(
        tuple(v.is_zero() for v in t.characters[r].values) for r in nonlin
    )
    return ZeroPattern(
        table_ref=t.group_name,
        nonlinear_idx=nonlin,
        class_idx=tuple(range(len(t.classes))),
        class_sizes=tuple(c.size for c in t.classes),
        zeros=zeros,
        row_names=tuple(t.characters[r].name for r in nonlin),
        col_names=tuple(c.name for c in t.classes),
    )


def vanishing_classes(p: ZeroPattern) -> set[int]:
    """Classes on which at least one nonlinear character vanishes."""
    return {c for c in range(p.n_cols) if any(row[c] for row in p.zeros)}


def nonvanishing_classes(p: ZeroPattern) -> set[int]:
    """Non-central classes (size > 1) with an all-false column."""
    return {
        c
        for c in range(p.n_cols)
        if p.class_sizes[c] > 1 and not any(row[c] for row in p.zeros)
    }


def burnside_check(p: ZeroPattern) -> tuple[bool, list[int]]:
    """Every nonlinear character must vanish somewhere (Burnside); returns
    (ok, character indices of violating rows)."""
    violations = [p.nonlinear_idx[r] for r, row in enumerate(p.zeros) if not any(row)]
    return (not violations, violations)


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def prime_power_check(t: CharacterTable, p: ZeroPattern) -> tuple[bool, list[int]]:
    """Every nonlinear character must vanish on some class of prime-power
    element order (the MNO property)."""
    pp_cols = [c for c in range(p.n_cols) if is_prime_power(t.classes[c].element_order)]
    violations = [
        p.nonlinear_idx[r]
        for r, row in enumerate(p.zeros)
        if not any(row[c] for c in pp_cols)
    ]
    return (not violations, violations)


def camina_classes(t: CharacterTable, p: ZeroPattern) -> set[int]:
    """Classes where every nonlinear character vanishes.  The equivalent
    centralizer-size criterion |C_G(g)| = |G:G'| (class size = |G'|) is
    asserted against the column test; disagreement means corrupt data."""
    if p.n_rows == 0:
        return set()
    by_column = {
        c for c in range(p.n_cols) if all(row[c] for row in p.zeros)
    }
    derived = t.derived_order
    by_size = {c for c in range(p.n_cols) if t.classes[c].size == derived}
    if by_column != by_size:
        raise DataIntegrityError(
            f"Camina definitions disagree on {t.group_name}: "
            f"column test {sorted(by_column)} vs size test {sorted(by_size)}"
        )
    return by_column


def central_type_characters(t: CharacterTable, p: ZeroPattern) -> set[int]:
    """Nonlinear characters vanishing on every non-central class."""
    noncentral = [c for c in range(p.n_cols) if p.class_sizes[c] > 1]
    return {
        p.nonlinear_idx[r]
        for r, row in enumerate(p.zeros)
        if all(row[c] for c in noncentral)
    }


def pattern_to_json(p: ZeroPattern) -> dict:
    return {
        "rows": list(p.row_names),
        "cols": list(p.col_names),
        "zeros": [[1 if z else 0 for z in row] for row in p.zeros],
    }
