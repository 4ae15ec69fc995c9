"""Finite bands as Cayley tables.

A band is a finite semigroup in which every element is idempotent.  Elements
are dense integer ids 0..n-1 and the n x n Cayley table is the single source
of truth: products are read, never recomputed from generators.  Band values
are immutable and every operation here is a pure function, so they are safe
to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InternalInconsistency,
    MalformedTable,
    NotAssociative,
    NotIdempotent,
)


@dataclass(frozen=True)
class Band:
    """A validated band of the given order; build one via band_from_table."""

    order: int
    table: tuple[tuple[int, ...], ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @property
    def elements(self) -> range:
        return range(self.order)


def band_from_table(order: int, table) -> Band:
    """Validate a Cayley table and wrap it as a Band.

    Raises MalformedTable for shape or range problems, NotIdempotent or
    NotAssociative (with a witness) when the band axioms fail.
    """
    if order < 1:
        raise MalformedTable(f"order must be positive, got {order}")
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"table entries must be integers: {exc}") from exc
    if len(rows) != order or any(len(row) != order for row in rows):
        raise MalformedTable(f"expected a {order}x{order} table")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not 0 <= v < order:
                raise MalformedTable(
                    f"entry {v} at ({x},{y}) is not an id in [0,{order})"
                )
    for x in range(order):
        if rows[x][x] != x:
            raise NotIdempotent(x)
    for x in range(order):
        for y in range(order):
            xy = rows[x][y]
            for z in range(order):
                if rows[xy][z] != rows[x][rows[y][z]]:
                    raise NotAssociative((x, y, z))
    return Band(order, rows)


@lru_cache(maxsize=None)
def is_normal(band: Band) -> bool:
    """Whether the band satisfies the normality identity abca = acba.

    Both the triple identity and the equivalent length-four identity
    abcd = acbd are evaluated and must agree; disagreement would mean the
    classical equivalence broke, i.e. a bug.
    """
    t = band.table
    rng = band.elements
    by_triples = all(
        t[t[t[a][b]][c]][a] == t[t[t[a][c]][b]][a]
        for a in rng
        for b in rng
        for c in rng
    )
    by_quadruples = all(
        t[t[t[a][b]][c]][d] == t[t[t[a][c]][b]][d]
        for a in rng
        for b in rng
        for c in rng
        for d in rng
    )
    if by_triples != by_quadruples:
        raise InternalInconsistency(
            "triple and quadruple normality identities disagree"
        )
    return by_triples


def natural_leq(band: Band, x: int, y: int) -> bool:
    """x <= y in the natural partial order: xy = yx = x."""
    return band.table[x][y] == x and band.table[y][x] == x


def omega_right(band: Band, a: int) -> frozenset[int]:
    """{u : au = u}."""
    return frozenset(u for u in band.elements if band.table[a][u] == u)


def omega_left(band: Band, c: int) -> frozenset[int]:
    """{u : uc = u}."""
    return frozenset(u for u in band.elements if band.table[u][c] == u)


def downset(band: Band, x: int) -> frozenset[int]:
    """All u with u <= x in the natural order."""
    return frozenset(u for u in band.elements if natural_leq(band, u, x))


def principal_left_ideal(band: Band, a: int) -> frozenset[int]:
    """Ba = {xa : x in B}; a itself appears as aa."""
    return frozenset(band.table[x][a] for x in band.elements)


def sandwich(band: Band, a: int, c: int) -> frozenset[int]:
    """aBc = {axc : x in B}, computed independently three ways and compared.

    In any band the set equals omega_right(a) & omega_left(c).  On a normal
    band it also equals the natural-order downset of ac; that third leg is
    only a theorem under normality (identity-adjoined left-zero bands break
    it), so it is compared exactly when the band is normal.
    """
    t = band.table
    via_products = frozenset(t[t[a][x]][c] for x in band.elements)
    via_omega = omega_right(band, a) & omega_left(band, c)
    if via_products != via_omega:
        raise InternalInconsistency(
            f"aBc and the omega intersection differ for a={a}, c={c}"
        )
    if is_normal(band):
        via_downset = downset(band, t[a][c])
        if via_products != via_downset:
            raise InternalInconsistency(
                f"aBc and downset(ac) differ on a normal band for a={a}, c={c}"
            )
    return via_products


@dataclass(frozen=True)
class GreenPartition:
    """One of Green's relations as a partition of the element ids."""

    relation: str
    blocks: tuple[frozenset[int], ...]
    index: tuple[int, ...]

    def block_of(self, x: int) -> frozenset[int]:
        return self.blocks[self.index[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self.index[x] == self.index[y]


def _blocks_by_key(keys):
    grouped = {}
    for x, key in enumerate(keys):
        grouped.setdefault(key, []).append(x)
    return grouped.values()


@lru_cache(maxsize=None)
def green(band: Band, relation: str) -> GreenPartition:
    """Green's relation L, R, or D on the band.

    x L y iff Bx = By and x R y iff xB = yB; D is the transitive closure of
    L union R, which for bands coincides with J.
    """
    n = band.order
    if relation == "L":
        raw = _blocks_by_key([principal_left_ideal(band, x) for x in band.elements])
    elif relation == "R":
        raw = _blocks_by_key(
            [frozenset(band.table[x][y] for y in band.elements) for x in band.elements]
        )
    elif relation == "D":
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for tag in ("L", "R"):
            for block in green(band, tag).blocks:
                anchor = find(min(block))
                for x in block:
                    parent[find(x)] = anchor
        grouped = {}
        for x in range(n):
            grouped.setdefault(find(x), []).append(x)
        raw = grouped.values()
    else:
        raise ValueError(f"unknown Green relation {relation!r}")
    blocks = tuple(sorted((frozenset(b) for b in raw), key=min))
    index = [0] * n
    for i, block in enumerate(blocks):
        for x in block:
            index[x] = i
    return GreenPartition(relation, blocks, tuple(index))
