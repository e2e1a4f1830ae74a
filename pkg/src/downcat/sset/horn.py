"""Horn pairs and certified filling schedules.

The target complexes are nerves of finite posets, so non-degenerate cells are
strict chains and faces delete entries. Outsiders (cells missed by the
comparison pushout) are matched into (core, periphery) pairs filled by one
inner horn each; replaying the schedule certifies the inner anodyne
decomposition step by step against the complex state, not the ordering.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from ..errors import PairingFailure, ScheduleBroken, SizeLimitExceeded


class HornFlavor(enum.Enum):
    PLAIN = "plain"
    I = "i"


# -- PLAIN flavor: chains in the square-pair poset over [n] -------------------
#
# A k-cell of the target is a strict chain of k+1 pairs (a, b), a <= b <= n,
# ordered componentwise; u_sigma(j, e) is the e-th coordinate of the j-th
# entry.


def plain_all_cells(n: int) -> list[tuple]:
    """All strict chains in the pair poset (non-degenerate cells, any dim)."""
    elements = [(a, b) for a in range(n + 1) for b in range(a, n + 1)]
    leq = lambda p, q: p[0] <= q[0] and p[1] <= q[1]
    cells: list[tuple] = []
    frontier = [(e,) for e in elements]
    while frontier:
        cells.extend(frontier)
        frontier = [
            c + (e,) for c in frontier for e in elements if leq(c[-1], e) and c[-1] != e
        ]
    return cells


def plain_u(cell: tuple, j: int, e: int) -> int:
    return cell[j][e]


def plain_is_outsider(n: int, cell: tuple) -> bool:
    """Missed by the pushout iff the adjunct is surjective and starts too late."""
    k = len(cell) - 1
    surjective = set(v for pair in cell for v in pair) == set(range(n + 1))
    return surjective and cell[k][0] > cell[0][1]


def plain_outsiders(n: int) -> list[tuple]:
    return sorted(
        (c for c in plain_all_cells(n) if plain_is_outsider(n, c)),
        key=lambda c: (len(c), c),
    )


def plain_anticipated_position(cell: tuple) -> int:
    k = len(cell) - 1
    return sum(1 for j in range(k + 1) if cell[j][1] < cell[k][0])


@dataclass(frozen=True)
class HornPairRecord:
    core: tuple
    periphery: tuple
    position: int
    flavor: HornFlavor

    def to_json(self) -> dict:
        return {
            "core": [list(e) if isinstance(e, tuple) else e for e in self.core],
            "periphery": [list(e) if isinstance(e, tuple) else e for e in self.periphery],
            "position": self.position,
            "flavor": self.flavor.value,
        }


def plain_horn_pairs(n: int) -> list[HornPairRecord]:
    """Partition the non-degenerate outsiders into horn pairs."""
    outs = plain_outsiders(n)
    out_set = set(outs)
    pairs: dict[tuple, HornPairRecord] = {}
    for cell in outs:
        if cell in pairs:
            continue
        k = len(cell) - 1
        i = plain_anticipated_position(cell)
        if not (0 < i <= k):
            raise PairingFailure("anticipated position out of range", outsider=cell)
        if cell[i - 1][0] == cell[i][0] and cell[i][1] == cell[k][0]:
            # cell is a core; periphery is its i-th facet
            periphery = cell[:i] + cell[i + 1 :]
            if periphery not in out_set:
                raise PairingFailure("periphery not an outsider", outsider=cell)
            rec = HornPairRecord(cell, periphery, i, HornFlavor.PLAIN)
            pairs[cell] = rec
            pairs[periphery] = rec
        else:
            # cell is a periphery; rebuild its unique core
            core = cell[:i] + ((cell[i - 1][0], cell[k][0]),) + cell[i:]
            if len(set(core)) != len(core) or any(
                not (a[0] <= b[0] and a[1] <= b[1]) for a, b in zip(core, core[1:])
            ):
                raise PairingFailure("core reconstruction fails", outsider=cell)
            if not plain_is_outsider(n, core):
                raise PairingFailure("core is not an outsider", outsider=cell)
            rec = HornPairRecord(core, cell, i, HornFlavor.PLAIN)
            pairs[cell] = rec
            pairs[core] = rec
    records = sorted(
        {id(r): r for r in pairs.values()}.values(),
        key=lambda r: (len(r.core), r.core),
    )
    # perfect matching check
    covered = [r.core for r in records] + [r.periphery for r in records]
    if sorted(covered, key=lambda c: (len(c), c)) != outs:
        raise PairingFailure("pairs do not partition the outsiders")
    return records


def plain_schedule_key(rec: HornPairRecord):
    """The well-order: (core dimension, last lower-track value, position)."""
    k = len(rec.core) - 1
    return (k, rec.core[k][0], rec.position)


# -- I flavor: chains in the extended poset ------------------------------------
#
# Elements are ("p", (a, b)) or ("v", y); a k-cell is a strict chain.


def i_elements(n: int):
    return [("p", (a, b)) for a in range(n + 1) for b in range(a, n + 1)] + [
        ("v", y) for y in range(n + 1)
    ]


def i_leq(p, q) -> bool:
    ta, pa = p
    tb, pb = q
    if ta == "p" and tb == "p":
        return pa[0] <= pb[0] and pa[1] <= pb[1]
    if ta == "p" and tb == "v":
        return pa[1] <= pb
    if ta == "v" and tb == "v":
        return pa <= pb
    return False


def i_all_cells(n: int) -> list[tuple]:
    elements = i_elements(n)
    cells: list[tuple] = []
    frontier = [(e,) for e in elements]
    while frontier:
        cells.extend(frontier)
        frontier = [
            c + (e,) for c in frontier for e in elements if i_leq(c[-1], e) and c[-1] != e
        ]
    return cells


def i_parts(cell: tuple):
    """(zeroth part as a PLAIN-style chain, first part values, switch value)."""
    zeroth = tuple(p for t, p in cell if t == "p")
    first = tuple(p for t, p in cell if t == "v")
    if zeroth:
        n_prime = max(b for _, b in zeroth)
    else:
        n_prime = -1
    return zeroth, first, n_prime


def i_has_straight_first_part(cell: tuple, n: int) -> bool:
    zeroth, first, n_prime = i_parts(cell)
    if not first:
        return False
    if len(set(first)) != len(first):
        return False
    covered = set(first)
    want_full = set(range(n_prime, n + 1)) if n_prime >= 0 else set(range(n + 1))
    want_tail = set(range(n_prime + 1, n + 1))
    return covered == want_full or covered == want_tail


def i_is_outsider(n: int, cell: tuple) -> bool:
    """Non-degenerate I-outsider: straight non-empty first part and a zeroth
    part that is a non-degenerate outsider over its switch value."""
    zeroth, first, n_prime = i_parts(cell)
    if not first or not zeroth:
        return False
    if not i_has_straight_first_part(cell, n):
        return False
    return plain_is_outsider(n_prime, zeroth)


def i_outsiders(n: int) -> list[tuple]:
    return sorted(
        (c for c in i_all_cells(n) if i_is_outsider(n, c)),
        key=lambda c: (len(c), c),
    )


def i_horn_pairs(n: int) -> list[HornPairRecord]:
    outs = i_outsiders(n)
    out_set = set(outs)
    pairs: dict[tuple, HornPairRecord] = {}
    for cell in outs:
        if cell in pairs:
            continue
        zeroth, first, n_prime = i_parts(cell)
        kp = len(zeroth) - 1  # switch position
        i = plain_anticipated_position(zeroth)
        k = len(cell) - 1
        if zeroth[i - 1][0] == zeroth[i][0] and zeroth[i][1] == zeroth[kp][0]:
            # zeroth is a core: drop its i-th entry; the pair's periphery
            periphery = cell[:i] + cell[i + 1 :]
            if periphery not in out_set:
                raise PairingFailure("I-periphery not an outsider", outsider=cell)
            rec = HornPairRecord(cell, periphery, i, HornFlavor.I)
            pairs[cell] = rec
            pairs[periphery] = rec
        else:
            # zeroth is a periphery: insert the reconstructed pair element
            new_pair = ("p", (zeroth[i - 1][0], zeroth[kp][0]))
            core = cell[:i] + (new_pair,) + cell[i:]
            if core not in out_set:
                raise PairingFailure("I-core not an outsider", outsider=cell)
            rec = HornPairRecord(core, cell, i, HornFlavor.I)
            pairs[cell] = rec
            pairs[core] = rec
    records = sorted(
        {id(r): r for r in pairs.values()}.values(),
        key=lambda r: (len(r.core), r.core),
    )
    covered = [r.core for r in records] + [r.periphery for r in records]
    if sorted(covered, key=lambda c: (len(c), c)) != outs:
        raise PairingFailure("I-pairs do not partition the outsiders")
    return records


def i_schedule_key(rec: HornPairRecord):
    """(core dimension, switch value, plain key of the zeroth-part pair)."""
    zeroth_core, _, n_prime = i_parts(rec.core)
    k0 = len(zeroth_core) - 1
    return (
        len(rec.core) - 1,
        n_prime,
        (k0, zeroth_core[k0][0], rec.position),
    )


# -- outsiders / pairs / schedules, flavor-dispatched ---------------------------


def outsiders(n: int, flavor: HornFlavor, cap: int = 500_000) -> list[tuple]:
    """Non-degenerate cells of the codomain missed by the comparison pushout."""
    if n > 6:
        raise SizeLimitExceeded("horn machinery bounded at n <= 6")
    return plain_outsiders(n) if flavor is HornFlavor.PLAIN else i_outsiders(n)


def horn_pairs(n: int, flavor: HornFlavor) -> list[HornPairRecord]:
    return plain_horn_pairs(n) if flavor is HornFlavor.PLAIN else i_horn_pairs(n)


@dataclass
class ScheduleCertificate:
    flavor: HornFlavor
    n: int
    steps: list[HornPairRecord]
    base_cells: int
    final_cells: int
    codomain_cells: int
    ok: bool

    def to_json(self) -> dict:
        return {
            "flavor": self.flavor.value,
            "n": self.n,
            "ok": self.ok,
            "base_cells": self.base_cells,
            "final_cells": self.final_cells,
            "codomain_cells": self.codomain_cells,
            "steps": [s.to_json() for s in self.steps],
        }


def filling_schedule(n: int, flavor: HornFlavor) -> ScheduleCertificate:
    """Order the pairs, then replay insertions, certifying each step.

    A step (core sigma of dim k, periphery, position i) is valid when every
    facet of sigma except the i-th is already present, the periphery and core
    are absent, and 0 < i < k; then the step is the pushout of an inner horn
    inclusion and adds exactly the two cells.
    """
    if flavor is HornFlavor.PLAIN:
        all_cells = plain_all_cells(n)
        records = sorted(plain_horn_pairs(n), key=plain_schedule_key)
    else:
        all_cells = i_all_cells(n)
        records = sorted(i_horn_pairs(n), key=i_schedule_key)
    out_set = set(r.core for r in records) | set(r.periphery for r in records)
    present = set(c for c in all_cells if c not in out_set)
    base = len(present)
    for rec in records:
        k = len(rec.core) - 1
        if not (0 < rec.position < k):
            raise ScheduleBroken("horn position not strictly inner", step=rec)
        if rec.core in present or rec.periphery in present:
            raise ScheduleBroken("step would re-add a present cell", step=rec)
        for j in range(k + 1):
            facet = rec.core[:j] + rec.core[j + 1 :]
            if j == rec.position:
                if facet != rec.periphery:
                    raise ScheduleBroken("periphery is not the i-th facet", step=rec)
                if facet in present:
                    raise ScheduleBroken("periphery already present", step=rec)
            elif facet not in present:
                raise ScheduleBroken(
                    f"facet {j} of the core is missing", step=rec
                )
        present.add(rec.core)
        present.add(rec.periphery)
    ok = present == set(all_cells)
    return ScheduleCertificate(
        flavor=flavor,
        n=n,
        steps=records,
        base_cells=base,
        final_cells=len(present),
        codomain_cells=len(all_cells),
        ok=ok,
    )
