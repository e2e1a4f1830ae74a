"""The single bound/config block shared by every module.

Every exhaustive search and materialization in the library is throttled
through a ``Limits`` value, so desk-scale guarantees have one throttle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    # Down_*(C) / MP-ladder chain-length bound; None means |Ob C|.
    max_len: int | None = None
    # simplicial truncation for sset checks
    dim: int = 2
    # cap on enumerated candidates in functor/transformation searches
    functor_search_cap: int = 2_000_000
    # cap on materialized ladder objects / simplicial cells
    object_cap: int = 200_000
    # alpha-length bound for Dcp/DcpI materializations; None means dim
    alpha_bound: int | None = None
    # tag budget above which comparison maps are not materialized
    tag_budget: int = 400_000
    # PLAIN horn machinery max simplex dimension n
    horn_plain_max: int = 3
    # I-flavor horn machinery max simplex dimension n
    horn_i_max: int = 2

    def resolved_max_len(self, n_objects: int) -> int:
        return self.max_len if self.max_len is not None else n_objects

    def resolved_alpha_bound(self) -> int:
        return self.alpha_bound if self.alpha_bound is not None else self.dim


DEFAULT = Limits()

PROFILES = {
    "quick": replace(DEFAULT, horn_plain_max=2, horn_i_max=1, dim=2),
    "default": DEFAULT,
    # full keeps every acceptance check and deepens the cheap formula checks
    "full": replace(DEFAULT, dim=2, horn_plain_max=3, horn_i_max=2),
}
