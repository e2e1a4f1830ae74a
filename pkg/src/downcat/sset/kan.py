"""The six endofunctors and their connecting maps.

Values on representables are explicit (nerves of posets or of bounded
overcategory-style categories, or reindexed hom-sets); values on general
truncated simplicial sets are left Kan extensions computed as colimits with
union-find gluing over the non-degenerate simplices, degenerate faces
funneled through their Eilenberg-Zilber cores.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..errors import InsufficientTruncation, SizeLimitExceeded
from ..reedy import SimplexMor, delta, monotone_maps, sigma, simplex_identity
from .base import SimplicialMap, TruncatedSSet, _build_from_label_tables


class EndofunctorKind(enum.Enum):
    DCP = "dcp"
    DCPI = "dcpi"
    ESD = "esd"
    ESDI = "esdi"
    ESDP = "esd_prime"
    ESDPI = "esdi_prime"


def join_self(phi: SimplexMor) -> SimplexMor:
    """phi ⋆ phi: [2m+1] -> [2n+1]."""
    shifted = tuple(v + phi.n + 1 for v in phi.values)
    return SimplexMor(2 * phi.m + 1, 2 * phi.n + 1, phi.values + shifted)


def _esdi_reindex(phi: SimplexMor, i: int, w: tuple) -> tuple[int, tuple]:
    """Reindex a partition-tagged cell (|I| = i, values w on I⋆I⋆J) along phi."""
    iprime = sum(1 for v in phi.values if v < i)
    first = [w[phi(t)] for t in range(iprime)]
    rest = [w[i + phi(t)] for t in range(iprime)]
    tail = [w[i + phi(t)] for t in range(iprime, phi.m + 1)]
    return iprime, tuple(first + rest + tail)


# -- cosimplicial representable values ---------------------------------------


class CosimplicialSSet:
    """value(n) gives the representable simplicial set truncated at out_dim;
    act(psi) is the covariant structure map on cell labels."""

    kind: EndofunctorKind
    name: str

    def __init__(self, out_dim: int):
        self.out_dim = out_dim
        self._values: dict[int, TruncatedSSet] = {}

    def value(self, n: int) -> TruncatedSSet:
        if n not in self._values:
            self._values[n] = self._build(n)
        return self._values[n]

    def _build(self, n: int) -> TruncatedSSet:
        raise NotImplementedError

    def act(self, psi: SimplexMor, label):
        """Covariant: a cell label of value(psi.m) to one of value(psi.n)."""
        raise NotImplementedError


class EsdCosimplicial(CosimplicialSSet):
    kind = EndofunctorKind.ESD
    name = "ESd"

    def _build(self, n: int) -> TruncatedSSet:
        levels = [list(monotone_maps(2 * k + 1, n)) for k in range(self.out_dim + 1)]

        def face_fn(k, w, i):
            return tuple(
                v for t, v in enumerate(w) if t != i and t != (k + 1) + i
            )

        def degeneracy_fn(k, w, i):
            left, right = w[: k + 1], w[k + 1 :]
            return (
                left[: i + 1] + left[i:] + right[: i + 1] + right[i:]
            )

        return _build_from_label_tables(
            self.out_dim, levels, face_fn, degeneracy_fn, name=f"ESd(Δ{n})"
        )

    def act(self, psi: SimplexMor, label):
        return tuple(psi(v) for v in label)


class EsdiCosimplicial(CosimplicialSSet):
    kind = EndofunctorKind.ESDI
    name = "ESdI"

    def _build(self, n: int) -> TruncatedSSet:
        levels = []
        for k in range(self.out_dim + 1):
            cells = []
            for i in range(k + 2):
                for w in monotone_maps(k + i, n):
                    cells.append((i, w))
            levels.append(cells)

        def face_fn(k, label, j):
            i, w = label
            return _esdi_reindex(delta(k, j), i, w)

        def degeneracy_fn(k, label, j):
            i, w = label
            return _esdi_reindex(sigma(k, j), i, w)

        return _build_from_label_tables(
            self.out_dim, levels, face_fn, degeneracy_fn, name=f"ESdI(Δ{n})"
        )

    def act(self, psi: SimplexMor, label):
        i, w = label
        return (i, tuple(psi(v) for v in w))


def _poset_chains(elements: list, leq: Callable, length: int) -> list[tuple]:
    """Weakly increasing (length+1)-tuples in a finite poset."""
    chains = [(e,) for e in elements]
    for _ in range(length):
        chains = [c + (e,) for c in chains for e in elements if leq(c[-1], e)]
    return chains


class _PosetNerveCosimplicial(CosimplicialSSet):
    """Common machinery for the nerve-of-poset valued functors."""

    def elements(self, n: int) -> list:
        raise NotImplementedError

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def element_act(self, psi: SimplexMor, element):
        raise NotImplementedError

    def _build(self, n: int) -> TruncatedSSet:
        els = self.elements(n)
        levels = [
            _poset_chains(els, self.leq, k) for k in range(self.out_dim + 1)
        ]

        def face_fn(k, chain, i):
            return chain[:i] + chain[i + 1 :]

        def degeneracy_fn(k, chain, i):
            return chain[: i + 1] + chain[i:]

        return _build_from_label_tables(
            self.out_dim, levels, face_fn, degeneracy_fn, name=f"{self.name}(Δ{n})"
        )

    def act(self, psi: SimplexMor, label):
        return tuple(self.element_act(psi, e) for e in label)


class EsdPrimeCosimplicial(_PosetNerveCosimplicial):
    kind = EndofunctorKind.ESDP
    name = "ESd'"

    def elements(self, n: int) -> list:
        return [(a, b) for a in range(n + 1) for b in range(a, n + 1)]

    def leq(self, p, q) -> bool:
        return p[0] <= q[0] and p[1] <= q[1]

    def element_act(self, psi: SimplexMor, element):
        return (psi(element[0]), psi(element[1]))


class EsdiPrimeCosimplicial(_PosetNerveCosimplicial):
    kind = EndofunctorKind.ESDPI
    name = "ESdI'"

    def elements(self, n: int) -> list:
        pairs = [("p", (a, b)) for a in range(n + 1) for b in range(a, n + 1)]
        verts = [("v", y) for y in range(n + 1)]
        return pairs + verts

    def leq(self, p, q) -> bool:
        # order pulled back along (p,(a,b)) -> (0,(a,b)), (v,y) -> (1,(y,y))
        ta, pa = p
        tb, pb = q
        if ta == "p" and tb == "p":
            return pa[0] <= pb[0] and pa[1] <= pb[1]
        if ta == "p" and tb == "v":
            return pa[1] <= pb
        if ta == "v" and tb == "v":
            return pa <= pb
        return False

    def element_act(self, psi: SimplexMor, element):
        tag, payload = element
        if tag == "p":
            return ("p", (psi(payload[0]), psi(payload[1])))
        return ("v", psi(payload))


class DcpCosimplicial(CosimplicialSSet):
    """Nerve of the bounded full subcategory of [n] x (Δ over [n]).

    Objects are (x, alpha values) with x <= alpha(0) and chain length bounded
    by alpha_bound; the true category is infinite in the alpha direction.
    Cell labels are (objects tuple, betas tuple).
    """

    kind = EndofunctorKind.DCP
    name = "Dcp"

    def __init__(self, out_dim: int, alpha_bound: int):
        super().__init__(out_dim)
        self.alpha_bound = alpha_bound

    def objects(self, n: int) -> list[tuple[int, tuple]]:
        out = []
        for k in range(self.alpha_bound + 1):
            for alpha in monotone_maps(k, n):
                for x in range(alpha[0] + 1):
                    out.append((x, alpha))
        return out

    def arrows(self, a: tuple[int, tuple], b: tuple[int, tuple]) -> list[tuple]:
        """Betas witnessing a -> b: monotone with b.alpha ∘ beta = a.alpha."""
        (x, alpha), (x2, alpha2) = a, b
        if x > x2:
            return []
        k, k2 = len(alpha) - 1, len(alpha2) - 1
        return [
            beta
            for beta in monotone_maps(k, k2)
            if all(alpha2[beta[t]] == alpha[t] for t in range(k + 1))
        ]

    def _build(self, n: int) -> TruncatedSSet:
        objs = self.objects(n)
        levels: list[list[tuple]] = [[((o,), ()) for o in objs]]
        for k in range(1, self.out_dim + 1):
            cells = []
            for objs_chain, betas in levels[k - 1]:
                last = objs_chain[-1]
                for nxt in objs:
                    for beta in self.arrows(last, nxt):
                        cells.append((objs_chain + (nxt,), betas + (beta,)))
            levels.append(cells)

        def face_fn(k, label, i):
            objs_chain, betas = label
            if i == 0:
                return (objs_chain[1:], betas[1:])
            if i == k:
                return (objs_chain[:-1], betas[:-1])
            merged = tuple(betas[i][v] for v in betas[i - 1])
            return (
                objs_chain[:i] + objs_chain[i + 1 :],
                betas[: i - 1] + (merged,) + betas[i + 1 :],
            )

        def degeneracy_fn(k, label, i):
            objs_chain, betas = label
            ident = tuple(range(len(objs_chain[i][1])))
            return (
                objs_chain[: i + 1] + objs_chain[i:],
                betas[:i] + (ident,) + betas[i:],
            )

        return _build_from_label_tables(
            self.out_dim, levels, face_fn, degeneracy_fn, name=f"Dcp(Δ{n})"
        )

    def act(self, psi: SimplexMor, label):
        objs_chain, betas = label
        new_objs = tuple(
            (psi(x), tuple(psi(v) for v in alpha)) for x, alpha in objs_chain
        )
        return (new_objs, betas)


class DcpiCosimplicial(CosimplicialSSet):
    """DcpCosimplicial extended by the base simplex: a one-way cylinder."""

    kind = EndofunctorKind.DCPI
    name = "DcpI"

    def __init__(self, out_dim: int, alpha_bound: int):
        super().__init__(out_dim)
        self.alpha_bound = alpha_bound
        self._dcp = DcpCosimplicial(out_dim, alpha_bound)

    def objects(self, n: int) -> list[tuple]:
        return [("d", o) for o in self._dcp.objects(n)] + [
            ("v", y) for y in range(n + 1)
        ]

    def arrows(self, a: tuple, b: tuple) -> list:
        ta, pa = a
        tb, pb = b
        if ta == "d" and tb == "d":
            return self._dcp.arrows(pa, pb)
        if ta == "d" and tb == "v":
            alpha = pa[1]
            return ["!"] if alpha[-1] <= pb else []
        if ta == "v" and tb == "v":
            return ["!"] if pa <= pb else []
        return []

    @staticmethod
    def _compose(beta2, beta1):
        if beta2 == "!" or beta1 == "!":
            return "!"
        return tuple(beta2[v] for v in beta1)

    def _build(self, n: int) -> TruncatedSSet:
        objs = self.objects(n)
        levels: list[list[tuple]] = [[((o,), ()) for o in objs]]
        for k in range(1, self.out_dim + 1):
            cells = []
            for objs_chain, betas in levels[k - 1]:
                last = objs_chain[-1]
                for nxt in objs:
                    for beta in self.arrows(last, nxt):
                        cells.append((objs_chain + (nxt,), betas + (beta,)))
            levels.append(cells)

        def face_fn(k, label, i):
            objs_chain, betas = label
            if i == 0:
                return (objs_chain[1:], betas[1:])
            if i == k:
                return (objs_chain[:-1], betas[:-1])
            merged = self._compose(betas[i], betas[i - 1])
            return (
                objs_chain[:i] + objs_chain[i + 1 :],
                betas[: i - 1] + (merged,) + betas[i + 1 :],
            )

        def degeneracy_fn(k, label, i):
            objs_chain, betas = label
            tag, payload = objs_chain[i]
            ident = tuple(range(len(payload[1]))) if tag == "d" else "!"
            return (
                objs_chain[: i + 1] + objs_chain[i:],
                betas[:i] + (ident,) + betas[i:],
            )

        return _build_from_label_tables(
            self.out_dim, levels, face_fn, degeneracy_fn, name=f"DcpI(Δ{n})"
        )

    def act(self, psi: SimplexMor, label):
        objs_chain, betas = label
        new_objs = []
        for tag, payload in objs_chain:
            if tag == "d":
                x, alpha = payload
                new_objs.append(("d", (psi(x), tuple(psi(v) for v in alpha))))
            else:
                new_objs.append(("v", psi(payload)))
        return (tuple(new_objs), betas)


def cosimplicial_for(
    kind: EndofunctorKind, out_dim: int, alpha_bound: int
) -> CosimplicialSSet:
    if kind is EndofunctorKind.ESD:
        return EsdCosimplicial(out_dim)
    if kind is EndofunctorKind.ESDI:
        return EsdiCosimplicial(out_dim)
    if kind is EndofunctorKind.ESDP:
        return EsdPrimeCosimplicial(out_dim)
    if kind is EndofunctorKind.ESDPI:
        return EsdiPrimeCosimplicial(out_dim)
    if kind is EndofunctorKind.DCP:
        return DcpCosimplicial(out_dim, alpha_bound)
    return DcpiCosimplicial(out_dim, alpha_bound)


def needed_input_dim(kind: EndofunctorKind, d: int) -> int:
    """Input truncation required for the Kan value to be exact at level d."""
    if kind in (EndofunctorKind.ESD, EndofunctorKind.ESDI):
        return 2 * d + 1
    if kind in (EndofunctorKind.ESDP, EndofunctorKind.ESDPI):
        return 2 * d + 1
    return d  # DCP family: bounded materialization, sanity floor only


# -- Kan extension by union-find gluing ---------------------------------------


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, k):
        p = self.parent
        if k not in p:
            p[k] = k
            return k
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb, key=repr)] = min(ra, rb, key=repr)


@dataclass
class KanComplex:
    """The Kan-extended value F(X) at truncation out_dim, with tag lookup.

    Tags are (n, x, c): a non-degenerate x in X_n and a cell label c of
    F.value(n). Classes are represented by canonical tags.
    """

    F: CosimplicialSSet
    X: TruncatedSSet
    sset: TruncatedSSet
    class_of_tag: tuple[dict, ...]  # per level: tag -> cell id

    def locate(self, n: int, x: int, c_label) -> tuple[int, int]:
        """(level, cell id) of the class containing the tagged cell; x may be
        degenerate (it is funneled through its core)."""
        if self.X.is_degenerate(n, x):
            m, core, s = self.X.ez_core(n, x)
            return self.locate(m, core, self.F.act(s, c_label))
        for level, table in enumerate(self.class_of_tag):
            hit = table.get((n, x, c_label))
            if hit is not None:
                return level, hit
        raise KeyError((n, x, c_label))

    def locate_at_level(self, k: int, n: int, x: int, c_label) -> int:
        if self.X.is_degenerate(n, x):
            m, core, s = self.X.ez_core(n, x)
            return self.locate_at_level(k, m, core, self.F.act(s, c_label))
        return self.class_of_tag[k][(n, x, c_label)]


def kan_extend(
    F: CosimplicialSSet, X: TruncatedSSet, cap: int = 2_000_000
) -> KanComplex:
    """Colimit over the simplex category of X of the representable values."""
    d = F.out_dim
    uf_per_level = [_UnionFind() for _ in range(d + 1)]
    tags_per_level: list[list[tuple]] = [[] for _ in range(d + 1)]
    nondeg = {n: X.nondegenerate(n) for n in range(X.dim + 1)}
    total = 0
    for n in range(X.dim + 1):
        if not nondeg[n]:
            continue
        Fn = F.value(n)
        for x in nondeg[n]:
            for k in range(d + 1):
                total += Fn.n_cells(k)
                if total > cap:
                    raise SizeLimitExceeded(f"Kan extension tags exceed {cap}")
                for c in range(Fn.n_cells(k)):
                    tags_per_level[k].append((n, x, Fn.cells[k][c]))
    for level_tags, uf in zip(tags_per_level, uf_per_level):
        for t in level_tags:
            uf.find(t)
    # gluing: faces of non-degenerate simplices, EZ-funneled
    for n in range(1, X.dim + 1):
        if not nondeg[n]:
            continue
        Fn_minus = F.value(n - 1)
        for x in nondeg[n]:
            for i in range(n + 1):
                y = X.face(n, x, i)
                m, core, s = X.ez_core(n - 1, y)
                dmap = delta(n, i)
                for k in range(d + 1):
                    for c in range(Fn_minus.n_cells(k)):
                        label = Fn_minus.cells[k][c]
                        uf_per_level[k].union(
                            (n, x, F.act(dmap, label)),
                            (m, core, F.act(s, label)),
                        )
    # assemble classes
    class_of_tag: list[dict] = []
    reps_per_level: list[list[tuple]] = []
    for k in range(d + 1):
        uf = uf_per_level[k]
        reps = sorted({uf.find(t) for t in tags_per_level[k]}, key=repr)
        index = {r: i for i, r in enumerate(reps)}
        class_of_tag.append({t: index[uf.find(t)] for t in tags_per_level[k]})
        reps_per_level.append(reps)

    # face/degeneracy tables on classes via representatives
    def tag_face(tag, k, i):
        n, x, label = tag
        Fn = F.value(n)
        cid = _cell_id(Fn, k, label)
        return (n, x, Fn.cells[k - 1][Fn.face(k, cid, i)])

    def tag_degeneracy(tag, k, i):
        n, x, label = tag
        Fn = F.value(n)
        cid = _cell_id(Fn, k, label)
        return (n, x, Fn.cells[k + 1][Fn.degeneracy(k, cid, i)])

    faces = [()]
    for k in range(1, d + 1):
        rows = []
        for rep in reps_per_level[k]:
            rows.append(
                tuple(
                    class_of_tag[k - 1][tag_face(rep, k, i)] for i in range(k + 1)
                )
            )
        faces.append(tuple(rows))
    degeneracies = []
    for k in range(d):
        rows = []
        for rep in reps_per_level[k]:
            rows.append(
                tuple(
                    class_of_tag[k + 1][tag_degeneracy(rep, k, i)]
                    for i in range(k + 1)
                )
            )
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    sset = TruncatedSSet(
        dim=d,
        cells=tuple(tuple(reps) for reps in reps_per_level),
        faces=tuple(faces),
        degeneracies=tuple(degeneracies),
        name=f"{F.name}({X.name})",
    )
    return KanComplex(F=F, X=X, sset=sset, class_of_tag=tuple(class_of_tag))


def _cell_id(sset: TruncatedSSet, k: int, label) -> int:
    return sset.cell_id(k, label)


def kan_extend_full(
    F: CosimplicialSSet, X: TruncatedSSet, cap: int = 2_000_000
) -> KanComplex:
    """Oracle variant: colimit over the full category of elements (every cell
    of X, degenerate included), glued along both generator families."""
    d = F.out_dim
    uf_per_level = [_UnionFind() for _ in range(d + 1)]
    tags_per_level: list[list[tuple]] = [[] for _ in range(d + 1)]
    total = 0
    for n in range(X.dim + 1):
        Fn = F.value(n)
        for x in range(X.n_cells(n)):
            for k in range(d + 1):
                total += Fn.n_cells(k)
                if total > cap:
                    raise SizeLimitExceeded(f"full Kan extension exceeds {cap}")
                for c in range(Fn.n_cells(k)):
                    tags_per_level[k].append((n, x, Fn.cells[k][c]))
    for level_tags, uf in zip(tags_per_level, uf_per_level):
        for t in level_tags:
            uf.find(t)
    for n in range(X.dim + 1):
        for x in range(X.n_cells(n)):
            if n >= 1:
                Fm = F.value(n - 1)
                for i in range(n + 1):
                    dmap = delta(n, i)
                    y = X.face(n, x, i)
                    for k in range(d + 1):
                        for c in range(Fm.n_cells(k)):
                            label = Fm.cells[k][c]
                            uf_per_level[k].union(
                                (n, x, F.act(dmap, label)), (n - 1, y, label)
                            )
            if n + 1 <= X.dim:
                Fm = F.value(n + 1)
                for i in range(n + 1):
                    smap = sigma(n, i)
                    y = X.degeneracy(n, x, i)
                    for k in range(d + 1):
                        for c in range(Fm.n_cells(k)):
                            label = Fm.cells[k][c]
                            uf_per_level[k].union(
                                (n, x, F.act(smap, label)), (n + 1, y, label)
                            )
    class_of_tag: list[dict] = []
    reps_per_level: list[list[tuple]] = []
    for k in range(d + 1):
        uf = uf_per_level[k]
        reps = sorted({uf.find(t) for t in tags_per_level[k]}, key=repr)
        index = {r: i for i, r in enumerate(reps)}
        class_of_tag.append({t: index[uf.find(t)] for t in tags_per_level[k]})
        reps_per_level.append(reps)
    faces = [()]
    for k in range(1, d + 1):
        rows = []
        for rep in reps_per_level[k]:
            n, x, label = rep
            Fn = F.value(n)
            cid = _cell_id(Fn, k, label)
            rows.append(
                tuple(
                    class_of_tag[k - 1][(n, x, Fn.cells[k - 1][Fn.face(k, cid, i)])]
                    for i in range(k + 1)
                )
            )
        faces.append(tuple(rows))
    degeneracies = []
    for k in range(d):
        rows = []
        for rep in reps_per_level[k]:
            n, x, label = rep
            Fn = F.value(n)
            cid = _cell_id(Fn, k, label)
            rows.append(
                tuple(
                    class_of_tag[k + 1][
                        (n, x, Fn.cells[k + 1][Fn.degeneracy(k, cid, i)])
                    ]
                    for i in range(k + 1)
                )
            )
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    sset = TruncatedSSet(
        dim=d,
        cells=tuple(tuple(reps) for reps in reps_per_level),
        faces=tuple(faces),
        degeneracies=tuple(degeneracies),
        name=f"{F.name}_full({X.name})",
    )
    return KanComplex(F=F, X=X, sset=sset, class_of_tag=tuple(class_of_tag))


def truncate_sset(X: TruncatedSSet, dim: int) -> TruncatedSSet:
    """Forget levels above dim (the top level loses its degeneracy row)."""
    if dim >= X.dim:
        return X
    return TruncatedSSet(
        dim=dim,
        cells=X.cells[: dim + 1],
        faces=X.faces[: dim + 1],
        degeneracies=X.degeneracies[:dim] + ((),),
        name=X.name,
    )


def evaluate_endofunctor(
    kind: EndofunctorKind,
    X: TruncatedSSet,
    d: int,
    alpha_bound: int | None = None,
    cap: int = 2_000_000,
) -> KanComplex:
    """The endofunctor value as a Kan complex truncated at d.

    The input is sliced down to the needed truncation so nothing above it
    inflates the colimit; below it the value would be wrong, so that errors.
    """
    need = needed_input_dim(kind, d)
    if X.dim < need:
        raise InsufficientTruncation(
            f"{kind.value} at dim {d} needs input truncated at >= {need}, got {X.dim}"
        )
    F = cosimplicial_for(kind, d, alpha_bound if alpha_bound is not None else d)
    return kan_extend(F, truncate_sset(X, need), cap=cap)


def induced_map(K: KanComplex, g: SimplicialMap, KY: KanComplex) -> SimplicialMap:
    """F(g): F(X) -> F(Y) for g: X -> Y, with well-definedness audit."""
    assert K.F.out_dim == KY.F.out_dim
    d = K.F.out_dim
    mapping = []
    for k in range(d + 1):
        values: dict[int, int] = {}
        for tag, cls in K.class_of_tag[k].items():
            n, x, label = tag
            target = KY.locate_at_level(k, n, g.mapping[n][x], label)
            if cls in values:
                assert values[cls] == target, "induced map is not well-defined"
            else:
                values[cls] = target
        mapping.append(tuple(values[c] for c in range(K.sset.n_cells(k))))
    return SimplicialMap(
        src=K.sset, dst=KY.sset, mapping=tuple(mapping), name=f"{K.F.name}({g.name})"
    )


# -- the direct-formula oracles (kept independent of the Kan machinery) -------


def esd_direct(X: TruncatedSSet, d: int) -> TruncatedSSet:
    """(ESd X)_k = X_{2k+1} with faces/degeneracies reindexed along joins."""
    if X.dim < 2 * d + 1:
        raise InsufficientTruncation("esd_direct needs input dim >= 2d+1")
    cells = tuple(tuple(range(X.n_cells(2 * k + 1))) for k in range(d + 1))
    faces = [()]
    for k in range(1, d + 1):
        rows = []
        for c in range(X.n_cells(2 * k + 1)):
            rows.append(
                tuple(X.act(join_self(delta(k, i)), 2 * k + 1, c) for i in range(k + 1))
            )
        faces.append(tuple(rows))
    degeneracies = []
    for k in range(d):
        rows = []
        for c in range(X.n_cells(2 * k + 1)):
            rows.append(
                tuple(X.act(join_self(sigma(k, i)), 2 * k + 1, c) for i in range(k + 1))
            )
        degeneracies.append(tuple(rows))
    degeneracies.append(())
    return TruncatedSSet(
        dim=d, cells=cells, faces=tuple(faces), degeneracies=tuple(degeneracies),
        name=f"ESd_direct({X.name})",
    )


def esdi_direct_counts(X: TruncatedSSet, k: int) -> int:
    """|(ESdI X)_k| by the coproduct formula: sum of |X_{k+i}|, i = 0..k+1."""
    return sum(X.n_cells(k + i) for i in range(k + 2))
