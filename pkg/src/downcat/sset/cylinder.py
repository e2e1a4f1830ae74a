"""Mapping-cylinder pushouts for a simplicial map and their comparison map."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InsufficientTruncation
from .base import SimplicialMap, TruncatedSSet
from .connect import connecting_map
from .kan import EndofunctorKind, evaluate_endofunctor, induced_map


def pushout(
    f: SimplicialMap, g: SimplicialMap, name: str = "pushout"
) -> tuple[TruncatedSSet, SimplicialMap, SimplicialMap]:
    """B ∪_A C for f: A -> B, g: A -> C, with the two canonical injections.

    Cells are union-find classes of tagged cells of B and C, glued along the
    images of A; faces and degeneracies act through representatives.
    """
    assert f.src is g.src or f.src == g.src
    A, B, C = f.src, f.dst, g.dst
    d = min(B.dim, C.dim, A.dim)
    parents: list[dict] = [dict() for _ in range(d + 1)]

    def find(k, t):
        p = parents[k]
        if t not in p:
            p[t] = t
            return t
        root = t
        while p[root] != root:
            root = p[root]
        while p[t] != root:
            p[t], t = root, p[t]
        return root

    def union(k, a, b):
        ra, rb = find(k, a), find(k, b)
        if ra != rb:
            parents[k][max(ra, rb)] = min(ra, rb)

    for k in range(d + 1):
        for c in range(B.n_cells(k)):
            find(k, (0, c))
        for c in range(C.n_cells(k)):
            find(k, (1, c))
        for a in range(A.n_cells(k)):
            union(k, (0, f.mapping[k][a]), (1, g.mapping[k][a]))
    reps = [sorted({find(k, t) for t in parents[k]}) for k in range(d + 1)]
    index = [{r: i for i, r in enumerate(rs)} for rs in reps]

    def resolve(k, t):
        return index[k][find(k, t)]

    def structure(k, rep, i, facelike):
        side, c = rep
        X = B if side == 0 else C
        kk = k - 1 if facelike else k + 1
        val = X.face(k, c, i) if facelike else X.degeneracy(k, c, i)
        return resolve(kk, (side, val))

    faces = [()]
    for k in range(1, d + 1):
        faces.append(
            tuple(
                tuple(structure(k, rep, i, True) for i in range(k + 1))
                for rep in reps[k]
            )
        )
    degeneracies = []
    for k in range(d):
        degeneracies.append(
            tuple(
                tuple(structure(k, rep, i, False) for i in range(k + 1))
                for rep in reps[k]
            )
        )
    degeneracies.append(())
    out = TruncatedSSet(
        dim=d,
        cells=tuple(tuple(rs) for rs in reps),
        faces=tuple(faces),
        degeneracies=tuple(degeneracies),
        name=name,
    )
    inj_b = SimplicialMap(
        src=B,
        dst=out,
        mapping=tuple(
            tuple(resolve(k, (0, c)) for c in range(B.n_cells(k)))
            for k in range(d + 1)
        ),
        name="inl",
    )
    inj_c = SimplicialMap(
        src=C,
        dst=out,
        mapping=tuple(
            tuple(resolve(k, (1, c)) for c in range(C.n_cells(k)))
            for k in range(d + 1)
        ),
        name="inr",
    )
    return out, inj_b, inj_c


@dataclass
class MappingCylinder:
    dcp_cyl: TruncatedSSet
    esdp_cyl: TruncatedSSet
    comparison: SimplicialMap  # dcp_cyl -> esdp_cyl
    collapse_edges: frozenset[int]  # W^C_f: edges mapped to degenerate edges


def mapping_cylinder(
    f: SimplicialMap, d: int, alpha_bound: int | None = None
) -> MappingCylinder:
    """DcpC f and ESdC' f as pushouts, the canonical map, and W^C_f."""
    X, Y = f.src, f.dst
    if X.dim < 2 * d + 1 or Y.dim < 2 * d + 1:
        raise InsufficientTruncation("mapping cylinder needs inputs at dim >= 2d+1")
    K_dcp_X = evaluate_endofunctor(EndofunctorKind.DCP, X, d, alpha_bound)
    K_dcp_Y = evaluate_endofunctor(EndofunctorKind.DCP, Y, d, alpha_bound)
    K_dcpi_X = evaluate_endofunctor(EndofunctorKind.DCPI, X, d, alpha_bound)
    K_esdp_X = evaluate_endofunctor(EndofunctorKind.ESDP, X, d)
    K_esdp_Y = evaluate_endofunctor(EndofunctorKind.ESDP, Y, d)
    K_esdpi_X = evaluate_endofunctor(EndofunctorKind.ESDPI, X, d)
    K_esd_X = evaluate_endofunctor(EndofunctorKind.ESD, X, d)
    K_esdi_X = evaluate_endofunctor(EndofunctorKind.ESDI, X, d)

    dcp_f = induced_map(K_dcp_X, f, K_dcp_Y)
    dcp_incl = connecting_map(K_dcp_X, K_dcpi_X)
    dcp_cyl, in_dcp_y, in_dcpi_x = pushout(dcp_f, dcp_incl, name=f"DcpC({f.name})")

    esdp_f = induced_map(K_esdp_X, f, K_esdp_Y)
    esdp_incl = connecting_map(K_esdp_X, K_esdpi_X)
    esdp_cyl, in_esdp_y, in_esdpi_x = pushout(
        esdp_f, esdp_incl, name=f"ESdC'({f.name})"
    )

    # the comparison map, componentwise through the collapse maps
    K_esd_Y = evaluate_endofunctor(EndofunctorKind.ESD, Y, d)
    coll_Y = connecting_map(K_dcp_Y, K_esd_Y).then(connecting_map(K_esd_Y, K_esdp_Y))
    coll_I = connecting_map(K_dcpi_X, K_esdi_X).then(
        connecting_map(K_esdi_X, K_esdpi_X)
    )
    mapping = []
    for k in range(d + 1):
        row = [None] * dcp_cyl.n_cells(k)
        for c in range(K_dcp_Y.sset.n_cells(k)):
            row[in_dcp_y.mapping[k][c]] = in_esdp_y.mapping[k][coll_Y.mapping[k][c]]
        for c in range(K_dcpi_X.sset.n_cells(k)):
            target = in_esdpi_x.mapping[k][coll_I.mapping[k][c]]
            at = in_dcpi_x.mapping[k][c]
            assert row[at] in (None, target), "cylinder comparison not well-defined"
            row[at] = target
        assert None not in row
        mapping.append(tuple(row))
    comparison = SimplicialMap(
        src=dcp_cyl, dst=esdp_cyl, mapping=tuple(mapping), name="cylinder-collapse"
    )
    w_edges = frozenset(
        e
        for e in range(dcp_cyl.n_cells(1))
        if esdp_cyl.is_degenerate(1, comparison.mapping[1][e])
    )
    return MappingCylinder(
        dcp_cyl=dcp_cyl,
        esdp_cyl=esdp_cyl,
        comparison=comparison,
        collapse_edges=w_edges,
    )
