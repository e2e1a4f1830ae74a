"""The canonical natural maps between the six endofunctors.

Each map is given by its representable-level formula on cell labels and
induced on Kan classes, with a well-definedness audit. The collapse map out
of Dcp is surjective; all hook arrows of the connecting diagram are injective.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InsufficientTruncation
from ..reedy import SimplexMor
from .base import SimplicialMap, TruncatedSSet, product, standard_simplex
from .kan import EndofunctorKind, KanComplex


# -- representable-level label transformations --------------------------------


def dcp_to_esd_label(label):
    objs_chain, _betas = label
    xs = tuple(x for x, _ in objs_chain)
    tops = tuple(alpha[-1] for _, alpha in objs_chain)
    return xs + tops


def dcpi_to_esdi_label(label):
    objs_chain, _betas = label
    xs = [p[0] for t, p in objs_chain if t == "d"]
    tops = [p[1][-1] for t, p in objs_chain if t == "d"]
    ys = [p for t, p in objs_chain if t == "v"]
    i = len(xs)
    return (i, tuple(xs + tops + ys))


def esd_to_esdp_label(label):
    k2 = len(label) // 2  # k+1
    return tuple((label[t], label[k2 + t]) for t in range(k2))


def esdi_to_esdpi_label(label):
    i, w = label
    k = len(w) - 1 - i
    chain = [("p", (w[t], w[i + t])) for t in range(i)]
    chain += [("v", w[i + t]) for t in range(i, k + 1)]
    return tuple(chain)


def dcp_to_dcpi_label(label):
    objs_chain, betas = label
    return (tuple(("d", o) for o in objs_chain), betas)


def esd_to_esdi_label(label):
    return (len(label) // 2, label)


def esdp_to_esdpi_label(label):
    return tuple(("p", pair) for pair in label)


_LABEL_MAPS = {
    (EndofunctorKind.DCP, EndofunctorKind.ESD): dcp_to_esd_label,
    (EndofunctorKind.DCPI, EndofunctorKind.ESDI): dcpi_to_esdi_label,
    (EndofunctorKind.ESD, EndofunctorKind.ESDP): esd_to_esdp_label,
    (EndofunctorKind.ESDI, EndofunctorKind.ESDPI): esdi_to_esdpi_label,
    (EndofunctorKind.DCP, EndofunctorKind.DCPI): dcp_to_dcpi_label,
    (EndofunctorKind.ESD, EndofunctorKind.ESDI): esd_to_esdi_label,
    (EndofunctorKind.ESDP, EndofunctorKind.ESDPI): esdp_to_esdpi_label,
}


def connecting_label_map(src: EndofunctorKind, dst: EndofunctorKind):
    try:
        return _LABEL_MAPS[(src, dst)]
    except KeyError:
        raise KeyError(f"no canonical connecting map {src.value} -> {dst.value}")


def connecting_map(KF: KanComplex, KG: KanComplex, name: str = "") -> SimplicialMap:
    """Induce the canonical map on Kan classes, auditing well-definedness."""
    eta = connecting_label_map(KF.F.kind, KG.F.kind)
    shared = min(KF.X.dim, KG.X.dim)
    assert KF.X.cells[: shared + 1] == KG.X.cells[: shared + 1], (
        "connecting map needs a shared base"
    )
    d = KF.F.out_dim
    mapping = []
    for k in range(d + 1):
        values: dict[int, int] = {}
        for tag, cls in KF.class_of_tag[k].items():
            n, x, label = tag
            target = KG.locate_at_level(k, n, x, eta(label))
            if cls in values:
                assert values[cls] == target, "connecting map not well-defined"
            else:
                values[cls] = target
        mapping.append(tuple(values[c] for c in range(KF.sset.n_cells(k))))
    return SimplicialMap(
        src=KF.sset,
        dst=KG.sset,
        mapping=tuple(mapping),
        name=name or f"{KF.F.name}=>{KG.F.name}",
    )


# -- unit-style maps whose domain is X itself ---------------------------------


def unit_label(kind: EndofunctorKind, k: int):
    """The cell of value(k) at level k representing the canonical unit."""
    if kind is EndofunctorKind.ESDP:
        return tuple((t, t) for t in range(k + 1))
    if kind is EndofunctorKind.DCPI:
        return (tuple(("v", t) for t in range(k + 1)), ("!",) * k)
    if kind is EndofunctorKind.ESDI:
        return (0, tuple(range(k + 1)))
    raise KeyError(kind)


def x_into(K: KanComplex) -> SimplicialMap:
    """X -> ESd'X, X -> DcpI X, or X -> ESdI X (the canonical inclusions)."""
    from .kan import truncate_sset

    d = K.F.out_dim
    if K.X.dim < d:
        raise InsufficientTruncation("domain truncated below the output dim")
    X = truncate_sset(K.X, d)
    mapping = []
    for k in range(d + 1):
        label = unit_label(K.F.kind, k)
        mapping.append(
            tuple(K.locate_at_level(k, k, x, label) for x in range(X.n_cells(k)))
        )
    return SimplicialMap(
        src=X, dst=K.sset, mapping=tuple(mapping), name=f"{X.name}=>{K.F.name}"
    )


def cylinder_into_esdpi(K: KanComplex) -> tuple[TruncatedSSet, SimplicialMap]:
    """X × Δ¹ -> ESdI'X; returns the product complex and the map."""
    from .kan import truncate_sset

    assert K.F.kind is EndofunctorKind.ESDPI
    d = K.F.out_dim
    X = truncate_sset(K.X, d)
    delta1 = standard_simplex(1, d)
    cyl = product(X, delta1)
    mapping = []
    for k in range(d + 1):
        row = []
        for (x, wcell) in cyl.cells[k]:
            w = delta1.cells[k][wcell]
            label = tuple(
                ("p", (t, t)) if w[t] == 0 else ("v", t) for t in range(k + 1)
            )
            row.append(K.locate_at_level(k, k, x, label))
        mapping.append(tuple(row))
    return cyl, SimplicialMap(
        src=cyl, dst=K.sset, mapping=tuple(mapping), name=f"{X.name}×Δ1=>ESdI'"
    )


def restrict_to_end(
    K: KanComplex, end: int
) -> SimplicialMap:
    """X×{end} -> DcpI X / ESdI X / ESdI' X (end = 1 is the base inclusion;
    end = 0 composes through the primed column for ESDPI)."""
    from .kan import truncate_sset

    d = K.F.out_dim
    X = truncate_sset(K.X, d)
    if K.F.kind is EndofunctorKind.ESDPI:
        if end == 1:
            label_fn = lambda k: tuple(("v", t) for t in range(k + 1))
        else:
            label_fn = lambda k: tuple(("p", (t, t)) for t in range(k + 1))
    elif K.F.kind is EndofunctorKind.DCPI:
        assert end == 1
        label_fn = lambda k: (tuple(("v", t) for t in range(k + 1)), ("!",) * k)
    else:
        assert K.F.kind is EndofunctorKind.ESDI and end == 1
        label_fn = lambda k: (0, tuple(range(k + 1)))
    mapping = []
    for k in range(d + 1):
        label = label_fn(k)
        mapping.append(
            tuple(K.locate_at_level(k, k, x, label) for x in range(X.n_cells(k)))
        )
    return SimplicialMap(
        src=X, dst=K.sset, mapping=tuple(mapping), name=f"{X.name}×{{{end}}}"
    )
