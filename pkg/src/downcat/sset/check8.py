"""Cell-for-cell verification of the comparison-map properties.

Two strategies share the evaluators from compare:

* tag-local: every tagged cell is evaluated along both composite paths into a
  concrete nerve chain and compared; feasible for all variants because no
  quotient complex is materialized.
* materialized: the Kan complexes and the four maps are built outright (with
  the union-find well-definedness audit) when the tag budget allows; used for
  the small Down variant.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..errors import SizeLimitExceeded
from ..localization import SuiteReport
from ..reedy import SimplexMor, sigma
from .base import SimplicialMap, TruncatedSSet, nerve_functor_map
from .compare import (
    ComparisonContext,
    GammaVariant,
    _BaseChain,
    _last_functor_chain,
    build_comparison_context,
    eval_D,
    eval_DI,
    eval_E,
    eval_EI,
)
from .connect import (
    connecting_map,
    cylinder_into_esdpi,
    dcp_to_dcpi_label,
    dcp_to_esd_label,
    dcpi_to_esdi_label,
    esd_to_esdp_label,
    esdi_to_esdpi_label,
    esdp_to_esdpi_label,
    restrict_to_end,
    x_into,
)
from .kan import (
    DcpCosimplicial,
    DcpiCosimplicial,
    EndofunctorKind,
    EsdiPrimeCosimplicial,
    EsdPrimeCosimplicial,
    KanComplex,
    evaluate_endofunctor,
    join_self,
    truncate_sset,
)


def _lambda_cell(ctx: ComparisonContext, cell) -> tuple:
    return _last_functor_chain(ctx, cell)


def _tags(X: TruncatedSSet, F, d: int, max_n: int, c_max: int | None = None):
    """(n, x, x-label, c-label, k) for non-degenerate x and c.

    c_max bounds the swept c-level: because every evaluator and every
    connecting label map builds its output chain stepwise from consecutive
    entries, agreement on vertex and edge labels (c_max = 1) decides the
    equality on all chain cells; deeper sweeps re-verify that structurally.
    """
    if c_max is None:
        c_max = d
    for n in range(min(X.dim, max_n) + 1):
        xs = X.nondegenerate(n)
        if not xs:
            continue
        Fn = F.value(n)
        for k in range(min(d, c_max) + 1):
            cells = [Fn.cells[k][c] for c in Fn.nondegenerate(k)]
            for x in xs:
                x_label = X.cells[n][x]
                for c_label in cells:
                    yield n, x, x_label, c_label, k


def check_comparison_properties(
    ctx: ComparisonContext, tag_dim: int | None = None, c_max: int | None = None
) -> SuiteReport:
    """Run the five properties tag-locally; report per property.

    For the small Down variant the sweep is fully exhaustive (all chain
    levels, base chains to depth 2d+1); the bigger variants sweep vertex and
    edge labels over base chains to depth d, which decides all chain cells
    because both sides of each equation are built stepwise.
    """
    report = SuiteReport(f"comparison[{ctx.variant.value}]")
    t0 = time.perf_counter()
    d = ctx.d
    if tag_dim is None:
        tag_dim = 2 * d + 1 if ctx.variant is GammaVariant.DOWN else d
    if c_max is None:
        c_max = d if ctx.variant is GammaVariant.DOWN else 1
    report.meta["tag_dim"] = tag_dim
    report.meta["c_max"] = c_max
    dcp = DcpCosimplicial(d, ctx.alpha_bound)
    dcpi = DcpiCosimplicial(d, ctx.alpha_bound)
    esdp = EsdPrimeCosimplicial(d)
    esdpi = EsdiPrimeCosimplicial(d)
    S, T = ctx.S, ctx.T

    # (1a) lambda ∘ D == E ∘ (ESd=>ESd') ∘ (Dcp=>ESd)  on Dcp S
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(S, dcp, d, tag_dim, c_max):
        lhs = _lambda_cell(ctx, eval_D(ctx, n, x_label, c))
        rhs = eval_E(ctx, n, x_label, esd_to_esdp_label(dcp_to_esd_label(c)))
        count += 1
        if lhs != rhs:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(f"(1a) lambda∘D = E∘collapse on Dcp S ({count} tags)", ok, witness)

    # (1b) lambda ∘ D^I == E^I ∘ (ESdI=>ESdI') ∘ (DcpI=>ESdI)  on DcpI T
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(T, dcpi, d, tag_dim, c_max):
        lhs = _lambda_cell(ctx, eval_DI(ctx, n, x_label, c))
        rhs = eval_EI(ctx, n, x_label, esdi_to_esdpi_label(dcpi_to_esdi_label(c)))
        count += 1
        if lhs != rhs:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(f"(1b) lambda∘D^I = E^I∘collapse on DcpI T ({count} tags)", ok, witness)

    # (1d) D ∘ Dcp(lambda) == D^I ∘ (Dcp=>DcpI)  on Dcp T
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(T, dcp, d, tag_dim, c_max):
        lhs = eval_D(ctx, n, _lambda_cell(ctx, x_label), c)
        rhs = eval_DI(ctx, n, x_label, dcp_to_dcpi_label(c))
        count += 1
        if lhs != rhs:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(f"(1d) D∘Dcp(lambda) = D^I∘incl on Dcp T ({count} tags)", ok, witness)

    # (1e) E ∘ ESd'(lambda) == E^I ∘ (ESd'=>ESdI')  on ESd' T
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(T, esdp, d, tag_dim, c_max):
        lhs = eval_E(ctx, n, _lambda_cell(ctx, x_label), c)
        rhs = eval_EI(ctx, n, x_label, esdp_to_esdpi_label(c))
        count += 1
        if lhs != rhs:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(f"(1e) E∘ESd'(lambda) = E^I∘incl on ESd' T ({count} tags)", ok, witness)

    # (2) retractions on T and S cells
    ok, witness, count = True, "", 0
    for k in range(d + 1):
        for x in T.nondegenerate(k):
            x_label = T.cells[k][x]
            unit = (tuple(("v", t) for t in range(k + 1)), ("!",) * k)
            got = eval_DI(ctx, k, x_label, unit)
            count += 1
            if got != x_label:
                ok, witness = False, f"T cell {x_label}"
                break
    report.record(f"(2) D^I retracts the base inclusion ({count} cells)", ok, witness)
    ok, witness, count = True, "", 0
    for k in range(d + 1):
        for x in S.nondegenerate(k):
            x_label = S.cells[k][x]
            unit = tuple((t, t) for t in range(k + 1))
            got = eval_E(ctx, k, x_label, unit)
            count += 1
            if got != x_label:
                ok, witness = False, f"S cell {x_label}"
                break
    report.record(f"(2) E retracts the unit inclusion ({count} cells)", ok, witness)

    # (3) E^I ∘ (T×Δ1 -> ESdI' T) == lambda ∘ proj
    ok, witness, count = True, "", 0
    from ..reedy import monotone_maps

    for k in range(d + 1):
        for x in T.nondegenerate(k):
            x_label = T.cells[k][x]
            lam = _lambda_cell(ctx, x_label)
            for w in monotone_maps(k, 1):
                label = tuple(
                    ("p", (t, t)) if w[t] == 0 else ("v", t) for t in range(k + 1)
                )
                got = eval_EI(ctx, k, x_label, label)
                count += 1
                if got != lam:
                    ok, witness = False, f"cell {x_label} w={w}"
                    break
    report.record(f"(3) E^I on the cylinder = lambda∘proj ({count} cells)", ok, witness)

    # (4) D sends collapse-edge preimages to weq
    collapse = SimplexMor(3, 1, (0, 0, 1, 1))
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(S, dcp, d, tag_dim, 1):
        if k != 1:
            continue
        w = dcp_to_esd_label(c)
        y = S.act(SimplexMor(3, n, w), n, x)
        degenerate = any(
            S.act(collapse, 1, v) == y for v in range(S.n_cells(1))
        )
        if not degenerate:
            continue
        got = eval_D(ctx, n, x_label, c)
        count += 1
        assert got[0] == "c" and len(got[1]) == 1
        if got[1][0] not in ctx.weq:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(f"(4) D maps collapse preimages to weq ({count} edges)", ok, witness)

    # (5) D^I: degenerate-image or 0-skeleton-image edges go to weq
    degen_direct = set()
    for y0 in range(T.n_cells(0)):
        degen_direct.add((0, T.degeneracy(0, y0, 0)))
    for y1 in range(T.n_cells(1)):
        degen_direct.add((2, T.act(SimplexMor(3, 1, (0, 0, 1, 1)), 1, y1)))
    ok, witness, count = True, "", 0
    for n, x, x_label, c, k in _tags(T, dcpi, d, tag_dim, 1):
        if k != 1:
            continue
        i, w = dcpi_to_esdi_label(c)
        y = T.act(SimplexMor(len(w) - 1, n, w), n, x)
        in_degen = (i, y) in degen_direct
        in_sk0 = T.ez_core(len(w) - 1, y)[0] == 0
        if not (in_degen or in_sk0):
            continue
        got = eval_DI(ctx, n, x_label, c)
        count += 1
        assert got[0] == "c" and len(got[1]) == 1
        if got[1][0] not in ctx.weq:
            ok, witness = False, f"tag ({n},{x},{c})"
            break
    report.record(
        f"(5) D^I maps degenerate/0-skeleton-image edges to weq ({count} edges)",
        ok,
        witness,
    )
    report.meta["runtime_seconds"] = round(time.perf_counter() - t0, 3)
    return report


# -- full materialization (small variants) -------------------------------------


@dataclass
class ComparisonMaps:
    ctx: ComparisonContext
    D: SimplicialMap
    DI: SimplicialMap
    E: SimplicialMap
    EI: SimplicialMap
    lam: SimplicialMap  # the nerve of last: T -> S
    phi: dict[int, tuple[int, int]]  # mor id -> (minus leg, plus leg)
    q_objects: dict[int, int]  # mor id -> midpoint object
    eta: dict[int, int]  # mor id -> plus leg

    def validate(self) -> list[str]:
        bad = []
        for name, m in (("D", self.D), ("DI", self.DI), ("E", self.E), ("EI", self.EI)):
            rep = m.validate()
            bad += [f"{name}: {v}" for v in rep]
        return bad


def _estimate_tags(X: TruncatedSSet, F, d: int) -> int:
    total = 0
    for n in range(X.dim + 1):
        xs = X.nondegenerate(n)
        if not xs:
            continue
        Fn = F.value(n)
        total += len(xs) * sum(Fn.n_cells(k) for k in range(d + 1))
    return total


def _map_from_eval(
    K: KanComplex, target: TruncatedSSet, evaluator, name: str
) -> SimplicialMap:
    """Materialize a tag-local evaluator into a SimplicialMap with audit."""
    index = [
        {label: i for i, label in enumerate(target.cells[k])}
        for k in range(target.dim + 1)
    ]
    d = K.F.out_dim
    mapping = []
    for k in range(d + 1):
        values: dict[int, int] = {}
        for tag, cls in K.class_of_tag[k].items():
            n, x, c_label = tag
            x_label = K.X.cells[n][x]
            got = index[k][evaluator(n, x_label, c_label)]
            if cls in values:
                assert values[cls] == got, f"{name} not constant on a class"
            else:
                values[cls] = got
        mapping.append(tuple(values[c] for c in range(K.sset.n_cells(k))))
    return SimplicialMap(src=K.sset, dst=target, mapping=tuple(mapping), name=name)


def build_comparison_maps(
    ctx: ComparisonContext, tag_budget: int = 400_000
) -> ComparisonMaps:
    """Materialize D, D^I, E, E^I as SimplicialMaps (small variants only)."""
    d = ctx.d
    S, T = ctx.S, ctx.T
    dcp = DcpCosimplicial(d, ctx.alpha_bound)
    dcpi = DcpiCosimplicial(d, ctx.alpha_bound)
    esdp = EsdPrimeCosimplicial(d)
    esdpi = EsdiPrimeCosimplicial(d)
    est = (
        _estimate_tags(truncate_sset(S, d), dcp, d)
        + _estimate_tags(truncate_sset(T, d), dcpi, d)
        + _estimate_tags(S, esdp, d)
        + _estimate_tags(T, esdpi, d)
    )
    if est > tag_budget:
        raise SizeLimitExceeded(
            f"comparison maps for {ctx.variant.value} need ~{est} tags (> {tag_budget})"
        )
    K_dcp_S = evaluate_endofunctor(EndofunctorKind.DCP, S, d, alpha_bound=ctx.alpha_bound)
    K_esdp_S = evaluate_endofunctor(EndofunctorKind.ESDP, S, d)
    K_dcpi_T = evaluate_endofunctor(EndofunctorKind.DCPI, T, d, alpha_bound=ctx.alpha_bound)
    K_esdpi_T = evaluate_endofunctor(EndofunctorKind.ESDPI, T, d)
    Sd, Td = truncate_sset(S, d), truncate_sset(T, d)
    D = _map_from_eval(K_dcp_S, Td, lambda n, xl, c: eval_D(ctx, n, xl, c), "D")
    E = _map_from_eval(K_esdp_S, Sd, lambda n, xl, c: eval_E(ctx, n, xl, c), "E")
    DI = _map_from_eval(K_dcpi_T, Td, lambda n, xl, c: eval_DI(ctx, n, xl, c), "DI")
    EI = _map_from_eval(K_esdpi_T, Sd, lambda n, xl, c: eval_EI(ctx, n, xl, c), "EI")
    lam_mapping = []
    s_index = [
        {label: i for i, label in enumerate(S.cells[k])} for k in range(d + 1)
    ]
    for k in range(d + 1):
        lam_mapping.append(
            tuple(
                s_index[k][_lambda_cell(ctx, T.cells[k][x])]
                for x in range(T.n_cells(k))
            )
        )
    lam = SimplicialMap(src=Td, dst=Sd, mapping=tuple(lam_mapping), name="lambda")
    return ComparisonMaps(
        ctx=ctx,
        D=D,
        DI=DI,
        E=E,
        EI=EI,
        lam=lam,
        phi=dict(ctx.gadget.phi),
        q_objects={u: ctx.gadget.q_obj(u) for u in ctx.rc.cat.morphisms()},
        eta={u: ctx.gadget.eta(u) for u in ctx.rc.cat.morphisms()},
    )
