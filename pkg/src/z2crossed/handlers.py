"""Command logic shared by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass

from .category import CrossedCategory, make_category
from .cocycle import CocycleData, build
from .discform import JordanParseError, parse_jordan
from .equivariant import eq_fusion, modular_data, simple_objects, verify_modular
from .lattice import Lattice, build_cocycle_from_lattice, verify_milgram
from .schemas import (
    CheckResponse,
    FusionResponse,
    GaussResponse,
    InfoResponse,
    ModularResponse,
    RunConfig,
)


class InputError(ValueError):
    """Invalid user input; maps to exit code 2 / HTTP 400."""


PAPER_ORDER_LABEL = "4_1^+1"
# Canonical order -> the published object order for the 4_1 fixture.
PAPER_ORDER = (0, 1, 3, 2, 6, 8, 5, 7, 4)


@dataclass
class Build:
    source: str
    data: CocycleData
    category: CrossedCategory
    lattice: Lattice | None = None


def build_category(cfg: RunConfig) -> Build:
    if (cfg.jordan is None) == (cfg.gram is None):
        raise InputError("provide exactly one input: jordan symbol or gram matrix")
    lattice = None
    if cfg.jordan is not None:
        try:
            form = parse_jordan(cfg.jordan)
        except JordanParseError as exc:
            raise InputError(str(exc)) from exc
        data = build(form)
        source = form.label
    else:
        try:
            lattice = Lattice(cfg.gram)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        data = build_cocycle_from_lattice(lattice)
        source = f"gram rank {lattice.rank}"
    try:
        category = make_category(
            data,
            epsilon=cfg.epsilon,
            alpha_branch=cfg.alpha_branch,
            beta_sign=cfg.beta_sign,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return Build(source, data, category, lattice)


def run_check(cfg: RunConfig) -> CheckResponse:
    b = build_category(cfg)
    checks = dict(b.data.verify_cocycle().to_dict())
    checks.update(b.category.verify_all().summary())
    if b.lattice is not None:
        for chk in verify_milgram(b.lattice, b.data):
            checks[chk.name] = "pass" if chk.ok else f"fail: {chk.detail}"
    cat = b.category
    return CheckResponse(
        input=b.source,
        epsilon=cat.epsilon,
        alpha=cat.alpha.to_terms(),
        beta=cat.beta.to_terms(),
        delta=repr(b.data.delta),
        ok=all(v == "pass" for v in checks.values()),
        checks=checks,
    )


def run_modular(cfg: RunConfig) -> ModularResponse:
    b = build_category(cfg)
    if cfg.paper_order and b.source != PAPER_ORDER_LABEL:
        raise InputError(
            f"paper order is only defined for the {PAPER_ORDER_LABEL} fixture"
        )
    md = modular_data(b.category)
    checks = verify_modular(md).to_dict()
    idx = PAPER_ORDER if cfg.paper_order else tuple(range(len(md.objects)))
    cat = b.category
    return ModularResponse(
        input=b.source,
        epsilon=cat.epsilon,
        alpha=cat.alpha.to_terms(),
        beta=cat.beta.to_terms(),
        objects=[repr(md.objects[i]) for i in idx],
        T=[md.T[i].to_terms() for i in idx],
        S=[[md.S[i][j].to_terms() for j in idx] for i in idx],
        dims=[md.dims[i].to_terms() for i in idx],
        global_dim=md.global_dim,
        checks=checks,
    )


def run_fusion(cfg: RunConfig) -> FusionResponse:
    b = build_category(cfg)
    objs = simple_objects(b.category)
    return FusionResponse(
        input=b.source,
        objects=[repr(o) for o in objs],
        table=[
            [[repr(c) for c in eq_fusion(b.category, A, B)] for B in objs]
            for A in objs
        ],
    )


def run_gauss(cfg: RunConfig) -> GaussResponse:
    b = build_category(cfg)
    d = b.data
    return GaussResponse(
        input=b.source,
        signature=d.form.signature,
        gauss_q_inverse=d.gauss_partial_q().to_terms(),
        partial_Q={
            repr(zbar): d.gauss_partial_Q(zbar).to_terms()
            for zbar in d.group.cosets_mod2
        },
        milgram_sum=d.form.gauss_full().to_terms(),
    )


def run_info(cfg: RunConfig) -> InfoResponse:
    b = build_category(cfg)
    g = b.data.group
    cat = b.category
    return InfoResponse(
        input=b.source,
        group=" x ".join(f"Z/{n}" for n in g.orders),
        order=g.order,
        two_gamma_order=len(g.two_gamma),
        torsion2=[repr(a) for a in g.torsion2],
        delta=repr(b.data.delta),
        epsilon=cat.epsilon,
        alpha=cat.alpha.to_terms(),
        beta=cat.beta.to_terms(),
    )
