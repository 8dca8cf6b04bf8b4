"""Request and response models shared by the CLI and the HTTP service.

Exact scalars travel as term lists [exp_num, exp_den, coeff_num,
coeff_den]; parsing them back through scalars.from_terms reproduces the
exact values.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

ScalarTerms = list[list[int]]


class RunConfig(BaseModel):
    """One construction request: input source plus structure choices."""

    jordan: str | None = None
    gram: list[list[int]] | None = None
    epsilon: Literal[1, -1] = 1
    alpha_branch: Literal["principal", "negative"] = "principal"
    beta_sign: Literal["pseudo-unitary", "negative"] = "pseudo-unitary"
    paper_order: bool = False


class CheckResponse(BaseModel):
    input: str
    epsilon: int
    alpha: ScalarTerms
    beta: ScalarTerms
    delta: str
    ok: bool
    checks: dict[str, str]


class ModularResponse(BaseModel):
    input: str
    epsilon: int
    alpha: ScalarTerms
    beta: ScalarTerms
    objects: list[str]
    T: list[ScalarTerms]
    S: list[list[ScalarTerms]]
    dims: list[ScalarTerms]
    global_dim: int
    checks: dict[str, str]


class FusionResponse(BaseModel):
    input: str
    objects: list[str]
    table: list[list[list[str]]]


class GaussResponse(BaseModel):
    input: str
    signature: int
    gauss_q_inverse: ScalarTerms
    partial_Q: dict[str, ScalarTerms]
    milgram_sum: ScalarTerms


class InfoResponse(BaseModel):
    input: str
    group: str
    order: int
    two_gamma_order: int
    torsion2: list[str]
    delta: str
    epsilon: int
    alpha: ScalarTerms
    beta: ScalarTerms
