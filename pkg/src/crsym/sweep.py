"""Seeded random generation of Levi-degenerate, holomorphically nondegenerate models."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from crsym.classify import Nondegeneracy, analyze, holomorphic_nondegeneracy
from crsym.errors import CRSymError
from crsym.poly import CRat, RealPoly, format_model, hermitian
from crsym.weights import variable_weights

DEFAULT_COEFFICIENTS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(3))
ALLOWED_DIMS = frozenset({2, 3, 4, 5, 6, 7, 9, 10})


@dataclass
class SweepConfig:
    count: int = 200
    seed: int = 1
    max_degree: int = 6
    max_support: int = 6
    coefficients: tuple = DEFAULT_COEFFICIENTS
    max_attempts: int = 200000


@dataclass
class SweepResult:
    models: list = field(default_factory=list)
    records: list = field(default_factory=list)
    dims: list = field(default_factory=list)
    histogram: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    attempts: int = 0

    def to_dict(self) -> dict:
        return {
            "count": len(self.models),
            "attempts": self.attempts,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "counterexamples": self.counterexamples,
            "warnings": self.warnings,
        }


def _candidate_pairs(m1: int, m2: int, max_degree: int):
    """Pairs ``a <= b`` of nonzero exponents with ``(a1+b1)/m1 + (a2+b2)/m2 = 1``."""
    out = []
    for s1 in range(m1 + 1):
        rest = 1 - Fraction(s1, m1)
        s2 = rest * m2
        if s2.denominator != 1:
            continue
        s2 = int(s2)
        if s1 + s2 > max_degree:
            continue
        for a1 in range(s1 + 1):
            for a2 in range(s2 + 1):
                a, b = (a1, a2), (s1 - a1, s2 - a2)
                if a != (0, 0) and b != (0, 0) and a <= b:
                    out.append((a, b))
    return out


def _coefficient(rng: random.Random, coeffs, diagonal: bool) -> CRat:
    re = rng.choice(coeffs)
    if diagonal:
        return CRat(re)
    im = rng.choice(coeffs) if rng.random() < 0.4 else Fraction(0)
    return CRat(re, im)


def random_model(rng: random.Random, cfg: SweepConfig) -> RealPoly | None:
    """One draw; ``None`` if it fails the structural filters."""
    m1 = rng.randint(2, cfg.max_degree)
    m2 = rng.randint(m1, cfg.max_degree)
    if (m1, m2) == (2, 2):
        return None
    cands = _candidate_pairs(m1, m2, cfg.max_degree)
    if not cands:
        return None
    rng.shuffle(cands)
    P = RealPoly.zero()
    terms = 0
    for a, b in cands[: rng.randint(1, len(cands))]:
        size = 1 if a == b else 2
        if terms + size > cfg.max_support:
            continue
        P = P + hermitian(a, b, _coefficient(rng, cfg.coefficients, a == b))
        terms += size
    if not P:
        return None
    try:
        weights, _ = variable_weights(P)
    except (CRSymError, ValueError):
        return None
    if weights.l1 == weights.l2 == Fraction(1, 2):
        return None  # Levi nondegenerate
    if holomorphic_nondegeneracy(P).status != Nondegeneracy.Nondegenerate:
        return None
    return RealPoly._raw(P._t)


def generate_models(cfg: SweepConfig) -> tuple[list, int]:
    rng = random.Random(cfg.seed)
    models, attempts = [], 0
    while len(models) < cfg.count and attempts < cfg.max_attempts:
        attempts += 1
        P = random_model(rng, cfg)
        if P is not None:
            models.append(P)
    return models, attempts


def _analyze_one(P) -> dict:
    r = analyze(P, embed=False)
    return {
        "total_dim": r.total_dim,
        "g1_dim": r.g1_dim,
        "gn_dim": r.gn_dim,
        "g0_dim": r.graded_dims.get("0", 0),
        "gm1_dim": r.graded_dims.get("-1", 0),
        "balanced": r.balanced is not None or r.balanced_after_change is not None,
        "special_family": r.special_family,
        "warnings": r.warnings,
    }


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> SweepResult:
    models, attempts = generate_models(cfg)
    if jobs > 1 and len(models) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_analyze_one, models, chunksize=4))
    else:
        outcomes = [_analyze_one(P) for P in models]
    res = SweepResult(attempts=attempts)
    for P, rec in zip(models, outcomes):
        src = format_model(P)
        dim, warns = rec["total_dim"], rec["warnings"]
        res.models.append(src)
        res.records.append({"model": src, **rec})
        res.dims.append(dim)
        res.histogram[dim] = res.histogram.get(dim, 0) + 1
        if dim not in ALLOWED_DIMS:
            res.counterexamples.append({"model": src, "total_dim": dim})
        for wmsg in warns:
            res.warnings.append({"model": src, "warning": wmsg})
    return res
