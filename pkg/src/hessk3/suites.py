"""Suite registry: which reports make up each named suite, and the run driver."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass

from . import groups, lattice, periods, surfaces, theta_checks
from .report import CheckResult, results_from, summarize
from .theta import generators, restrict_diagonal

SUITES = ("theta", "lattice", "periods", "invariants")
MIN_THETA_ORDER = 16
DEFAULT_ORDER = 96

# random-sample counts used when --samples is not given
DEFAULT_SAMPLES = {"words": 100, "homomorphisms": 50, "psi": 20, "triples": 100, "pairs": 10}


@dataclass
class RunConfig:
    suites: tuple = SUITES
    order: int = DEFAULT_ORDER
    seed: int = 0
    samples: int | None = None
    fmt: str = "text"
    emit_series: str | None = None
    timings: bool = False

    def __post_init__(self):
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"unknown suite {bad[0]!r}; choose from all, {', '.join(SUITES)}")
        if "theta" in self.suites and self.order < MIN_THETA_ORDER:
            raise ValueError(f"order {self.order} below the theta minimum {MIN_THETA_ORDER}")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be positive")
        if self.fmt not in ("text", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def sample_count(self, key: str) -> int:
        return DEFAULT_SAMPLES[key] if self.samples is None else self.samples

    def to_json(self) -> dict:
        return {"suites": list(self.suites), "order": self.order, "seed": self.seed,
                "samples": {k: self.sample_count(k) for k in DEFAULT_SAMPLES}}


def _builders(suite: str, cfg: RunConfig) -> list:
    seed = cfg.seed
    if suite == "theta":
        return theta_checks.theta_builders(cfg.order)
    if suite == "lattice":
        n = cfg.sample_count
        return [
            lattice.config_report,
            lattice.verify_relations,
            lattice.discriminant_form,
            lattice.involution_actions,
            lattice.oq_structure,
            lambda: groups.verify_random_words(seed, n("words")),
            lambda: groups.verify_homomorphisms(seed, n("homomorphisms")),
            lambda: groups.random_psi_report(seed, n("psi")),
            groups.labeling_report,
            lambda: groups.random_reduction_report(seed, n("triples"), 50),
            lambda: groups.solution_report(50),
            groups.reduction_report,
            lambda: groups.transitivity_report(seed, n("pairs")),
        ]
    if suite == "periods":
        return [periods.verify_oracle, periods.scaling_report, periods.verify_f4_reduction,
                periods.verify_quartic, periods.verify_degeneration]
    if suite == "invariants":
        return [surfaces.verify_strata, surfaces.verify_hessians, lambda: surfaces.boundary_lines()[0],
                surfaces.verify_config_consistency, surfaces.singular_points, surfaces.enriques_fixed_points]
    raise ValueError(suite)


def run_suite(suite: str, cfg: RunConfig) -> list[CheckResult]:
    out = []
    for build in _builders(suite, cfg):
        t0 = time.perf_counter()
        rep = build()
        out.extend(results_from(suite, rep, time.perf_counter() - t0))
    return out


def run(cfg: RunConfig) -> tuple[list[CheckResult], dict]:
    results = []
    for suite in cfg.suites:
        results.extend(run_suite(suite, cfg))
    ids = [r.id for r in results]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate check ids")
    if cfg.emit_series:
        emit_series(cfg.emit_series, cfg.order)
    return results, summarize(results)


def emit_series(path: str, order: int) -> None:
    """Dump the generator series and their diagonal restrictions as JSON."""
    g = generators(order)
    doc = {"order": order, "forms": {}, "diagonal": {}}
    for name in g._fields:
        doc["forms"][name] = {"weight": getattr(g, name).weight, **getattr(g, name).series.to_json()}
        doc["diagonal"][name] = restrict_diagonal(getattr(g, name)).to_json()
    with open(path, "w") as fh:
        json.dump(doc, fh)
