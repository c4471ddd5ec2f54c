"""Seeded conjecture-checking campaigns with a JSON-lines trial log.

Each trial samples generic forms of the configured degrees from a seed derived
from ``(base seed, trial index)``, computes the grevlex initial ideal, and
classifies it.  A record carries everything needed to replay it.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .coeff import CoefficientDomain, PrimeField
from .errors import Degenerate, Mismatch
from .genericgen import GenericSpec, derive_seed, reduce_second_generator, sample_generic_forms
from .groebner import buchberger, initial_ideal
from .monideal import MonomialIdeal, is_revlex, is_weakly_revlex

log = logging.getLogger(__name__)

MAX_RESAMPLES = 5


@dataclass(frozen=True)
class TrialConfig:
    nvars: int
    degrees: tuple
    domain: CoefficientDomain = field(default_factory=PrimeField)
    trials: int = 1
    seed: int = 0
    max_resamples: int = MAX_RESAMPLES

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError(f"degrees must be positive: {self.degrees}")
        if self.nvars < 1:
            raise ValueError("nvars must be >= 1")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def sorted_degrees(self) -> tuple:
        return tuple(sorted(self.degrees))


@dataclass
class TrialRecord:
    trial: int
    seed: int
    nvars: int
    degrees: list
    domain: str
    initial_ideal: dict
    wrl: bool
    rl: bool
    rl_bound: int
    rl_exact: bool
    resamples: int
    elapsed_ms: int
    wrl_witness: list | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "TrialRecord":
        return cls(**json.loads(line))

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_json(self.initial_ideal)


def initial_ideal_for(nvars: int, degrees, domain: CoefficientDomain, seed: int,
                      max_resamples: int = MAX_RESAMPLES) -> tuple[MonomialIdeal, int]:
    """Grevlex initial ideal of a generic ideal; returns ``(ideal, resamples)``.

    In two variables with two generators the second is first reduced modulo the
    first, which also screens out degenerate draws.
    """
    spec = GenericSpec(nvars, tuple(degrees), domain, seed)
    for attempt in range(max_resamples + 1):
        s = seed if attempt == 0 else derive_seed(seed, "resample", attempt)
        forms = sample_generic_forms(spec, s)
        if nvars == 2 and len(forms) == 2:
            try:
                forms = [forms[0], reduce_second_generator(forms[0], forms[1])]
            except Degenerate:
                continue
        return initial_ideal(buchberger(forms)), attempt
    raise Degenerate(f"degenerate after {max_resamples} resamples (seed {seed})")


def revlex_summary(J: MonomialIdeal):
    """Exact for Artinian ideals; otherwise checked one degree past the top generator."""
    if J.is_artinian():
        return is_revlex(J)
    return is_revlex(J, J.max_degree + 1)


def run_trial(config: TrialConfig, index: int) -> TrialRecord:
    start = time.perf_counter()
    seed = derive_seed(config.seed, index)
    J, resamples = initial_ideal_for(config.nvars, config.sorted_degrees, config.domain, seed,
                                     config.max_resamples)
    wrl = is_weakly_revlex(J)
    rl = revlex_summary(J)
    return TrialRecord(
        trial=index,
        seed=seed,
        nvars=config.nvars,
        degrees=list(config.sorted_degrees),
        domain=str(config.domain),
        initial_ideal=J.to_json(),
        wrl=wrl.holds,
        rl=rl.holds,
        rl_bound=rl.degree_bound,
        rl_exact=rl.exact,
        resamples=resamples,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
        wrl_witness=None if wrl.holds else [list(wrl.witness[0]), list(wrl.witness[1])],
    )


def replay(record: TrialRecord, max_resamples: int = MAX_RESAMPLES) -> MonomialIdeal:
    """Recompute a logged trial's initial ideal from its derived seed."""
    J, resamples = initial_ideal_for(record.nvars, record.degrees,
                                     CoefficientDomain.parse(record.domain), record.seed, max_resamples)
    if resamples != record.resamples:
        raise Mismatch("replay needed a different number of resamples",
                       {"logged": record.resamples, "replayed": resamples})
    return J


@dataclass
class CampaignSummary:
    config: TrialConfig
    records: list

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def wrl_pass(self) -> int:
        return sum(r.wrl for r in self.records)

    @property
    def rl_pass(self) -> int:
        return sum(r.rl for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.wrl]

    @property
    def resamples(self) -> int:
        return sum(r.resamples for r in self.records)

    def to_json(self) -> dict:
        c = self.config
        return {
            "nvars": c.nvars,
            "degrees": list(c.sorted_degrees),
            "domain": str(c.domain),
            "seed": c.seed,
            "trials": self.total,
            "wrl": self.wrl_pass,
            "rl": self.rl_pass,
            "resamples": self.resamples,
            "failures": [r.trial for r in self.failures],
            "elapsed_ms": sum(r.elapsed_ms for r in self.records),
        }

    def __str__(self):
        c = self.config
        degs = ",".join(map(str, c.sorted_degrees))
        return (f"nvars={c.nvars} degrees=({degs}) field={c.domain} seed={c.seed}: "
                f"weakly revlex {self.wrl_pass}/{self.total}, revlex {self.rl_pass}/{self.total}, "
                f"resamples {self.resamples}")


def read_log(path) -> list[TrialRecord]:
    p = Path(path)
    if not p.exists():
        return []
    with p.open() as fh:
        return [TrialRecord.from_json(line) for line in fh if line.strip()]


def _matches(record: TrialRecord, config: TrialConfig) -> bool:
    return (record.nvars == config.nvars and tuple(record.degrees) == config.sorted_degrees
            and record.domain == str(config.domain)
            and record.seed == derive_seed(config.seed, record.trial))


def _trial_job(args):
    return run_trial(*args)


def run_campaign(config: TrialConfig, log_path=None, jobs: int = 1) -> CampaignSummary:
    """Run (or resume) a campaign; already-logged trial indices are skipped.

    In two variables a weakly-revlex failure is an implementation bug, so the
    record is written and :class:`Mismatch` is raised.  With more variables
    failures are ordinary findings kept in the log and the summary.
    """
    existing = read_log(log_path) if log_path else []
    for r in existing:
        if not _matches(r, config):
            raise ValueError(f"log {log_path} has trial {r.trial} from a different campaign")
    done = {r.trial for r in existing}
    todo = [i for i in range(config.trials) if i not in done]
    records = [r for r in existing if r.trial < config.trials]
    fh = None
    if log_path:
        Path(log_path).parent.mkdir(parents=True, exist_ok=True)
        fh = open(log_path, "a")
    try:
        if jobs > 1 and len(todo) > 1:
            pool = ProcessPoolExecutor(max_workers=jobs)
            results = pool.map(_trial_job, [(config, i) for i in todo], chunksize=4)
        else:
            pool = None
            results = (run_trial(config, i) for i in todo)
        try:
            for rec in results:
                records.append(rec)
                if fh:
                    fh.write(rec.to_json() + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
                if not rec.wrl:
                    log.warning("trial %d (seed %d) is not weakly revlex: %s",
                                rec.trial, rec.seed, rec.initial_ideal)
                    if config.nvars == 2:
                        raise Mismatch("two-variable initial ideal is not weakly revlex",
                                       {"trial": rec.trial, "seed": rec.seed})
        finally:
            if pool:
                pool.shutdown(cancel_futures=True)
    finally:
        if fh:
            fh.close()
    records.sort(key=lambda r: r.trial)
    return CampaignSummary(config, records)
