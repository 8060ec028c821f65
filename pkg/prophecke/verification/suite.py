"""
Configuration, shared state and execution of the verification suite.
"""
import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Tuple

from loguru import logger
from tqdm import tqdm

from .checks import CHECKS, CheckOutcome, resolve_check, run_check
from ..algebra.bernstein import BernsteinMaps
from ..algebra.hecke_algebra import HeckeAlgebra
from ..algebra.ideal import IdealJ
from ..combinatorics.affine_weyl import AffineWeylGroup
from ..combinatorics.extended_group import ExtendedGroup
from ..combinatorics.root_datum import build_root_datum, check_prime_power
from ..modules.supersingular import SupersingularModules
from ..modules.weight_module import WeightModules
from ..utils.errors import ConfigurationError
from ..utils.rng import RNG
from ..utils.set_log_level import _progress_enabled

FORMATS = ("json", "tsv", "pretty")
MODES = ("generic", "charp")


@dataclass(frozen=True)
class SuiteConfig:
    """Settings of one suite run.

    Args:
        group (string): Group label, see build_root_datum.
        rank (int, optional): Rank parameter for labels without digits. Defaults to None.
        q (int, optional): Residue field cardinality. Defaults to 3.
        mode (string, optional): Restrict the relation checks to one coefficient mode; both if None. Defaults to None.
        max_length (int, optional): Length bound L for enumerated instances. Defaults to 6.
        seed (int, optional): Seed of the sampled instances. Defaults to 0.
        checks (tuple of string, optional): Selected check identifiers or aliases; all if empty. Defaults to ().
        output_format (string, optional): "json", "tsv" or "pretty". Defaults to "pretty".
        jobs (int, optional): Number of checks run concurrently. Defaults to 1.
        pi_scalars (tuple of int, optional): Scalars of the central translation for the module checks. Defaults to (1,).
        samples (int, optional): Number of sampled instances per sampled family. Defaults to 100.
        corrupt_quadratic (bool, optional): Run on an algebra with a corrupted quadratic relation. Defaults to False.
    """

    group: str
    rank: Optional[int] = None
    q: int = 3
    mode: Optional[str] = None
    max_length: int = 6
    seed: int = 0
    checks: Tuple[str, ...] = ()
    output_format: str = "pretty"
    jobs: int = 1
    pi_scalars: Tuple[int, ...] = (1,)
    samples: int = 100
    corrupt_quadratic: bool = False

    def __post_init__(self):
        self._check_inputs()

    def _check_inputs(self):
        logger.debug("Checking inputs to SuiteConfig.")
        if self.max_length < 2:
            raise ConfigurationError(f"The length bound has to be at least 2, got {self.max_length}.")
        check_prime_power(self.q)
        if self.mode is not None and self.mode not in MODES:
            raise ConfigurationError(f"Unknown coefficient mode {self.mode!r}, use one of {MODES}.")
        unknown = [name for name in self.checks if resolve_check(name) is None]
        if unknown:
            raise ConfigurationError(f"Unknown checks {unknown}, available: {list(CHECKS)}.")
        if self.output_format not in FORMATS:
            raise ConfigurationError(f"Unknown output format {self.output_format!r}, use one of {FORMATS}.")
        if self.jobs < 1 or self.samples < 1:
            raise ConfigurationError("jobs and samples have to be positive.")

    def selected_checks(self):
        """Selected check identifiers in suite order."""
        selected = {resolve_check(name) for name in self.checks}
        return [name for name in CHECKS if not selected or name in selected]

    def to_json(self):
        return {
            "group": self.group,
            "rank": self.rank,
            "q": self.q,
            "mode": self.mode,
            "max_length": self.max_length,
            "seed": self.seed,
            "samples": self.samples,
            "pi_scalars": list(self.pi_scalars),
        }


class SuiteContext:
    """Objects shared by all checks of one run; module-level objects are built on first use."""

    def __init__(self, config):
        self.config = config
        self.datum = build_root_datum(config.group, config.rank, config.q)
        self.affine = AffineWeylGroup(self.datum)
        self.group = ExtendedGroup(self.affine)
        self.generic = HeckeAlgebra(self.group, "generic", corrupt_quadratic=config.corrupt_quadratic)
        self.charp = self.generic.in_mode("charp")
        self.bernstein = BernsteinMaps(self.generic)
        self._lock = threading.Lock()
        self._pools = {}
        self._supersingular = None
        self._weights = None
        self._ideal = None

    def rng(self):
        """A fresh generator, so every check draws the same instances whatever the run order."""
        return RNG(self.config.seed)

    def modes(self):
        return list(MODES) if self.config.mode is None else [self.config.mode]

    def algebras(self):
        return [self.generic if mode == "generic" else self.charp for mode in self.modes()]

    def pool(self, max_length):
        """Elements of length at most max_length over the length-zero representatives."""
        with self._lock:
            if max_length not in self._pools:
                omegas = self.affine.omega_representatives(bound=1)
                self._pools[max_length] = self.affine.elements_up_to_length(max_length, omegas)
            return self._pools[max_length]

    def supersingular(self):
        with self._lock:
            if self._supersingular is None:
                self._supersingular = SupersingularModules(self.bernstein, self.config.pi_scalars)
            return self._supersingular

    def ideal(self):
        with self._lock:
            if self._ideal is None:
                self._ideal = IdealJ(self.bernstein)
            return self._ideal

    def weights(self):
        with self._lock:
            if self._weights is None:
                self._weights = WeightModules(self.bernstein)
            return self._weights


@dataclass
class CheckReport:
    name: str
    status: str
    outcome: CheckOutcome
    seconds: float = 0.0

    @property
    def anchor(self):
        return CHECKS[self.name].anchor

    def to_json(self):
        entry = {
            "name": self.name,
            "alias": CHECKS[self.name].alias,
            "anchor": self.anchor,
            "status": self.status,
            "instances": self.outcome.instances,
        }
        if self.outcome.counterexample is not None:
            entry["counterexample"] = self.outcome.counterexample
        if self.outcome.inconclusive is not None:
            entry["reason"] = self.outcome.inconclusive
        if self.outcome.notes:
            entry["notes"] = self.outcome.notes
        return entry


@dataclass
class VerificationReport:
    config: SuiteConfig
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.status == "PASS" for check in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_json(self):
        return {"config": self.config.to_json(), "checks": [check.to_json() for check in self.checks]}

    def render(self, output_format=None):
        """The report as text; only the pretty format contains timings."""
        output_format = self.config.output_format if output_format is None else output_format
        if output_format == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True)
        if output_format == "tsv":
            lines = ["name\tanchor\tstatus\tinstances\tdetail"]
            for check in self.checks:
                detail = check.outcome.counterexample or check.outcome.inconclusive or ""
                if isinstance(detail, dict):
                    detail = json.dumps(detail, sort_keys=True)
                lines.append(f"{check.name}\t{check.anchor}\t{check.status}\t{check.outcome.instances}\t{detail}")
            return "\n".join(lines)
        lines = []
        for check in self.checks:
            lines.append(
                f"{check.status:<13}{check.name:<22}{check.anchor:<27}"
                f"{check.outcome.instances:>8} instances {check.seconds:8.2f}s"
            )
            if check.outcome.counterexample is not None:
                lines.append(
                    f"    counterexample (seed {self.config.seed}): "
                    + json.dumps(check.outcome.counterexample, sort_keys=True)
                )
            if check.outcome.inconclusive is not None:
                lines.append(f"    {check.outcome.inconclusive}")
        return "\n".join(lines)


def _status(outcome):
    if outcome.counterexample is not None:
        return "FAIL"
    if outcome.inconclusive is not None:
        return "INCONCLUSIVE"
    return "PASS"


def _timed(name, context):
    start = time.perf_counter()
    try:
        outcome = run_check(name, context)
    except Exception as err:  # an exception inside a check is a failure of that check
        logger.error(f"Check {name} raised {type(err).__name__}: {err}")
        outcome = CheckOutcome().fail(error=f"{type(err).__name__}: {err}")
    return CheckReport(name, _status(outcome), outcome, time.perf_counter() - start)


def run_suite(config):
    """Run the selected checks, concurrently up to config.jobs.

    Args:
        config (SuiteConfig): The run configuration.

    Returns:
        VerificationReport: One entry per selected check, in suite order
    """
    names = config.selected_checks()
    logger.info(f"Running {len(names)} checks on {config.group} with q={config.q}, L={config.max_length}")
    context = SuiteContext(config)
    with ThreadPoolExecutor(max_workers=config.jobs) as executor:
        futures = {name: executor.submit(_timed, name, context) for name in names}
        reports = [
            futures[name].result() for name in tqdm(names, desc="verify", disable=not _progress_enabled())
        ]
    report = VerificationReport(config, reports)
    logger.info(f"{sum(r.status == 'PASS' for r in reports)}/{len(reports)} checks passed")
    return report
