"""
Command-line front end
Commands:
    params  one family and one k: record, first points, failure count
    verify  closed-form c against the Gram-matrix oracle over admissible families
    sweep   parameter rows for every admissible family of the given fields
    table   parameter rows of one family over a k range
Exit codes: 0 success, 1 invalid input, 2 verification mismatch.
"""

import concurrent.futures
import json
import os
import sys
from typing import Any, Callable, Dict, List, Literal, Optional, Sequence, Tuple

import click
from pydantic import BaseModel, ConfigDict, Field

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from codes.grs_codes import (
    CodeFamily,
    CodeFamilyParams,
    admissible_families,
    code_family,
    failure_points_bruteforce,
    validate_params,
)
from lattices.hull_formula import Exactness, HullCalculator, classify_P_case
from quantum.quantum_params import eaqecc_params
from reporting.table_writer import (
    FAMILY_COLUMNS,
    OUTPUT_FORMATS,
    record_row,
    records_frame,
    render,
    write_output,
)
from utils.config import Config
from utils.exceptions import DimensionOutOfRangeError, HullToolkitError
from utils.logger import configure_logging, setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_MISMATCH = 2

# Parameter families of the published EAQMDS table
FAMILIES: Dict[str, Tuple[int, int, int, int, int]] = {
    "q11": (11, 5, 3, 4, 3),
    "q29": (29, 28, 5, 30, 2),
    "q83": (83, 41, 6, 84, 2),
}


def parse_k_range(text: str) -> Tuple[int, int]:
    """'a..b' -> (a, b), inclusive."""
    try:
        low, high = (int(part) for part in text.split(".."))
    except ValueError:
        raise ValueError(f"expected a..b, got '{text}'") from None
    if low > high:
        raise DimensionOutOfRangeError(f"empty k range '{text}'")
    return low, high


def max_exact_k(params: CodeFamilyParams) -> int:
    limit = 2 * params.lam_tau if params.rho == 2 else params.lam_tau
    return min(limit, params.n)


def k_values(params: CodeFamilyParams, k_range: Optional[Tuple[int, int]],
             strict: bool = False) -> List[int]:
    """k in the requested range clipped to [1, n]; ``strict`` rejects ranges leaving [1, n]."""
    if k_range is None:
        return list(range(1, params.n + 1))
    low, high = k_range
    if strict and (low < 1 or high > params.n):
        raise DimensionOutOfRangeError(f"k range {low}..{high} outside [1, n={params.n}]")
    return list(range(max(low, 1), min(high, params.n) + 1))


class FamilyTask(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: CodeFamilyParams
    k_range: Optional[Tuple[int, int]] = None
    with_oracle: bool = False
    max_n: int = 2000
    inject_fault: bool = False


class FamilyResult(BaseModel):
    params: CodeFamilyParams
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    mismatches: List[Dict[str, Any]] = Field(default_factory=list)
    skipped: bool = False


class SweepSpec(BaseModel):
    """Field sizes, k range and options of one verify or sweep run."""

    model_config = ConfigDict(frozen=True)

    q_list: List[int] = Field(min_length=1)
    k_range: Optional[Tuple[int, int]] = None
    sigma_filter: Literal["exact", "all"] = "exact"
    output_format: Literal["csv", "json"] = "csv"
    verify: bool = False
    max_n: int = 2000
    inject_fault: bool = False

    def tasks(self) -> Tuple[List[FamilyTask], List[int]]:
        """Tasks for every admissible family of q_list, and the q values that have none."""
        tasks, empty = [], []
        for q in self.q_list:
            families = admissible_families(q, self.sigma_filter)
            if not families:
                logger.info(f"q={q}: no admissible families")
                empty.append(q)
            tasks.extend(FamilyTask(params=p, k_range=self.k_range, with_oracle=self.verify,
                                    max_n=self.max_n, inject_fault=self.inject_fault)
                         for p in families)
        return tasks, empty


def evaluate_family(task: FamilyTask) -> FamilyResult:
    """Formula rows for one family, compared with the oracles when requested."""
    params = task.params
    result = FamilyResult(params=params)
    run_oracle = task.with_oracle and params.n <= task.max_n
    result.skipped = task.with_oracle and not run_oracle

    calculator = HullCalculator(params)
    oracle: Optional[CodeFamily] = None
    if run_oracle:
        if task.inject_fault:
            oracle = CodeFamily(params.model_copy(update={"L": params.L + 1}))
        else:
            oracle = code_family(params)

    family_fields = dict(zip(FAMILY_COLUMNS, params.key))
    for k in k_values(params, task.k_range):
        hull = calculator.compute(k)
        record = eaqecc_params(params, k, hull.c, hull.exactness)
        row = {**family_fields, **record_row(record, k)}

        if oracle is not None:
            _, oracle_c = oracle.hull_dimension(k)
            row["oracle_c"] = oracle_c
            context = {**family_fields, "k": k, "formula_c": hull.c, "oracle_c": oracle_c,
                       "exactness": hull.exactness.value}
            if hull.exactness == Exactness.EXACT and oracle_c != hull.c:
                result.mismatches.append({**context, "check": "formula != gram rank"})
            elif oracle_c > hull.c:
                result.mismatches.append({**context, "check": "gram rank above upper bound"})

            brute = len(failure_points_bruteforce(params, k))
            if brute != hull.F_count:
                result.mismatches.append({**context, "F_count": hull.F_count, "failure_points": brute,
                                          "check": "formula != failure point count"})

        result.rows.append(row)
    return result


class ParameterSweep:
    """Evaluates independent family tasks, serially or in a process pool."""

    def __init__(self, workers: int = 1):
        self.workers = max(1, workers)
        self.logger = setup_logger(__name__)

    def run(self, tasks: Sequence[FamilyTask],
            worker: Callable[[FamilyTask], FamilyResult] = evaluate_family) -> List[FamilyResult]:
        self.logger.info(f"Evaluating {len(tasks)} families with {self.workers} worker(s)")
        if self.workers == 1 or len(tasks) <= 1:
            results = [worker(task) for task in tasks]
        else:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.workers) as executor:
                results = list(executor.map(worker, tasks))

        for result in results:
            if result.skipped:
                self.logger.warning(f"Oracle skipped for {result.params.label()}: "
                                    f"n={result.params.n} exceeds the cap")
        return sorted(results, key=lambda r: r.params.key)


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
class KRange(click.ParamType):
    """Click parameter type for inclusive 'a..b' ranges."""

    name = "a..b"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            return parse_k_range(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


K_RANGE = KRange()


def _format_point(first) -> str:
    return "-" if first is None else f"({first.D1},{first.D2})"


def family_selection(func: Callable) -> Callable:
    """Field sizes, k range, sigma filter, oracle cap and worker options shared by verify and sweep."""
    options = [
        click.argument("q_list", metavar="[Q]...", type=int, nargs=-1),
        click.option("--k-range", type=K_RANGE, default=None, help="a..b, inclusive"),
        click.option("--sigma-filter", type=click.Choice(["exact", "all"]), default="exact",
                     help="exact: sigma in {2, 3, rho}; all: every admissible sigma"),
        click.option("--max-n", type=int, default=None,
                     help="Largest n the Gram oracle runs on (default: config max_n)"),
        click.option("--workers", type=int, default=None,
                     help="Worker processes (default: config workers)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _output_path(config: Config, output: Optional[str]) -> Optional[str]:
    """Relative --output paths are placed under config.output_directory."""
    if output is None:
        return None
    return os.path.join(config.output_directory, output)


def _sweep_spec(config: Config, q_list: Sequence[int], k_range: Optional[Tuple[int, int]],
                sigma_filter: str, max_n: Optional[int], verify: bool,
                output_format: Optional[str] = None, inject_fault: bool = False) -> SweepSpec:
    return SweepSpec(
        q_list=list(q_list) or list(config.verify_q_list),
        k_range=k_range,
        sigma_filter=sigma_filter,
        output_format=output_format or config.default_format,
        verify=verify,
        max_n=config.max_n if max_n is None else max_n,
        inject_fault=inject_fault,
    )


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--log-level", default=None, help="Logging level (default: config log_level)")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """Hermitian hulls of GRS codes and the EAQMDS codes they give."""
    config = Config()
    if log_level:
        config = config.model_copy(update={"log_level": log_level})
    configure_logging(config)
    ctx.obj = config


@cli.command("params")
@click.argument("q", type=int)
@click.argument("lam", type=int)
@click.argument("tau", type=int)
@click.argument("rho", type=int)
@click.argument("sigma", type=int)
@click.argument("k", type=int)
@click.option("--with-oracle", is_flag=True, help="Also compute the Gram-matrix rank")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@click.option("--max-n", type=int, default=None,
              help="Largest n the Gram oracle runs on (default: config max_n)")
@click.pass_obj
def params_command(config: Config, q: int, lam: int, tau: int, rho: int, sigma: int, k: int,
                   with_oracle: bool, output_format: str, max_n: Optional[int]) -> int:
    """One family and one dimension k."""
    params = validate_params(q, lam, tau, rho, sigma)
    hull = HullCalculator(params).compute(k)
    record = eaqecc_params(params, k, hull.c, hull.exactness)
    max_n = config.max_n if max_n is None else max_n

    oracle_c = None
    if with_oracle:
        if params.n > max_n:
            logger.warning(f"Oracle skipped: n={params.n} exceeds --max-n {max_n}")
        else:
            _, oracle_c = code_family(params).hull_dimension(k)

    if output_format == "json":
        payload = {
            "record": record.to_json_dict(),
            "k": k,
            "L": params.L,
            "pi": params.pi,
            "T": [hull.T_first.D1, hull.T_first.D2],
            "P": [hull.P_first.D1, hull.P_first.D2],
            "P_case": classify_P_case(params),
            "F_count": hull.F_count,
            "exactness": hull.exactness.value,
            "oracle_c": oracle_c,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(f"family      {params.label()}")
        click.echo(f"derived     n={params.n} kappa1={params.kappa1} kappa2={params.kappa2} "
                   f"pi={params.pi} L={params.L}")
        click.echo(f"T           first={_format_point(hull.T_first)} "
                   f"second={_format_point(hull.T_first2)}")
        click.echo(f"P           first={_format_point(hull.P_first)} "
                   f"second={_format_point(hull.P_first2)} case={classify_P_case(params)}")
        click.echo(f"|F_<k|      {hull.F_count} ({hull.exactness.value})")
        if oracle_c is not None:
            click.echo(f"gram rank   {oracle_c}")
        click.echo(f"record      {record} {record.mds_status.value}")

    if oracle_c is not None and hull.exactness == Exactness.EXACT and oracle_c != hull.c:
        logger.error(f"Formula c={hull.c} differs from Gram rank {oracle_c}")
        return EXIT_MISMATCH
    return EXIT_OK


@cli.command("verify")
@family_selection
@click.option("--inject-fault", is_flag=True, hidden=True)
@click.pass_obj
def verify_command(config: Config, q_list: Tuple[int, ...], k_range: Optional[Tuple[int, int]],
                   sigma_filter: str, max_n: Optional[int], workers: Optional[int],
                   inject_fault: bool) -> int:
    """Closed-form c against the Gram-rank oracle for every admissible family."""
    spec = _sweep_spec(config, q_list, k_range, sigma_filter, max_n, verify=True,
                       inject_fault=inject_fault)
    tasks, empty = spec.tasks()
    results = ParameterSweep(config.workers if workers is None else workers).run(tasks)

    for q in empty:
        click.echo(f"q={q}: no admissible families")

    checked = sum(len(r.rows) for r in results if not r.skipped)
    skipped = [r for r in results if r.skipped]
    mismatches = [m for r in results for m in r.mismatches]

    for r in skipped:
        click.echo(f"skipped {r.params.label()} (n={r.params.n} > {spec.max_n})")
    for mismatch in mismatches:
        click.echo("MISMATCH " + " ".join(f"{key}={value}" for key, value in mismatch.items()))
    click.echo(f"verify: families={len(results) - len(skipped)} instances={checked} "
               f"skipped={len(skipped)} mismatches={len(mismatches)}")
    return EXIT_MISMATCH if mismatches else EXIT_OK


@cli.command("sweep")
@family_selection
@click.option("--with-oracle", is_flag=True, help="Add an oracle_c column")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None,
              help="csv or json (default: config default_format)")
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout")
@click.pass_obj
def sweep_command(config: Config, q_list: Tuple[int, ...], k_range: Optional[Tuple[int, int]],
                  sigma_filter: str, max_n: Optional[int], workers: Optional[int],
                  with_oracle: bool, output_format: Optional[str], output: Optional[str]) -> int:
    """Parameter rows for every admissible family of the given fields."""
    spec = _sweep_spec(config, q_list, k_range, sigma_filter, max_n, verify=with_oracle,
                       output_format=output_format)
    tasks, _ = spec.tasks()
    results = ParameterSweep(config.workers if workers is None else workers).run(tasks)

    rows = [row for r in results for row in r.rows]
    trailing = ["oracle_c"] if with_oracle else None
    frame = records_frame(rows, leading=FAMILY_COLUMNS, trailing=trailing)
    write_output(render(frame, spec.output_format), _output_path(config, output))

    mismatches = [m for r in results for m in r.mismatches]
    for mismatch in mismatches:
        logger.error(f"Mismatch: {mismatch}")
    return EXIT_MISMATCH if mismatches else EXIT_OK


@cli.command("table")
@click.argument("family", required=False, default=None)
@click.option("--params", "explicit", type=int, nargs=5, default=None,
              metavar="Q LAM TAU RHO SIGMA", help="Explicit family instead of an id")
@click.option("--k-range", type=K_RANGE, default=None, help="a..b, inclusive")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None,
              help="csv or json (default: config default_format)")
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of stdout")
@click.pass_obj
def table_command(config: Config, family: Optional[str], explicit: Optional[Tuple[int, ...]],
                  k_range: Optional[Tuple[int, int]], output_format: Optional[str],
                  output: Optional[str]) -> int:
    """Rows of one family (q11, q29, q83 or --params) over a k range."""
    output_format = output_format or config.default_format
    if explicit:
        params = validate_params(*explicit)
    elif family in FAMILIES:
        params = validate_params(*FAMILIES[family])
    else:
        raise DimensionOutOfRangeError(
            f"unknown family '{family}', expected one of {sorted(FAMILIES)} or --params")

    calculator = HullCalculator(params)
    rows = []
    for k in k_values(params, k_range or (1, max_exact_k(params)), strict=True):
        hull = calculator.compute(k)
        record = eaqecc_params(params, k, hull.c, hull.exactness)
        rows.append(record_row(record, k))

    leading = ["q"] if output_format == "json" else None
    write_output(render(records_frame(rows, leading=leading), output_format),
                 _output_path(config, output))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and map failures to exit codes."""
    try:
        code = cli.main(args=list(argv) if argv is not None else None,
                        prog_name="eaqmds", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_INVALID
    except click.exceptions.Abort:
        return EXIT_INVALID
    except HullToolkitError as e:
        assumption = getattr(e, "assumption", None)
        prefix = f"[{assumption}] " if assumption else ""
        click.echo(f"error: {prefix}{e}", err=True)
        return EXIT_INVALID
    except Exception as e:
        logger.error(f"Unexpected failure: {e}")
        raise
    return EXIT_OK if code is None else code
