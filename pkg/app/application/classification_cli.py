# application/classification_cli.py
"""
Command-line front end: classify structure constants, reproduce the family
classification, list and sample families, export the golden file.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import click
import requests

from families import Catalog, UnknownFamily, catalog
from geometry import foliation_flags
from hermitian import classify
from liealg import StructureConstants, UnknownParameter, jacobi_residuals_appendix
from scalars import DivisionByZero, ParseError, is_zero, render
from services.golden_file import diff_catalog, load_golden, write_export
from services.verification_runner import VerificationRunner
from utils.input_fetcher import InputFetcher
from utils.parameter_sampler import ParameterSampler
from verification_service import VerificationService

try:
    from logging_config import setup_service_logging
    CENTRALIZED_LOGGING = True
except ImportError:
    CENTRALIZED_LOGGING = False

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

REPOSITORY_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


@dataclass
class RunConfig:
    command: str
    input_path: Optional[str] = None
    family_id: Optional[int] = None
    sample_count: int = 100
    seed: int = 0
    format: str = "json"
    out_path: Optional[str] = None
    golden_path: Optional[str] = None
    golden_explicit: bool = False
    samples: int = 1000
    workers: Optional[int] = None


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        logging.warning(f"[CLI] Ignoring non-integer {name}={os.getenv(name)!r}")
        return default


def _default_seed() -> int:
    return _env_int("LIEALG_SEED", 0)


def _default_samples() -> int:
    return _env_int("LIEALG_SAMPLES", 1000)


def _emit(config: RunConfig, text: str) -> None:
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logging.info(f"[CLI] Report written to {config.out_path}")
    else:
        click.echo(text, nl=False)


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _fail_usage(message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    raise click.exceptions.Exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# Command implementations (pure: config in, report out)
# ---------------------------------------------------------------------------

def cmd_classify(config: RunConfig, fetcher: Optional[InputFetcher] = None) -> Dict[str, Any]:
    """Report for one structure-constant input: Jacobi residuals, foliation flags, classes."""
    payload = (fetcher or InputFetcher()).fetch(config.input_path)
    sc = StructureConstants.from_json(payload)
    residuals = jacobi_residuals_appendix(sc)
    result = classify(sc)
    return {
        "input": sc.to_json(),
        "is_lie_algebra": all(is_zero(value) for value in residuals),
        "jacobi_residuals": [{"index": index, "value": render(value)}
                             for index, value in enumerate(residuals, start=1)],
        "failing_residuals": [index for index, value in enumerate(residuals, start=1) if not is_zero(value)],
        "foliation": foliation_flags(sc).to_json(),
        "classification": {
            "almost_kahler": result.almost_kahler,
            "integrable": result.integrable,
            "kahler": result.kahler,
        },
        "witnesses": {name: render(value) for name, value in result.witnesses.items()},
    }


def _resolve_golden(config: RunConfig) -> Optional[str]:
    path = config.golden_path
    if path is None:
        return None
    candidates = [path] if os.path.isabs(path) else [path, os.path.join(REPOSITORY_ROOT, path)]
    for candidate in candidates:
        if os.path.exists(candidate):
            return candidate
    if config.golden_explicit:
        _fail_usage(f"golden file not found: {path}")
    logging.warning(f"[CLI] Golden file {path} not found; skipping golden comparison")
    return None


def cmd_verify_paper(config: RunConfig, source: Catalog) -> Tuple[Dict[str, Any], int]:
    """Verify every family and claim, diff the catalog against the golden file."""
    golden_path = _resolve_golden(config)
    golden = None
    if golden_path:
        try:
            golden = load_golden(golden_path)
        except (OSError, ValueError) as exc:
            _fail_usage(f"unreadable golden file {golden_path}: {exc}")

    service = VerificationService(source, samples=config.samples, seed=config.seed)
    family_reports, claim_reports = VerificationRunner(service, config.workers).run()
    differences: List[str] = diff_catalog(source, golden) if golden is not None else []

    failing = [[report.family_id, report.cls or "family"]
               for report in family_reports + claim_reports if not report.ok]
    if differences:
        failing.append([None, "golden"])
    report = {
        "ok": not failing,
        "seed": config.seed,
        "samples": config.samples,
        "families": [report.to_json() for report in family_reports],
        "claims": [report.to_json() for report in claim_reports],
        "golden": {"path": golden_path, "differences": differences},
        "failures": failing,
    }
    return report, (EXIT_OK if not failing else EXIT_VERIFICATION_FAILED)


def _verify_text(report: Dict[str, Any]) -> str:
    lines = [f"{'family':<8}{'class':<7}{'outcome':<12}{'dimension':<11}status"]
    for item in report["families"]:
        status = "ok" if item["ok"] else "FAILED"
        lines.append(f"g{item['family_id']:<7}{'-':<7}{'family':<12}{item['dimension']!s:<11}{status}")
    for item in report["claims"]:
        status = "ok" if item["ok"] else "FAILED"
        dimension = "-" if item["dimension"] is None else str(item["dimension"])
        if len(item["branches"]) > 1:
            dimension = "/".join(f"{branch}{value}" for branch, value in item["branches"].items())
        lines.append(f"g{item['family_id']:<7}{item['class']:<7}{item['outcome']:<12}{dimension:<11}{status}")
    for difference in report["golden"]["differences"]:
        lines.append(f"golden: {difference}")
    lines.append("verification " + ("passed" if report["ok"] else "FAILED"))
    return "\n".join(lines) + "\n"


def cmd_list_families(source: Catalog) -> List[Dict[str, Any]]:
    listing = []
    for family in source.families:
        listing.append({
            "id": family.id,
            "case": family.case_label,
            "params": list(family.param_names),
            "prose_tag": family.prose_tag,
            "claims": {claim.cls: {"outcome": claim.outcome, "dimension": claim.dimension(family)}
                       for claim in source.claims_for(family.id)},
        })
    return listing


def cmd_sample(config: RunConfig, source: Catalog) -> Dict[str, Any]:
    """Seeded in-domain points of one family with their classification."""
    family = source.family(config.family_id)
    sampler = ParameterSampler(seed=config.seed)
    points = []
    counts = {"is_lie_algebra": 0, "almost_kahler": 0, "integrable": 0, "kahler": 0}
    for _ in range(config.sample_count):
        params, sc = sampler.family_sample(family)
        result = classify(sc)
        flags = {
            "is_lie_algebra": all(is_zero(value) for value in jacobi_residuals_appendix(sc)),
            "almost_kahler": result.almost_kahler,
            "integrable": result.integrable,
            "kahler": result.kahler,
        }
        for key, value in flags.items():
            counts[key] += int(value)
        points.append({"params": {name: render(value) for name, value in params.items()}, **flags})
    return {
        "family": family.id,
        "seed": config.seed,
        "count": config.sample_count,
        "summary": counts,
        "points": points,
    }


def _sample_text(report: Dict[str, Any]) -> str:
    summary = report["summary"]
    count = report["count"]
    lines = [f"g{report['family']}: {count} samples (seed {report['seed']})"]
    for key in ("is_lie_algebra", "almost_kahler", "integrable", "kahler"):
        lines.append(f"  {key:<15}{summary[key]}/{count}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# click wiring
# ---------------------------------------------------------------------------

def _catalog(ctx: click.Context) -> Catalog:
    return ctx.obj.get("catalog") or catalog()


def _log(ctx: click.Context):
    return ctx.obj.get("logger")


@click.group()
@click.pass_context
def cli(ctx: click.Context):
    """Classifier for four-dimensional metric Lie algebras with a conformal foliation."""
    ctx.ensure_object(dict)
    if CENTRALIZED_LOGGING and "logger" not in ctx.obj:
        ctx.obj["logger"] = setup_service_logging()
    elif not CENTRALIZED_LOGGING:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s [%(name)s] %(message)s")


@cli.command("classify")
@click.option("--input", "input_path", required=True, help="JSON file or http(s) URL with structure constants.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), help="Write the report here.")
@click.pass_context
def classify_command(ctx: click.Context, input_path: str, out_path: Optional[str]):
    """Classify one set of structure constants."""
    config = RunConfig(command="classify", input_path=input_path, out_path=out_path)
    logger = _log(ctx)
    if logger:
        logger.log_action("Classifying structure constants", input_path)
    try:
        report = cmd_classify(config)
    except ParseError as exc:
        _fail_usage(f"cannot parse scalar: {exc.message} at offset {exc.position}")
    except (UnknownParameter, DivisionByZero, FileNotFoundError, ValueError, requests.RequestException) as exc:
        _fail_usage(str(exc))
    except Exception as exc:
        if logger:
            logger.log_error("Classification failed", exc)
        raise
    _emit(config, _dump(report))
    if logger:
        logger.log_success("Classification complete", f"is_lie_algebra={report['is_lie_algebra']}")


@cli.command("verify-paper")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True))
@click.option("--samples", type=click.IntRange(min=1), default=_default_samples,
              help="Random trials per claim (env LIEALG_SAMPLES).")
@click.option("--seed", type=click.IntRange(min=0), default=_default_seed, help="Base seed (env LIEALG_SEED).")
@click.option("--golden", "golden_path", default=None, help="Golden families.json to diff against.")
@click.option("--no-golden", is_flag=True, help="Skip the golden-file comparison.")
@click.option("--workers", type=click.IntRange(min=1), default=None)
@click.pass_context
def verify_paper_command(ctx: click.Context, fmt: str, out_path: Optional[str], samples: int, seed: int,
                         golden_path: Optional[str], no_golden: bool, workers: Optional[int]):
    """Verify all 20 families and their 60 class claims."""
    config = RunConfig(
        command="verify-paper",
        format=fmt,
        out_path=out_path,
        samples=samples,
        seed=seed,
        golden_path=None if no_golden else (golden_path or os.getenv("LIEALG_GOLDEN_PATH", "families.json")),
        golden_explicit=golden_path is not None,
        workers=workers,
    )
    logger = _log(ctx)
    if logger:
        logger.log_step("Verifying catalog", f"samples={samples}, seed={seed}")
    try:
        report, code = cmd_verify_paper(config, _catalog(ctx))
    except click.exceptions.Exit:
        raise
    except Exception as exc:
        if logger:
            logger.log_error("Verification aborted", exc)
        raise
    _emit(config, _dump(report) if fmt == "json" else _verify_text(report))
    if code != EXIT_OK:
        for family_id, cls in report["failures"]:
            label = "golden file" if family_id is None else f"g{family_id} {cls}"
            click.echo(f"FAILED {label}", err=True)
        if logger:
            logger.log_warning(f"{len(report['failures'])} verification failure(s)")
        ctx.exit(code)
    if logger:
        logger.log_success("Catalog verified", f"{len(report['families'])} families, {len(report['claims'])} claims")


@cli.command("list-families")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.pass_context
def list_families_command(ctx: click.Context, fmt: str):
    """List the catalog."""
    listing = cmd_list_families(_catalog(ctx))
    if fmt == "json":
        click.echo(_dump(listing), nl=False)
        return
    for item in listing:
        outcomes = " ".join(f"{cls}:{claim['outcome']}" for cls, claim in item["claims"].items())
        click.echo(f"g{item['id']:<3} case {item['case']}  ({', '.join(item['params'])})  "
                   f"[{item['prose_tag']}]  {outcomes}")


@cli.command("sample")
@click.option("--family", "family_id", type=int, required=True)
@click.option("-n", "count", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=_default_seed)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True))
@click.pass_context
def sample_command(ctx: click.Context, family_id: int, count: int, seed: int, fmt: str, out_path: Optional[str]):
    """Sample in-domain points of one family."""
    config = RunConfig(command="sample", family_id=family_id, sample_count=count, seed=seed,
                       format=fmt, out_path=out_path)
    try:
        report = cmd_sample(config, _catalog(ctx))
    except UnknownFamily as exc:
        _fail_usage(str(exc))
    _emit(config, _dump(report) if fmt == "json" else _sample_text(report))


@cli.command("export-families")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True))
@click.pass_context
def export_families_command(ctx: click.Context, out_path: Optional[str]):
    """Export the catalog in the golden-file layout."""
    text = write_export(_catalog(ctx), out_path)
    if not out_path:
        click.echo(text, nl=False)
