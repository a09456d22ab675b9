"""Command-line interface for hypercert."""

from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click

from hypercert import __version__
from hypercert.cases import (
    CASE_M,
    DEFAULT_FOREST_BUDGET,
    DEFAULT_SUPPORT_BUDGET,
    CaseCandidate,
    Core,
    critical_names,
    enumerate_case_candidates,
    enumerate_tau_critical,
    erdos_gallai_check,
    figure_graphs,
    golden_diff,
    gyarfas_lehel_check,
    load_golden,
    recipe_diff,
    step1_report,
    step2_verify,
)
from hypercert.certificate import Certificate, mismatched_claims
from hypercert.dependencies import DependencyChecker
from hypercert.errors import HypercertError, Infeasible, OutOfRange, UsageError
from hypercert.figures import DEFAULT_RENDER_FORMAT, export_candidates
from hypercert.formats import format_triple_list, realization_to_json, write_text
from hypercert.graph import LoopGraph, graph_name
from hypercert.logging import get_logger, setup_logging
from hypercert.oracle import DEFAULT_MAX_SUBSETS, DEFAULT_WORKERS, search_configurations
from hypercert.realize import (
    PAIRINGS,
    Realization,
    Verdict,
    describe_system,
    extremal_construct,
    extremal_pairs,
    extremal_verify,
    forced_realization,
    triples_test,
    uniqueness_check,
    witness_holds,
)
from hypercert.utils import measure
from hypercert.validator import (
    CERTIFICATE_SUFFIXES,
    TRIPLE_SUFFIXES,
    FileValidator,
)
from hypercert.weights import order_bound, weighted_context

logger = get_logger(__name__)

SUPPORTED_M = (2, 3, 4)
# The reading of the extremal construction and the only bound-15 survivor
# named in the written argument; disagreement is reported as a finding.
DOCUMENTED_READING = "cyclic"
DOCUMENTED_SURVIVORS = ["C5"]

Runner = Callable[[Dict[str, Any], int], Certificate]


@dataclass(frozen=True)
class Settings:
    verbose: bool
    output: Optional[str]
    workers: int


def validate_environment() -> None:
    """Verify all required Python packages are installed.

    Raises:
        click.ClickException: If any dependency is missing
    """
    logger.debug("🔍 Checking dependencies...")
    is_satisfied, error = DependencyChecker().verify_all()
    if not is_satisfied:
        raise click.ClickException(error or "Unknown dependency error")


def validate_output(path: str, suffixes: Sequence[str] = CERTIFICATE_SUFFIXES) -> None:
    is_valid, error = FileValidator().validate_output_file(path, suffixes)
    if not is_valid:
        raise click.ClickException(error or "Invalid output file")


# Runners: each rebuilds its certificate from the recorded inputs alone.


def run_verify(inputs: Dict[str, Any], workers: int = DEFAULT_WORKERS) -> Certificate:
    """The order bound ``C(m+2, 2)`` through every route of the proof."""
    m = int(inputs["m"])
    if m not in SUPPORTED_M:
        raise OutOfRange(f"m must be one of {SUPPORTED_M}, got {m}")
    limit = comb(m + 2, 2)
    certificate = Certificate("verify", {"m": m})

    logger.info(f"🔄 Step 1: two-vertex covers at m={m}")
    step1 = step1_report(m)
    certificate.check("step1.within_limit", True, step1.bound <= limit)
    certificate.witness("step1", step1.to_dict())

    logger.info(f"🔄 Step 2: tau-critical graphs with tau={m} and tau={m + 1}")
    step2 = step2_verify(m)
    certificate.check(
        "step2.erdos_gallai", True, all(row.margin >= 0 for row in step2.above)
    )
    certificate.check(
        "step2.gyarfas_lehel", True, all(row.margin >= 0 for row in step2.equal)
    )
    certificate.witness("step2", step2.to_dict())

    routes = [step1.bound]
    routes += [row.value for row in step2.above]
    routes += [row.value for row in step2.equal]

    if m == CASE_M:
        routes.append(_verify_cases(certificate, step2.tight(), limit))

    logger.info(f"🔍 Routes give n <= {max(routes)}")
    certificate.check("order_bound", limit, max(routes))
    return certificate


def _verify_cases(
    certificate: Certificate, tight: Sequence[LoopGraph], limit: int
) -> int:
    """Candidates with ``tau = 3``; returns the bound they leave standing."""
    logger.info("🔄 Enumerating weighted candidates with tau=3")
    candidates = enumerate_case_candidates(CASE_M)
    table = [c.to_dict() for c in candidates]

    above = [c for c in candidates if c.bound > limit]
    certificate.check("candidates.above_limit", 1, len(above))
    standing = max((c.bound for c in candidates if c.bound <= limit), default=0)

    realized: List[Realization] = []
    rejected_all = True
    for candidate in above:
        logger.info(f"🔍 Triples test on {candidate.name} at n={candidate.bound}")
        try:
            realizations = forced_realization(candidate, candidate.bound)
        except Infeasible as e:
            certificate.witness(f"infeasible:{candidate.name}", e.witness)
            realizations = []
        passed = False
        realized.extend(realizations)
        for realization in realizations:
            verdict = triples_test(realization)
            certificate.witness(
                f"triples:{candidate.name}",
                {
                    "system": describe_system(realization.system),
                    "verdict": verdict.to_dict(),
                },
            )
            if verdict.verdict is Verdict.PASS:
                passed = True
                continue
            witness = verdict.witness or frozenset()
            certificate.check(
                f"triples.{candidate.name}.witness_size",
                realization.k + 1,
                len(witness),
            )
            certificate.check(
                f"triples.{candidate.name}.witness_forced",
                True,
                witness_holds(realization, witness),
            )
        # a rejected candidate still allows one vertex fewer
        standing = max(standing, candidate.bound if passed else candidate.bound - 1)
        rejected_all = rejected_all and not passed
    certificate.check("candidates.above_limit_rejected", True, rejected_all)

    logger.info(f"🔄 Realizations at n={limit}")
    sources = [
        (f"candidate:{c.name}", c.context()) for c in candidates if c.bound == limit
    ]
    sources += [
        (f"tight:{graph_name(g)}", weighted_context(g, CASE_M)) for g in tight
    ]
    report = uniqueness_check(sources, limit)
    realized.extend(entry.realization for entry in report.entries)
    certificate.check(
        "realizations.within_order_bound",
        True,
        all(r.within_order_bound for r in realized),
    )
    survivors = sorted(
        {
            entry.source.split(":", 1)[1]
            for entry in report.passing
            if entry.source.startswith("candidate:")
        }
    )
    certificate.check(
        "candidates.at_limit_passing", DOCUMENTED_SURVIVORS, survivors, finding=True
    )
    certificate.check(
        "uniqueness.passing_realizations", 1, len(report.passing), finding=True
    )
    certificate.check(
        "uniqueness.reading",
        DOCUMENTED_READING,
        report.unique_reading(),
        finding=True,
    )
    certificate.witness("uniqueness", [entry.to_dict() for entry in report.entries])
    certificate.witness("candidates", table)
    return standing


def run_extremal(inputs: Dict[str, Any], workers: int = DEFAULT_WORKERS) -> Certificate:
    """Order, clique number and maximum cliques of the extremal hypergraph."""
    pairing = inputs.get("pairing")
    private = bool(inputs.get("check_private_pairs", False))
    pairings = PAIRINGS if pairing is None else (pairing,)
    certificate = Certificate(
        "extremal", {"pairing": pairing, "check_private_pairs": private}
    )

    for name in pairings:
        logger.info(f"🔄 Building the extremal hypergraph ({name} pairing)")
        hypergraph, family = extremal_construct(name)
        pairs = extremal_pairs(name)
        report = extremal_verify(hypergraph, family, pairs if private else None)
        for check in report.checks:
            certificate.check(
                f"{name}.{check.name}", check.expected, check.computed, finding=True
            )
        certificate.witness(
            f"{name}.maximum_cliques",
            [
                sorted(str(v) for v in member)
                for member in report.maximum_cliques.sorted_members()
            ],
        )
        if private:
            certificate.check(
                f"{name}.pairs_private",
                True,
                all(entry.pair_is_private for entry in report.privacy),
                finding=True,
            )
            certificate.witness(
                f"{name}.privacy", [entry.to_dict() for entry in report.privacy]
            )
    return certificate


def run_oracle(inputs: Dict[str, Any], workers: int = DEFAULT_WORKERS) -> Certificate:
    """Exhaustive search that does not use any of the proof machinery."""
    n, m = int(inputs["n"]), int(inputs["m"])
    max_subsets = int(inputs.get("max_subsets", DEFAULT_MAX_SUBSETS))
    certificate = Certificate("oracle", {"n": n, "m": m, "max_subsets": max_subsets})
    limit = comb(m + 2, 2)

    logger.info(f"🔄 Searching every family of {n - m}-subsets of {n} vertices")
    survivors = search_configurations(
        n, m, max_subsets=max_subsets, workers=workers
    )
    logger.info(f"🔍 {len(survivors)} configurations up to isomorphism")

    if n > limit:
        certificate.check("survivors_above_limit", 0, len(survivors))
    elif n == limit:
        certificate.check(
            "tight_configuration_exists", True, bool(survivors), finding=True
        )
    else:
        certificate.check("search_completed", True, True)
    certificate.check(
        "within_order_bound", True, all(r.within_order_bound for r in survivors)
    )
    certificate.witness("survivor_count", len(survivors))
    if survivors:
        certificate.witness("configuration", realization_to_json(survivors[0]))
    return certificate


def run_enumerate_critical(
    inputs: Dict[str, Any], workers: int = DEFAULT_WORKERS
) -> Certificate:
    """Tau-critical graphs for one transversal number."""
    tau = int(inputs["tau"])
    certificate = Certificate("enumerate-critical", {"tau": tau})
    graphs = enumerate_tau_critical(tau, 2 * tau)
    names = critical_names(graphs)
    logger.info(f"🔍 {len(graphs)} tau-critical graphs with tau={tau}")
    logger.debug(", ".join(names))

    certificate.check(
        "erdos_gallai", True, all(erdos_gallai_check(g) for g in graphs)
    )
    certificate.check(
        "gyarfas_lehel", True, all(gyarfas_lehel_check(g) for g in graphs)
    )
    drawn = load_golden().get("tau_critical", {})
    if str(tau) in drawn:
        certificate.check("figure_match", sorted(drawn[str(tau)]), names)
    certificate.witness(
        "graphs",
        [
            {"name": graph_name(g), "order": g.order, "size": g.size}
            for g in graphs
        ],
    )
    return certificate


def run_candidates(
    inputs: Dict[str, Any],
    workers: int = DEFAULT_WORKERS,
    collected: Optional[List[CaseCandidate]] = None,
) -> Certificate:
    """Weighted candidates for ``m = 4``, diffed against recipes and figures."""
    m = int(inputs.get("m", CASE_M))
    golden_path = inputs.get("golden")
    support_budget = int(inputs.get("support_budget", DEFAULT_SUPPORT_BUDGET))
    forest_budget = int(inputs.get("forest_budget", DEFAULT_FOREST_BUDGET))
    certificate = Certificate(
        "candidates",
        {
            "m": m,
            "golden": golden_path,
            "support_budget": support_budget,
            "forest_budget": forest_budget,
        },
    )
    golden = load_golden(golden_path)

    for name, graph in figure_graphs().items():
        expected = golden.get("labels", {}).get(name)
        if expected is not None:
            certificate.check(
                f"figure_bounds.{name}",
                expected,
                order_bound(weighted_context(graph, m)),
            )

    logger.info("🔄 Enumerating weighted candidates")
    candidates = enumerate_case_candidates(m, support_budget, forest_budget)
    if collected is not None:
        collected.extend(candidates)
    limit = comb(m + 2, 2)
    certificate.check(
        "candidates.above_limit", 1, sum(1 for c in candidates if c.bound > limit)
    )
    certificate.check(
        "candidates.acyclic_max_bound",
        limit,
        max(c.bound for c in candidates if c.core is Core.ACYCLIC),
    )

    logger.info("🔄 Comparing with the hand-made case recipes")
    diffs = recipe_diff(candidates, m=m)
    for diff in diffs:
        if diff.produced or diff.missing:
            certificate.check(
                f"recipe.{diff.core.value}.agrees", True, diff.agrees, finding=True
            )
    for entry in golden_diff(diffs, golden):
        certificate.check(
            f"golden.{entry.core}",
            list(entry.expected),
            list(entry.computed),
            finding=True,
        )

    certificate.witness("candidates", [c.to_dict() for c in candidates])
    certificate.witness("recipes", [d.to_dict() for d in diffs])
    return certificate


def run_check_cert(
    inputs: Dict[str, Any], workers: int = DEFAULT_WORKERS
) -> Certificate:
    """Recompute a stored certificate and compare its claims."""
    path = str(inputs["path"])
    certificate = Certificate("check-cert", {"path": path})
    stored = Certificate.load(path)
    runner = RUNNERS.get(stored.command)
    if runner is None or stored.command == "check-cert":
        raise UsageError(f"Cannot re-run command {stored.command!r}")

    if stored.toolkit_version != __version__:
        logger.warning(
            f"⚠️  Certificate was written by version {stored.toolkit_version}, "
            f"this is {__version__}"
        )
    logger.info(f"🔄 Re-running {stored.command} with {stored.inputs}")
    recomputed = runner(stored.inputs, workers)
    certificate.check("claims_digest", stored.digest(), recomputed.digest())
    certificate.check("claims", [], mismatched_claims(stored, recomputed))
    return certificate


RUNNERS: Dict[str, Runner] = {
    "verify": run_verify,
    "extremal": run_extremal,
    "oracle": run_oracle,
    "enumerate-critical": run_enumerate_critical,
    "candidates": run_candidates,
    "check-cert": run_check_cert,
}


def execute(
    settings: Settings, command: str, inputs: Dict[str, Any], runner: Runner
) -> Tuple[Certificate, Path]:
    """Run one command, write its certificate and set the exit status.

    Raises:
        click.UsageError: Arguments outside the supported range
        click.ClickException: Some claim failed (the certificate is still written)
    """
    validate_environment()
    output = settings.output or f"{command}.cert.json"
    validate_output(output)

    try:
        with measure() as usage:
            try:
                certificate = runner(inputs, settings.workers)
            except UsageError as e:
                raise click.UsageError(str(e)) from e
            except HypercertError as e:
                logger.error(f"❌ {type(e).__name__}: {e}")
                certificate = Certificate(command, inputs)
                certificate.check("pipeline_completed", True, False)
                certificate.witness(type(e).__name__, e.witness)
    except click.ClickException:
        raise
    except Exception as e:
        logger.error(f"❌ An unexpected error occurred: {e}")
        raise click.ClickException(str(e)) from e

    certificate.runtime_ms = usage.runtime_ms
    certificate.rss_mb = usage.rss_mb
    path = certificate.write(output)

    failed, findings = certificate.failed, certificate.findings
    if findings:
        logger.info(f"⚠️  {len(findings)} findings recorded")
    if failed:
        raise click.ClickException(
            f"{len(failed)} claims failed; certificate written to {path}"
        )
    logger.info(f"✨ {len(certificate.claims)} claims checked; certificate: {path}")
    return certificate, path


@click.group()
@click.option("--verbose", is_flag=True, default=False, help="Enable verbose logging")
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Certificate path (default: <command>.cert.json)",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=DEFAULT_WORKERS,
    help=f"Worker processes for the oracle (default: {DEFAULT_WORKERS})",
)
@click.pass_context
def main(
    ctx: click.Context, verbose: bool, output: Optional[str], workers: int
) -> None:
    """Exact, certificate-producing checks of the clique-family order bound.

    Examples:
        Certify the bound for m = 4:
        $ hypercert verify --m 4

        Build the order-15 hypergraph and export its triples:
        $ hypercert extremal --export extremal.tri

        Re-check a stored certificate:
        $ hypercert check-cert verify.cert.json
    """
    setup_logging(verbose)
    ctx.obj = Settings(verbose=verbose, output=output, workers=workers)


@main.command()
@click.option("--m", "m", type=int, required=True, help="Deficiency m (2, 3 or 4)")
@click.pass_obj
def verify(settings: Settings, m: int) -> None:
    """Certify n <= C(m+2, 2) through the whole proof pipeline."""
    execute(settings, "verify", {"m": m}, run_verify)


@main.command()
@click.option(
    "--export",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the triples of the hypergraph to this file",
)
@click.option(
    "--check-private-pairs",
    is_flag=True,
    default=False,
    help="Report which pairs are private to their clique",
)
@click.option(
    "--pairing",
    type=click.Choice(PAIRINGS),
    default=None,
    help="Check one reading of the pair indices (default: both)",
)
@click.pass_obj
def extremal(
    settings: Settings,
    export: Optional[str],
    check_private_pairs: bool,
    pairing: Optional[str],
) -> None:
    """Build and verify the extremal hypergraph of order 15."""
    if export is not None:
        validate_output(export, TRIPLE_SUFFIXES)
    inputs = {"pairing": pairing, "check_private_pairs": check_private_pairs}
    execute(settings, "extremal", inputs, run_extremal)
    if export is not None:
        hypergraph, _ = extremal_construct(pairing or DOCUMENTED_READING)
        write_text(export, format_triple_list(hypergraph))
        logger.info(f"✨ Triples written to {export}")


@main.command()
@click.option("--n", "n", type=int, required=True, help="Number of vertices")
@click.option("--m", "m", type=int, required=True, help="Deficiency m")
@click.option(
    "--max-subsets",
    type=int,
    default=DEFAULT_MAX_SUBSETS,
    help=f"Guard on C(n, n-m) (default: {DEFAULT_MAX_SUBSETS})",
)
@click.pass_obj
def oracle(settings: Settings, n: int, m: int, max_subsets: int) -> None:
    """Search all clique families on n vertices independently of the proof."""
    execute(
        settings, "oracle", {"n": n, "m": m, "max_subsets": max_subsets}, run_oracle
    )


@main.command("enumerate-critical")
@click.option("--tau", type=int, required=True, help="Transversal number")
@click.pass_obj
def enumerate_critical(settings: Settings, tau: int) -> None:
    """List tau-critical graphs up to isomorphism."""
    execute(settings, "enumerate-critical", {"tau": tau}, run_enumerate_critical)


@main.command()
@click.option("--m", "m", type=int, default=CASE_M, help="Deficiency (only 4)")
@click.option(
    "--emit-dot",
    type=click.Path(file_okay=False),
    default=None,
    help="Write one DOT file per candidate into this directory",
)
@click.option(
    "--golden",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Golden figure labels (default: the packaged file)",
)
@click.option(
    "--render",
    type=str,
    default=None,
    help=f"Render DOT files with Graphviz, e.g. {DEFAULT_RENDER_FORMAT} or png",
)
@click.pass_obj
def candidates(
    settings: Settings,
    m: int,
    emit_dot: Optional[str],
    golden: Optional[str],
    render: Optional[str],
) -> None:
    """Enumerate the weighted candidates and diff them against the figures."""
    if emit_dot is not None:
        is_valid, error = FileValidator().validate_output_directory(emit_dot)
        if not is_valid:
            raise click.ClickException(error or "Invalid output directory")

    collected: List[CaseCandidate] = []
    inputs = {
        "m": m,
        "golden": golden,
        "support_budget": DEFAULT_SUPPORT_BUDGET,
        "forest_budget": DEFAULT_FOREST_BUDGET,
    }
    try:
        execute(
            settings,
            "candidates",
            inputs,
            lambda i, w: run_candidates(i, w, collected),
        )
    finally:
        if emit_dot is not None and collected:
            written = export_candidates(collected, Path(emit_dot), render)
            logger.info(f"✨ {len(written)} DOT files written to {emit_dot}")


@main.command("check-cert")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def check_cert(settings: Settings, path: str) -> None:
    """Recompute every claim of a certificate and compare."""
    is_valid, error = FileValidator().validate_input_file(path, CERTIFICATE_SUFFIXES)
    if not is_valid:
        raise click.ClickException(error or "Invalid certificate file")
    execute(settings, "check-cert", {"path": path}, run_check_cert)


if __name__ == "__main__":
    main()
