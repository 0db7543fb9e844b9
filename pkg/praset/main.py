"""
praset - command-line entry point.

Commands:
    solve    answer sets and preferred answer sets of a program file
    explain  derivations, blocking verdicts and attack chains for one answer set
    check    principle checks over a file, a corpus directory or random programs

Results go to stdout and are byte-identical for identical inputs; logs go
to stderr.
"""

import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Tuple

import click
import psutil

from praset import __version__
from praset.attacks.solver import PreferenceSolver
from praset.config.app_config import AppConfig, load_app_config
from praset.error_handling import EXIT_INPUT, EXIT_PRINCIPLE, error_handler
from praset.generator import generate_program
from praset.lang.parser import parse_program
from praset.lang.syntax import PrioritizedProgram
from praset.principles import PrincipleChecker, PrincipleReport
from praset.report import (
    attack_graph,
    build_run_report,
    explain as explain_answer_set,
    render_text,
    select_answer_set,
    to_dot,
)
from praset.utils.config import ConfigValidationError
from praset.utils.logger import logger

Job = Tuple[str, PrioritizedProgram]


def _read_program(path: str) -> PrioritizedProgram:
    text = Path(path).read_text(encoding="utf-8")
    program = parse_program(text)
    logger.info(f"parsed {len(program)} rules from {path}")
    return program


@click.group()
@click.version_option(__version__, prog_name="praset")
@click.option("--log-level", default=None, help="Override the configured log level.")
@click.pass_context
def cli(ctx, log_level):
    """Preferred answer sets of prioritized extended logic programs."""
    try:
        config = load_app_config()
    except ConfigValidationError as e:
        click.echo(f"error: CONFIG_ERROR: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    logger.configure(log_level or config.log_level)
    ctx.obj = config


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON run report.")
@click.option("--total", is_flag=True, help="Show S- as well as S+.")
@click.option("--widen", is_flag=True, help="Test every sufficient generating set.")
@click.option("--timing", is_flag=True, help="Add wall times per phase and memory use.")
@click.pass_obj
@error_handler
def solve(config: AppConfig, path, as_json, total, widen, timing):
    """Compute the answer sets and preferred answer sets of PATH."""
    started = time.perf_counter()
    phases = {}
    program = _read_program(path)
    phases["parse"] = time.perf_counter()
    solver = PreferenceSolver(program, config.structure_limit, widen)
    phases.update(solver.warm())

    measured = None
    if timing:
        measured, previous = {}, started
        for phase, stamp in phases.items():
            measured[f"{phase}_s"] = round(stamp - previous, 4)
            previous = stamp
        measured["rss_bytes"] = psutil.Process().memory_info().rss

    report = build_run_report(solver, total=total, timing=measured)
    click.echo(report.to_json() if as_json else render_text(report))


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--as", "selector", required=True, help='Answer set by index ("2") or literals ("a,-b").')
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False), help="Write the attack graph as DOT.")
@click.option("--widen", is_flag=True, help="Test every sufficient generating set.")
@click.pass_obj
@error_handler
def explain(config: AppConfig, path, selector, dot_path, widen):
    """Explain why an answer set of PATH is or is not preferred."""
    program = _read_program(path)
    solver = PreferenceSolver(program, config.structure_limit, widen)
    answer_set = select_answer_set(solver, selector)
    click.echo(explain_answer_set(solver, answer_set))
    if dot_path:
        Path(dot_path).write_text(to_dot(attack_graph(solver)), encoding="utf-8")
        logger.info(f"attack graph written to {dot_path}")


def _collect_jobs(config: AppConfig, path: Optional[str], corpus: Optional[str],
                  random_count: Optional[int], seed: int, atoms: int, out: Path) -> List[Job]:
    if path:
        return [(Path(path).name, _read_program(path))]
    if corpus:
        files = sorted(Path(corpus).glob("*.lp"))
        return [(f.name, _read_program(str(f))) for f in files]

    rng = random.Random(seed)
    out.mkdir(parents=True, exist_ok=True)
    jobs = []
    for i in range(1, random_count + 1):
        program = generate_program(
            rng, atoms, config.max_rules, config.max_body, config.preference_density
        )
        name = f"random-{seed}-{i:04d}.lp"
        (out / name).write_text(program.render(), encoding="utf-8")
        jobs.append((name, program))
    return jobs


@cli.command()
@click.argument("path", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--corpus", type=click.Path(exists=True, file_okay=False), help="Directory of .lp files.")
@click.option("--random", "random_count", type=click.IntRange(min=1), help="Number of random programs.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the random programs.")
@click.option("--atoms", type=click.IntRange(1, 26), default=6, show_default=True,
              help="Atoms per random program (rules have at most 3 body literals, preferences are acyclic).")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON reports.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None,
              help="Directory for random programs and failure witnesses.")
@click.option("--widen", is_flag=True, help="Test every sufficient generating set.")
@click.option("--diagnose-ii", is_flag=True, help="Also report where principle II does not hold.")
@click.pass_obj
@error_handler
def check(config: AppConfig, path, corpus, random_count, seed, atoms, as_json, workers, out_dir,
          widen, diagnose_ii):
    """Check principles I, III, IV and preferred ⊆ answer sets; exit 4 on any failure."""
    if sum(x is not None for x in (path, corpus, random_count)) != 1:
        raise click.UsageError("give exactly one of PATH, --corpus or --random")
    out = Path(out_dir or config.output_dir)
    jobs = _collect_jobs(config, path, corpus, random_count, seed, atoms, out)

    def run(job: Job) -> List[PrincipleReport]:
        name, program = job
        solver = PreferenceSolver(program, config.structure_limit, widen)
        return PrincipleChecker(program, name, solver).check_all(diagnose_ii)

    with ThreadPoolExecutor(max_workers=workers or config.workers) as pool:
        results = list(pool.map(run, jobs))

    reports = [r for batch in results for r in batch]
    failures = [r for r in reports if r.failed]
    if failures:
        out.mkdir(parents=True, exist_ok=True)
        for report in failures:
            witness = out / f"{report.program}.principle-{report.principle.value}.json"
            witness.write_text(json.dumps(report.to_dict(), indent=2, sort_keys=True), encoding="utf-8")

    if as_json:
        click.echo(json.dumps({
            "schema": 1,
            "programs": len(jobs),
            "failures": len(failures),
            "reports": [r.to_dict() for r in reports],
        }, indent=2, sort_keys=True))
    else:
        for report in reports:
            click.echo(report.render())
        click.echo(f"{len(jobs)} programs, {len(failures)} failures")

    if failures:
        logger.error(f"{len(failures)} principle failures")
        raise SystemExit(EXIT_PRINCIPLE)


if __name__ == '__main__':
    cli()
