from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.markup import escape

from common.config import get_settings, override_settings
from common.errors import CounterexampleError, SpikesError
from common.logger import configure_logging, get_logger
from common.progress import add_task, progress_manager, update_task
from construct import build_spike, lift_step, quotient_step, tip_extension, untip, write_trace
from core import Matroid, contract, delete, dual, mask_of, read_matroid, write_matroid
from corpus import Seed, load_seed
from spikes import (
    PairPartition,
    SpikeCertificate,
    has_property,
    read_certificate,
    recognize_spike,
    run_verification_suite,
    spike_oracle,
    write_certificate,
)

logger = get_logger("spikes.cli")

# Reports go to stdout, everything else to stderr
err_console = Console(stderr=True)
app = typer.Typer(
    name="spikes",
    help="Build, recognize and verify (s,t)-spike matroids.",
    add_completion=False,
    rich_markup_mode="rich",
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class TransformOp(str, Enum):
    DUAL = "dual"
    DELETE = "delete"
    CONTRACT = "contract"
    QUOTIENT = "quotient"
    LIFT = "lift"
    UNTIP = "untip"
    TIP = "tip"


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING, ERROR"),
    cap: Optional[int] = typer.Option(None, "--cap", help="Largest ground set a rank table may hold"),
):
    """Spike matroid toolkit."""
    changes = {}
    if log_level is not None:
        changes["log_level"] = log_level
    if cap is not None:
        changes["cap"] = cap
    if changes:
        try:
            settings = override_settings(**changes)
        except ValueError as exc:
            _fail(str(exc))
        configure_logging(settings.log_level)


def _fail(message: str, code: int = EXIT_USAGE) -> None:
    err_console.print(f"[red]error:[/red] {escape(message)}")
    raise typer.Exit(code)


@contextmanager
def _cli_errors() -> Iterator[None]:
    """Map library errors onto exit codes."""
    try:
        yield
    except CounterexampleError as exc:
        _fail(str(exc), EXIT_NEGATIVE)
    except (SpikesError, OSError) as exc:
        logger.debug("Command failed", error=str(exc))
        _fail(str(exc))


def _load(path: Optional[Path], seed: Optional[str]) -> Seed:
    if (path is None) == (seed is None):
        _fail("give exactly one of a matroid file or --seed-corpus")
    if seed is not None:
        return load_seed(seed)
    return Seed(read_matroid(path))


def _certificate(seed: Seed, cert_path: Optional[Path], required: bool = True) -> Optional[SpikeCertificate]:
    if cert_path is not None:
        return read_certificate(cert_path)
    if seed.certificate is None and required:
        _fail("this operation needs a certificate (--cert)")
    return seed.certificate


def _require_dimensions(M: Matroid, cert: SpikeCertificate) -> None:
    if cert.partition.covered >> M.n or 2 * cert.order != M.n:
        _fail(f"certificate with {cert.order} arms does not fit a matroid on {M.n} elements")


@app.command("build")
def cmd_build(
    s: int = typer.Option(..., "--s", help="Every s arms form a circuit"),
    t: int = typer.Option(..., "--t", help="Every t arms form a cocircuit"),
    m: int = typer.Option(..., "--m", help="Order (number of arms)"),
    out: Path = typer.Option(Path("spike"), "-o", "--out", help="Output prefix"),
):
    """Build an (s,t)-spike of order m and write .mtx, .cert and .trace files."""
    with _cli_errors():
        with progress_manager.progress_context():
            M, cert, trace = build_spike(s, t, m)
        written = [
            write_matroid(M, out.with_suffix(".mtx")),
            write_certificate(cert, out.with_suffix(".cert")),
            write_trace(trace, out.with_suffix(".trace")),
        ]
    typer.echo(f"spike s={s} t={t} m={m} n={M.n} rank={M.rank}")
    for path in written:
        typer.echo(f"wrote={path}")


@app.command("check")
def cmd_check(
    path: Optional[Path] = typer.Argument(None, help="Matroid file in matroid v1 format"),
    s: int = typer.Option(..., "--s"),
    u: int = typer.Option(..., "--u"),
    t: int = typer.Option(..., "--t"),
    v: int = typer.Option(..., "--v"),
    seed: Optional[str] = typer.Option(None, "--seed-corpus", help="Built-in instance instead of a file"),
):
    """Check the (s,u,t,v)-property."""
    with _cli_errors():
        M = _load(path, seed).matroid
        report = has_property(M, s, u, t, v)
    typer.echo(report.to_line())
    raise typer.Exit(EXIT_OK if report.holds else EXIT_NEGATIVE)


@app.command("recognize")
def cmd_recognize(
    path: Optional[Path] = typer.Argument(None, help="Matroid file in matroid v1 format"),
    s: int = typer.Option(..., "--s"),
    t: int = typer.Option(..., "--t"),
    seed: Optional[str] = typer.Option(None, "--seed-corpus", help="Built-in instance instead of a file"),
    out: Optional[Path] = typer.Option(None, "-o", "--out", help="Write the certificate here"),
):
    """Search for an (s,t)-spike certificate."""
    with _cli_errors():
        M = _load(path, seed).matroid
        cert = recognize_spike(M, s, t)
        if cert is not None and out is not None:
            write_certificate(cert, out.with_suffix(".cert"))
    if cert is None:
        typer.echo("spike=none")
        raise typer.Exit(EXIT_NEGATIVE)
    typer.echo(cert.to_text(), nl=False)


@app.command("verify")
def cmd_verify(
    path: Optional[Path] = typer.Argument(None, help="Matroid file in matroid v1 format"),
    cert_path: Optional[Path] = typer.Option(None, "--cert", help="Certificate file"),
    seed: Optional[str] = typer.Option(None, "--seed-corpus", help="Built-in instance instead of a file"),
):
    """Run every structural check a certified spike must pass."""
    with _cli_errors():
        loaded = _load(path, seed)
        cert = _certificate(loaded, cert_path)
        _require_dimensions(loaded.matroid, cert)
        with progress_manager.progress_context():
            task = add_task("Verifying spike structure")
            report = run_verification_suite(loaded.matroid, cert)
            update_task(task, description="Verified")
    typer.echo(report.to_text(), nl=False)
    raise typer.Exit(EXIT_OK if report.passed else EXIT_NEGATIVE)


def _transport(cert: SpikeCertificate, index_map: dict[int, int], n: int) -> Optional[SpikeCertificate]:
    """Carry arms that survive whole; None unless they cover the minor."""
    arms = [pair for pair in cert.partition.index_pairs() if all(i in index_map for i in pair)]
    moved = PairPartition.from_indices((index_map[a], index_map[b]) for a, b in arms)
    if moved.covered != (1 << n) - 1 or not moved.pairs:
        return None
    return SpikeCertificate(s=cert.s, t=cert.t, partition=moved)


@app.command("transform")
def cmd_transform(
    path: Optional[Path] = typer.Argument(None, help="Matroid file in matroid v1 format"),
    op: TransformOp = typer.Option(..., "--op"),
    elements: str = typer.Option("", "--elements", help="Space separated indices for delete/contract"),
    cert_path: Optional[Path] = typer.Option(None, "--cert", help="Certificate file"),
    seed: Optional[str] = typer.Option(None, "--seed-corpus", help="Built-in instance instead of a file"),
    out: Path = typer.Option(Path("transformed"), "-o", "--out", help="Output prefix"),
):
    """Apply dual, delete, contract, quotient, lift, untip or tip."""
    with _cli_errors():
        loaded = _load(path, seed)
        M = loaded.matroid
        needs_cert = op in (TransformOp.QUOTIENT, TransformOp.LIFT, TransformOp.UNTIP, TransformOp.TIP)
        cert = _certificate(loaded, cert_path, required=needs_cert)
        if cert is not None:
            _require_dimensions(M, cert)

        result_cert: Optional[SpikeCertificate] = None
        if op is TransformOp.DUAL:
            result = dual(M)
            result_cert = cert.dual() if cert is not None else None
        elif op in (TransformOp.DELETE, TransformOp.CONTRACT):
            try:
                chosen = mask_of(int(token) for token in elements.split())
            except ValueError:
                _fail(f"--elements must list non-negative integers, got {elements!r}")
            minor = (delete if op is TransformOp.DELETE else contract)(M, chosen)
            result = minor.matroid
            typer.echo("map=" + ",".join(f"{old}:{new}" for old, new in minor.index_map.items()))
            if cert is not None:
                result_cert = _transport(cert, minor.index_map, result.n)
        elif op is TransformOp.QUOTIENT:
            result, result_cert = quotient_step(M, cert)
        elif op is TransformOp.LIFT:
            result, result_cert = lift_step(M, cert)
        elif op is TransformOp.UNTIP:
            result, result_cert = untip(M, cert)
        else:
            result = tip_extension(M, cert)
            typer.echo(f"tip={M.n}")

        written = [write_matroid(result, out.with_suffix(".mtx"))]
        if result_cert is not None:
            written.append(write_certificate(result_cert, out.with_suffix(".cert")))
    typer.echo(f"op={op.value} n={result.n} rank={result.rank}")
    for written_path in written:
        typer.echo(f"wrote={written_path}")


@app.command("oracle")
def cmd_oracle(
    path: Optional[Path] = typer.Argument(None, help="Matroid file in matroid v1 format"),
    s: int = typer.Option(..., "--s"),
    t: int = typer.Option(..., "--t"),
    seed: Optional[str] = typer.Option(None, "--seed-corpus", help="Built-in instance instead of a file"),
):
    """List every (s,t)-spike certificate by brute force."""
    with _cli_errors():
        M = _load(path, seed).matroid
        with progress_manager.progress_context():
            add_task(f"Scanning pair partitions of {M.n} elements (limit {get_settings().oracle_limit})")
            found = spike_oracle(M, s, t)
    for cert in found:
        typer.echo(cert.to_text(), nl=False)
    typer.echo(f"certificates={len(found)}")
    raise typer.Exit(EXIT_OK if found else EXIT_NEGATIVE)


if __name__ == "__main__":
    app()
