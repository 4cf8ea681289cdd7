"""
Command-line interface: ``spectra <command> [options]``.

Commands:
    construct      Build a named graph and print it as graph6 or JSON.
    spectrum       q(G) and its degree bounds for each graph6 line.
    check-free     Pattern freeness for each graph6 line.
    verify         Run a theorem or lemma check by id or name; exit 1 when it fails.
    bounds-report  Closed forms, numeric values and bounds per order.

Data goes to stdout, logs to stderr. Exit codes: 0 success, 1 verification
failure, 2 usage error or malformed input.
"""

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

from . import __version__
from .config import TIE_BAND, resolve_jobs
from .enumeration import LEMMA_CHECKS, LEMMA_IDS, THEOREM_IDS, THEOREMS, verify_lemma, verify_theorem
from .forbidden import find_forbidden, parse_patterns
from .graphs import (
    Family,
    FamilySpec,
    Graph,
    Graph6Error,
    cone_over_triangles,
    encode_graph6,
    friendship,
    read_graph6,
    split_star,
    split_star_plus,
)
from .spectral import (
    closed_q_friendship,
    closed_q_splitstar2,
    closed_q_splitstarplus1,
    das_bound,
    das_bound_exact,
    max_degree_pressure,
    max_degree_pressure_exact,
    q_cone_over_triangles,
    q_max,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

REPORT_MIN_ORDER = 4
REPORT_MAX_ORDER = 40


class Command(Enum):
    CONSTRUCT = "construct"
    SPECTRUM = "spectrum"
    CHECK_FREE = "check-free"
    VERIFY = "verify"
    BOUNDS_REPORT = "bounds-report"


OUTPUTS: Dict[Command, Tuple[str, ...]] = {
    Command.CONSTRUCT: ("graph6", "json"),
    Command.SPECTRUM: ("json",),
    Command.CHECK_FREE: ("json",),
    Command.VERIFY: ("json",),
    Command.BOUNDS_REPORT: ("csv", "json"),
}

FORMATS = ("json", "csv", "graph6")

_TWO_PARAMETER = (Family.SPLIT_STAR, Family.SPLIT_STAR_PLUS, Family.H_GRAPH)
_LENGTHS = (Family.THETA, Family.GENERALIZED_THETA)


@dataclass
class RunConfig:
    """
    A parsed and validated invocation.

    Attributes:
        command (Command): The subcommand.
        params (Dict[str, Any]): Command parameters.
        output (str): Output format.
        jobs (int): Worker processes.
        header (bool): Whether to print the run metadata line.
    """

    command: Command
    params: Dict[str, Any] = field(default_factory=dict)
    output: str = "json"
    jobs: int = 1
    header: bool = True

    def validate(self) -> None:
        """
        Raises:
            ValueError: If the output format or the parameters do not fit the command.
        """
        if self.output not in OUTPUTS[self.command]:
            raise ValueError(
                f"'{self.command.value}' writes {', '.join(OUTPUTS[self.command])}, "
                f"not '{self.output}'."
            )
        if self.jobs < 1:
            raise ValueError(f"--jobs expected greater than 0, received {self.jobs}.")
        if self.command is Command.CONSTRUCT:
            self.params["spec"] = _family_spec(
                self.params.get("family"),
                self.params.get("n"),
                self.params.get("k"),
                self.params.get("lengths"),
            )
        elif self.command is Command.CHECK_FREE:
            self.params["patterns"] = parse_patterns(self.params.get("free") or "")
        elif self.command is Command.VERIFY:
            theorem, lemma = self.params.get("theorem"), self.params.get("lemma")
            if (theorem is None) == (lemma is None):
                raise ValueError("verify needs exactly one of --theorem and --lemma.")
            if self.params.get("n") is None:
                raise ValueError("verify needs --n.")
        elif self.command is Command.BOUNDS_REPORT:
            low, high = self.params.get("n_min"), self.params.get("n_max")
            if not (REPORT_MIN_ORDER <= low <= high <= REPORT_MAX_ORDER):
                raise ValueError(
                    f"bounds-report needs {REPORT_MIN_ORDER} <= n-min <= n-max <= "
                    f"{REPORT_MAX_ORDER}, received {low}..{high}."
                )

    def metadata(self) -> Dict[str, str]:
        return {"command": self.command.value, "version": __version__}


def _family_spec(
    name: Optional[str], n: Optional[int], k: Optional[int], lengths: Optional[List[int]]
) -> FamilySpec:
    if name is None:
        raise ValueError("construct needs --family.")
    try:
        family = Family(name)
    except ValueError:
        raise ValueError(f"Unknown family '{name}'.") from None
    if family in _LENGTHS:
        if not lengths:
            raise ValueError(f"Family '{name}' needs --lengths.")
        return FamilySpec.parse(name, lengths)
    if n is None:
        raise ValueError(f"Family '{name}' needs --n.")
    if family in _TWO_PARAMETER:
        if k is None:
            raise ValueError(f"Family '{name}' needs --k.")
        return FamilySpec.parse(name, [n, k])
    return FamilySpec.parse(name, [n])


def _lengths(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated integers, received '{text}'.")


def _add_output(command: argparse.ArgumentParser) -> None:
    command.add_argument(
        "--out",
        choices=FORMATS,
        help="Output format; each command writes a subset (default: its first).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="Signless Laplacian spectral extremal problems for theta and friendship graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes (default: $SPECTRA_JOBS or 1).")
    parser.add_argument("--no-header", action="store_true", help="Omit the run metadata line.")
    parser.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"]
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="Build a named graph.")
    construct.add_argument("--family", required=True, choices=[f.value for f in Family])
    construct.add_argument("--n", type=int)
    construct.add_argument("--k", type=int)
    construct.add_argument("--lengths", type=_lengths, help="Path lengths, e.g. 1,2,3.")
    _add_output(construct)

    spectrum = commands.add_parser("spectrum", help="q(G) and degree bounds per graph6 line.")
    spectrum.add_argument("file", nargs="?", default="-")
    _add_output(spectrum)

    check = commands.add_parser("check-free", help="Pattern freeness per graph6 line.")
    check.add_argument("--free", required=True, help="Patterns, e.g. theta-1-2-2,f5.")
    check.add_argument("--witness", action="store_true", help="Include an embedding when not free.")
    check.add_argument("file", nargs="?", default="-")
    _add_output(check)

    verify = commands.add_parser("verify", help="Run a theorem or lemma check.")
    target = verify.add_mutually_exclusive_group(required=True)
    target.add_argument(
        "--theorem", choices=[*THEOREM_IDS, *THEOREMS], help="Id or name, e.g. 1.2."
    )
    target.add_argument(
        "--lemma", choices=[*LEMMA_IDS, *LEMMA_CHECKS], help="Id or name, e.g. 2.3."
    )
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--k", type=int)
    _add_output(verify)

    report = commands.add_parser("bounds-report", help="Closed forms and bounds per order.")
    report.add_argument("--n-min", type=int, default=REPORT_MIN_ORDER)
    report.add_argument("--n-max", type=int, default=REPORT_MAX_ORDER)
    _add_output(report)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        ValueError: If the parameters or the worker count are invalid.
    """
    command = Command(args.command)
    params = {key: value for key, value in vars(args).items()
              if key not in {"command", "jobs", "no_header", "log_level", "out"}}
    default_output = OUTPUTS[command][0]
    config = RunConfig(
        command=command,
        params=params,
        output=args.out or default_output,
        jobs=resolve_jobs(args.jobs),
        header=not args.no_header,
    )
    config.validate()
    return config


def _json_line(stream: TextIO, payload: Dict[str, Any]) -> None:
    stream.write(json.dumps(payload, sort_keys=False) + "\n")


def _graphs(path: str, stdin: TextIO, failures: List[Graph6Error]) -> Iterator[Tuple[int, str, Graph]]:
    def record(error: Graph6Error) -> None:
        logger.error("%s", error)
        failures.append(error)

    if path == "-":
        lines = [line.rstrip("\n") for line in stdin]
    else:
        with open(path, encoding="ascii") as handle:
            lines = [line.rstrip("\n") for line in handle]
    for line_number, graph in read_graph6(lines, on_error=record):
        yield line_number, lines[line_number - 1].strip(), graph


def spectrum_record(graph: Graph) -> Dict[str, Any]:
    """
    The spectrum fields for one graph.

    ``bound_lemma24`` is the largest degree pressure and ``bound_lemma25`` the
    Das bound; each is None where undefined.
    """
    result = q_max(graph)
    pressure = None if graph.has_isolated_vertex() else max_degree_pressure(graph)[1]
    das = das_bound(graph) if graph.n >= 2 else None
    return {
        "n": graph.n,
        "m": graph.m,
        "q": result.q,
        "residual": result.residual,
        "bound_lemma24": pressure,
        "bound_lemma25": das,
        "graph6": encode_graph6(graph),
    }


def _family_columns(prefix: str, graph: Graph, closed: float, sandwich: Tuple[float, float]) -> Dict[str, Any]:
    q = q_max(graph).q
    _, pressure = max_degree_pressure_exact(graph)
    low, high = sandwich
    return {
        f"{prefix}_closed": closed,
        f"{prefix}_numeric": q,
        f"{prefix}_pressure": float(pressure),
        f"{prefix}_das": float(das_bound_exact(graph)),
        f"{prefix}_chain_ok": q <= float(pressure) + TIE_BAND and pressure <= das_bound_exact(graph),
        f"{prefix}_sandwich_ok": low < q < high,
    }


def _friendship_sandwich(n: int) -> Tuple[float, float]:
    if n % 2 == 1:
        return n + 2 / (n - 1), n + 2 / (n - 2)
    return n + 2 / n, n + 2 / (n - 1)


def bounds_report(n_min: int = REPORT_MIN_ORDER, n_max: int = REPORT_MAX_ORDER) -> List[Dict[str, Any]]:
    """
    One row per order with, for each extremal family, its closed-form and
    numeric q, its degree-pressure and Das bounds, and whether the bound chain
    and the family's sandwich inequality hold. Orders n ≡ 1 (mod 3) from 7 on
    also compare the cone over triangles with the split star.

    Raises:
        ValueError: Unless ``4 <= n_min <= n_max <= 40``.
    """
    if not (REPORT_MIN_ORDER <= n_min <= n_max <= REPORT_MAX_ORDER):
        raise ValueError(
            f"bounds_report needs {REPORT_MIN_ORDER} <= n_min <= n_max <= {REPORT_MAX_ORDER}, "
            f"received {n_min}..{n_max}."
        )
    rows = []
    for n in range(n_min, n_max + 1):
        row: Dict[str, Any] = {"n": n}
        row.update(
            _family_columns("friendship", friendship(n), closed_q_friendship(n), _friendship_sandwich(n))
        )
        split = closed_q_splitstar2(n)
        row.update(
            _family_columns("split_star", split_star(n, 2), split, (n + 2 - 4 / (n + 1), float("inf")))
        )
        row.update(
            _family_columns(
                "split_star_plus", split_star_plus(n, 1), closed_q_splitstarplus1(n), (float(n), float(n + 1))
            )
        )
        if n % 3 == 1 and n >= 7:
            cone = q_max(cone_over_triangles(n)).q
            row["cone_closed"] = q_cone_over_triangles(n)
            row["cone_numeric"] = cone
            row["cone_below_split_star"] = cone < row["split_star_numeric"] - TIE_BAND
        else:
            row["cone_closed"] = row["cone_numeric"] = row["cone_below_split_star"] = None
        rows.append(row)
        logger.debug("bounds-report row %d done.", n)
    return rows


def _write_header(config: RunConfig, stdout: TextIO) -> None:
    if not config.header or config.output == "graph6":
        return
    meta = config.metadata()
    if config.output == "csv":
        stdout.write(f"# spectra {meta['command']} version {meta['version']}\n")
    else:
        _json_line(stdout, {"meta": meta})


def _run_construct(config: RunConfig, stdout: TextIO) -> int:
    spec: FamilySpec = config.params["spec"]
    graph = spec.build()
    if config.output == "graph6":
        stdout.write(encode_graph6(graph) + "\n")
    else:
        _json_line(
            stdout,
            {
                "family": str(spec),
                "n": graph.n,
                "m": graph.m,
                "edges": [list(edge) for edge in graph.edges()],
                "graph6": encode_graph6(graph),
            },
        )
    return EXIT_OK


def _run_spectrum(config: RunConfig, stdin: TextIO, stdout: TextIO) -> int:
    failures: List[Graph6Error] = []
    for line_number, _, graph in _graphs(config.params["file"], stdin, failures):
        record = {"line": line_number}
        record.update(spectrum_record(graph))
        _json_line(stdout, record)
    return EXIT_USAGE if failures else EXIT_OK


def _run_check_free(config: RunConfig, stdin: TextIO, stdout: TextIO) -> int:
    failures: List[Graph6Error] = []
    patterns = config.params["patterns"]
    for line_number, text, graph in _graphs(config.params["file"], stdin, failures):
        found = find_forbidden(graph, patterns)
        record: Dict[str, Any] = {"line": line_number, "graph6": text, "free": found is None}
        if found is not None and config.params.get("witness"):
            pattern, embedding = found
            record["pattern"] = pattern.name
            record["embedding"] = list(embedding.mapping)
        _json_line(stdout, record)
    return EXIT_USAGE if failures else EXIT_OK


def _run_verify(config: RunConfig, stdout: TextIO) -> int:
    params = config.params
    if params.get("theorem") is not None:
        result = verify_theorem(params["theorem"], params["n"], jobs=config.jobs)
    else:
        result = verify_lemma(params["lemma"], params["n"], params.get("k"), jobs=config.jobs)
    _json_line(stdout, result.to_dict())
    return EXIT_FAILED if result.passed is False else EXIT_OK


def _csv_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _run_bounds_report(config: RunConfig, stdout: TextIO) -> int:
    rows = bounds_report(config.params["n_min"], config.params["n_max"])
    if config.output == "json":
        _json_line(stdout, {"rows": rows})
    else:
        writer = csv.writer(stdout, lineterminator="\n")
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([_csv_value(value) for value in row.values()])
    failed = any(
        value is False for row in rows for key, value in row.items() if key.endswith(("_ok", "_star"))
    )
    return EXIT_FAILED if failed else EXIT_OK


def run(config: RunConfig, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout) -> int:
    """
    Executes a validated configuration.

    Returns:
        int: 0 on success, 1 when a verification fails, 2 on invalid parameters
        or malformed input lines.
    """
    _write_header(config, stdout)
    try:
        if config.command is Command.CONSTRUCT:
            return _run_construct(config, stdout)
        if config.command is Command.SPECTRUM:
            return _run_spectrum(config, stdin, stdout)
        if config.command is Command.CHECK_FREE:
            return _run_check_free(config, stdin, stdout)
        if config.command is Command.VERIFY:
            return _run_verify(config, stdout)
        return _run_bounds_report(config, stdout)
    except (ValueError, OSError) as error:
        logger.error("%s", error)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = config_from_args(args)
    except ValueError as error:
        logger.error("%s", error)
        return EXIT_USAGE
    return run(config, stdin, stdout)
