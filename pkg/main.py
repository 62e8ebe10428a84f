import argparse
import asyncio
import json
import logging
import os
import sys
from math import comb, factorial
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from dotenv import load_dotenv

from phasedesign.circuits import (
    build_gbin_circuit,
    build_kwise_circuit,
    circuit_from_truth_table,
    circuit_metrics,
    compile_to_toffoli,
    dump_classical,
    dump_ht,
    parse_classical,
    parse_ht,
    simulate_ht,
)
from phasedesign.constants import DEFAULT_LOG_LEVEL, DEFAULT_SEED, EIG_TOL, RANK_TOL, SPECTRAL_MAX_BITS
from phasedesign.exceptions import (
    CircuitParseError,
    CircuitValidationError,
    FieldError,
    InputValidationError,
    InstanceTooLargeError,
    PhaseDesignError,
    PreconditionError,
)
from phasedesign.generator import KWiseBinaryPhaseGenerator
from phasedesign.kwise import eval_table, sample_key, verify_kwise_exhaustive
from phasedesign.persistence import (
    classes_to_json,
    load_key,
    load_table,
    read_text,
    reports_to_csv,
    reports_to_json,
    save_key,
    state_to_csv,
    write_output,
)
from phasedesign.phase_states import gen_binary_phase, gen_complex_phase, phase_function
from phasedesign.runner import verify_grid
from phasedesign.types import RunConfig
from sd_moments import bounds
from sd_moments.loader import resolve_operation

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    PreconditionError,
    InputValidationError,
    CircuitParseError,
    CircuitValidationError,
    InstanceTooLargeError,
    FieldError,
)

logger = logging.getLogger("main")


def initialize_logging(log_level_str: str):
    """Initialisiert das Logging; Log-Zeilen gehen nach stderr, Ergebnisse nach stdout."""
    level = getattr(logging, log_level_str.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    logging.getLogger().setLevel(level)


def _parse_grid(text: str) -> List[Tuple[int, int]]:
    """'2,2;3,2' -> [(2, 2), (3, 2)] as (t, n) pairs."""
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        try:
            t, n = chunk.split(",")
            pairs.append((int(t), int(n)))
        except ValueError as e:
            raise PreconditionError(f"bad grid entry {chunk!r}, expected t,n") from e
    return pairs


def cmd_gen_state(config: RunConfig) -> int:
    extra = config.extra
    if extra["source"] == "table":
        if not extra.get("table"):
            raise PreconditionError("--source table needs --table FILE")
        f = load_table(extra["table"])
        if config.n is not None and f.n != config.n:
            raise InputValidationError(f"table describes n={f.n}, but --n {config.n} was given")
        state = gen_binary_phase(f) if extra["phase"] == "binary" else gen_complex_phase(f)
    else:
        if extra.get("key"):
            key = load_key(extra["key"])
        elif config.n is None or config.k is None:
            raise PreconditionError("--source kwise needs --n and --k, or --key")
        else:
            key = sample_key(config.n, config.k, config.seed)
        if extra.get("save_key"):
            save_key(key, extra["save_key"])
        if extra["phase"] == "complex":
            state = gen_complex_phase(phase_function(eval_table(key), 1 << key.n))
        else:
            if key.k % 2:
                raise PreconditionError(f"the binary generator uses a (2t)-wise key; k={key.k} is odd")
            generator = KWiseBinaryPhaseGenerator(key.n, key.k // 2)
            state = generator.generate_by_circuit(key) if extra.get("via_circuit") else generator.generate(key)
    logger.info("state n=%d: norm=%.15g real=%s", state.n, state.norm, state.is_real)
    write_output(state_to_csv(state), config.out)
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    if config.extra.get("grid"):
        pairs = _parse_grid(config.extra["grid"])
    elif config.t is not None and config.n is not None:
        pairs = [(config.t, config.n)]
    else:
        raise PreconditionError("verify needs --t and --n, or --grid")
    for t, n in pairs:
        bounds.check_parameters(t, n)
        if t * n > SPECTRAL_MAX_BITS:
            raise PreconditionError(f"t*n = {t * n} exceeds the spectral limit {SPECTRAL_MAX_BITS}")

    reports = asyncio.run(verify_grid(pairs, tol_rank=config.tol_rank, tol_eig=config.tol_eig))
    text = reports_to_csv(reports) if config.output_format == "csv" else reports_to_json(reports)
    write_output(text, config.out)
    if config.out is not None and config.output_format != "csv":
        summary = Path(config.out).with_suffix(".csv")
        if summary != Path(config.out):
            write_output(reports_to_csv(reports), summary)
    for r in reports:
        if not r.passed:
            logger.error("t=%d n=%d failed: %s", r.t, r.n, r.error or ", ".join(r.failures))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_classes(config: RunConfig) -> int:
    t, n, kind = config.t, config.n, config.extra["kind"]
    if t is None or n is None:
        raise PreconditionError("classes needs --t and --n")
    permutation = resolve_operation("enumerate_permutation_classes")(t, n)
    failures = []
    if len(permutation) != comb((1 << n) + t - 1, t):
        failures.append("permutation class count")
    if sum(1 for d in permutation if d.size == factorial(t)) != comb(1 << n, t):
        failures.append("all-distinct class count")
    if sum(d.size for d in permutation) != 1 << (t * n):
        failures.append("class sizes")
    descriptors = permutation if kind == "permutation" else resolve_operation("enumerate_stabilization_classes")(t, n)
    write_output(classes_to_json(descriptors, n), config.out)
    for name in failures:
        logger.error("t=%d n=%d: %s mismatch", t, n, name)
    return EXIT_FAILED if failures else EXIT_OK


def cmd_circuit(config: RunConfig) -> int:
    extra = config.extra
    action = extra["action"]
    if action == "kwise-circuit":
        if config.n is None or config.k is None:
            raise PreconditionError("kwise-circuit needs --n and --k")
        circuit = build_kwise_circuit(config.n, config.k)
        if extra.get("save"):
            write_output(dump_classical(circuit), extra["save"])
        size, depth = circuit_metrics(circuit)
        write_output(json.dumps({"n": config.n, "k": config.k, "size": size, "depth": depth}) + "\n", config.out)
        return EXIT_OK

    if action == "gbin" and extra.get("table"):
        f = load_table(extra["table"])
        if f.modulus != 2:
            raise PreconditionError(f"G_bin needs a binary table, got modulus {f.modulus}")
        source = circuit_from_truth_table(f.table)
    else:
        if not extra.get("input"):
            raise PreconditionError(f"circuit {action} needs --in FILE")
        text = read_text(extra["input"])
        source = parse_ht(text) if action in ("simulate", "metrics-ht") else parse_classical(text)

    if action == "compile":
        result = dump_classical(compile_to_toffoli(source))
    elif action == "gbin":
        result = dump_ht(build_gbin_circuit(source))
    elif action == "simulate":
        result = state_to_csv(simulate_ht(source))
    else:
        size, depth = circuit_metrics(source)
        result = json.dumps({"size": size, "depth": depth}) + "\n"
    write_output(result, config.out)
    return EXIT_OK


def cmd_kwise(config: RunConfig) -> int:
    if config.n is None or config.k is None:
        raise PreconditionError("kwise needs --n and --k")
    report = verify_kwise_exhaustive(config.n, config.k, bit=config.extra.get("bit", False))
    write_output(json.dumps(report.to_dict(), indent=2) + "\n", config.out)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "gen-state": cmd_gen_state,
    "verify": cmd_verify,
    "classes": cmd_classes,
    "circuit": cmd_circuit,
    "kwise": cmd_kwise,
}


def build_parser() -> argparse.ArgumentParser:
    # Umgebungsvariablen liefern nur Standardwerte; CLI-Argumente haben Vorrang
    default_seed = int(os.environ.get("PHASEDESIGN_SEED", DEFAULT_SEED))
    default_tol_rank = float(os.environ.get("PHASEDESIGN_TOL_RANK", RANK_TOL))
    default_tol_eig = float(os.environ.get("PHASEDESIGN_TOL_EIG", EIG_TOL))
    default_log_level = os.environ.get("LOG_LEVEL", DEFAULT_LOG_LEVEL)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="Number of qubits / field degree")
    common.add_argument("--t", type=int, default=None, help="Number of copies")
    common.add_argument("--k", type=int, default=None, help="Independence parameter of the key family")
    common.add_argument("--seed", type=int, default=default_seed, help=f"RNG seed (default: {default_seed})")
    common.add_argument("--out", default=None, help="Output file (default: stdout)")
    common.add_argument("--format", dest="output_format", choices=["json", "csv"], default="json")
    common.add_argument("--tol-rank", type=float, default=default_tol_rank, help="Relative rank tolerance")
    common.add_argument("--tol-eig", type=float, default=default_tol_eig, help="Eigenvalue floor tolerance")
    common.add_argument(
        "--log-level",
        default=default_log_level,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help=f"Logging level (default: {default_log_level})",
    )

    parser = argparse.ArgumentParser(description="Binary phase state t-design toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("gen-state", parents=[common], help="Write a phase state vector as CSV")
    gen.add_argument("--phase", choices=["binary", "complex"], default="binary")
    gen.add_argument("--source", choices=["kwise", "table"], default="kwise")
    gen.add_argument("--table", default=None, help="Phase table JSON for --source table")
    gen.add_argument("--key", default=None, help="Key JSON instead of sampling from --seed")
    gen.add_argument("--save-key", default=None, help="Write the key used to this JSON file")
    gen.add_argument("--via-circuit", action="store_true", help="Build the binary state by HT simulation")

    verify = sub.add_parser("verify", parents=[common], help="Verify all bounds for (t, n)")
    verify.add_argument("--grid", default=None, help="Several pairs as 't,n;t,n'")

    classes = sub.add_parser("classes", parents=[common], help="Dump equivalence classes as JSON")
    classes.add_argument("--kind", choices=["permutation", "stabilization"], default="permutation")

    circuit = sub.add_parser("circuit", parents=[common], help="Compile, synthesize or simulate circuits")
    circuit.add_argument("action", choices=["compile", "gbin", "simulate", "kwise-circuit", "metrics", "metrics-ht"])
    circuit.add_argument("--in", dest="input", default=None, help="Input circuit file")
    circuit.add_argument("--table", default=None, help="Binary phase table JSON for gbin")
    circuit.add_argument("--save", default=None, help="Write the k-wise circuit to this file")

    kwise = sub.add_parser("kwise", parents=[common], help="Exhaustive k-wise independence check")
    kwise.add_argument("--bit", action="store_true", help="Check the 1-bit truncation")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    known = {"subcommand", "n", "t", "k", "seed", "tol_rank", "tol_eig", "out", "output_format", "log_level"}
    return RunConfig(
        subcommand=args.subcommand,
        n=args.n,
        t=args.t,
        k=args.k,
        seed=args.seed,
        tol_rank=args.tol_rank,
        tol_eig=args.tol_eig,
        out=args.out,
        output_format=args.output_format,
        extra={key: value for key, value in vars(args).items() if key not in known},
    )


def run(config: RunConfig) -> int:
    try:
        return COMMANDS[config.subcommand](config)
    except USAGE_ERRORS as e:
        logger.error("%s: %s", config.subcommand, e)
        return EXIT_USAGE
    except PhaseDesignError as e:
        logger.error("%s failed: %s", config.subcommand, e)
        return EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    initialize_logging(args.log_level)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
