"""
The `preopt` command.

Standard output carries exactly one JSON object (or DOT text for `render`);
logs go to standard error. Exit codes: 0 success or true, 1 false or a law
violation, 2 any other error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import ValidationError

from .._base.exceptions import PreoptError
from ..config import get_settings
from ..constants import Checks, Suites
from ..diagram import Diagram, compose, enumerate_class, equal, format_diagram, is_central, normal_form
from ..fincat import fincat_from_dict, resolve_example, verify_effectful
from ..laws import run_suite
from ..optic import Comb, Optic, as_comb, comb_equal, comb_from_dict, comb_to_dict, optic_equal, substitute
from ..signature import Signature, format_word, running_signature
from .exceptions import CliError, DslSyntaxError
from .parser import parse_diagram, parse_signature
from .render import render_dot
from .schemas import Command

logger = logging.getLogger(__name__)

Value = Union[Diagram, Comb]


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise CliError(message)


def dump(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit(payload: Dict[str, Any]) -> None:
    sys.stdout.write(dump(payload) + "\n")


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


# ---------- inputs ----------


def read_input(ref: str) -> str:
    """A literal, or the contents of the file named after a leading `@`."""
    if not ref.startswith("@"):
        return ref
    path = Path(ref[1:])
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise CliError(f"Cannot read {path}: {e}") from e


def load_signature(command: Command) -> Signature:
    if command.sig_path is None:
        return running_signature()
    return parse_signature(read_input("@" + command.sig_path))


def load_value(ref: str, sig: Signature) -> Value:
    text = read_input(ref)
    if not text.lstrip().startswith("{"):
        return parse_diagram(text, sig)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DslSyntaxError(f"Invalid JSON: {e.msg}", span=(e.lineno, e.colno)) from e
    return comb_from_dict(data, sig)


def _under(value: Value) -> Diagram:
    return value.under if isinstance(value, Comb) else value


def _lift(d: Diagram) -> Value:
    """Plain diagrams stay plain; anything over a hole-extended signature becomes a comb."""
    if not d.sig.barriers:
        return d
    comb = as_comb(d)
    if len(comb.holes) == 1:
        return Optic(under=comb.under, holes=comb.holes)
    return comb


def _describe(value: Value) -> Dict[str, Any]:
    return {"literal": format_diagram(_under(value)), "json": comb_to_dict(value)}


# ---------- subcommands ----------


def _check(command: Command) -> int:
    sig = load_signature(command)
    value = load_value(command.inputs[0], sig)
    d = _under(value)
    _emit(
        {
            "ok": True,
            "dom": format_word(d.dom),
            "cod": format_word(d.cod),
            "slices": len(d),
            "holes": d.hole_labels,
            "central": is_central(d),
            "literal": format_diagram(d),
        }
    )
    return 0


def _normalize(command: Command) -> int:
    sig = load_signature(command)
    value = load_value(command.inputs[0], sig)
    nf = _lift(normal_form(_under(value), command.budget))
    _emit(_describe(nf))
    return 0


def _eq(command: Command) -> int:
    sig = load_signature(command)
    v1, v2 = (load_value(ref, sig) for ref in command.inputs)
    if isinstance(v1, Optic) and isinstance(v2, Optic):
        same = optic_equal(v1, v2, command.budget)
    elif isinstance(v1, Comb) or isinstance(v2, Comb):
        same = comb_equal(as_comb(v1), as_comb(v2), command.budget)
    else:
        same = equal(v1, v2, command.budget)
    sizes = [len(enumerate_class(_under(v), command.budget)) for v in (v1, v2)]
    _emit({"equal": same, "class_sizes": sizes})
    return 0 if same else 1


def _compose(command: Command) -> int:
    sig = load_signature(command)
    v1, v2 = (load_value(ref, sig) for ref in command.inputs)
    _emit(_describe(_lift(compose(_under(v1), _under(v2)))))
    return 0


def _plug(command: Command) -> int:
    sig = load_signature(command)
    outer, fill = (load_value(ref, sig) for ref in command.inputs)
    if not isinstance(outer, Comb) or not outer.holes:
        raise CliError("'plug' needs a comb with at least one hole as its first input")
    slot = command.slot
    if slot is None:
        if len(outer.holes) != 1:
            raise CliError(f"Comb has slots {outer.slots}; pass --slot")
        slot = outer.slots[0]
    result = substitute(outer, slot, fill)
    _emit(_describe(result if result.holes else result.under))
    return 0


def _laws(command: Command) -> int:
    result = run_suite(command.suite, command.seed, command.iters, command.budget)
    _emit(result.to_dict())
    return 0 if result.passed else 1


def _fincat(command: Command) -> int:
    if command.category_path is not None:
        try:
            data = json.loads(read_input("@" + command.category_path))
        except json.JSONDecodeError as e:
            raise DslSyntaxError(f"Invalid JSON: {e.msg}", span=(e.lineno, e.colno)) from e
        c = fincat_from_dict(data)
        _emit({"category": c.name, "objects": len(c.objects), "arrows": len(c.sorted_arrows), "ok": True})
        return 0

    eff = resolve_example(command.example, command.universe)
    payload: Dict[str, Any] = {
        "example": command.example,
        "objects": len(eff.c0.objects),
        "pure_arrows": len(eff.c0.sorted_arrows),
        "effectful_arrows": len(eff.c1.sorted_arrows),
    }
    if not command.verify:
        _emit(payload)
        return 0
    results = verify_effectful(eff, command.verify, command.budget)
    payload["results"] = {name: result.to_dict() for name, result in results.items()}
    payload["ok"] = all(result.ok for result in results.values())
    _emit(payload)
    return 0 if payload["ok"] else 1


def _render(command: Command) -> int:
    sig = load_signature(command)
    value = load_value(command.inputs[0], sig)
    sys.stdout.write(render_dot(value))
    return 0


# ---------- argument parsing ----------


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _add_common_args(parser: argparse.ArgumentParser, inputs: int) -> None:
    parser.add_argument("inputs", nargs=inputs, help="Diagram literal, or @path to a literal/JSON file")
    parser.add_argument("--sig", dest="sig_path", default=None, help="Signature file (default: running signature)")
    parser.add_argument("--budget", type=int, default=None, help="Enumeration budget")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="preopt", description="Free premonoidal categories, optics and finite coends.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=_ArgumentParser)

    for name, inputs, func, help_text in (
        ("check", 1, _check, "Typecheck a diagram or comb."),
        ("normalize", 1, _normalize, "Print the canonical representative."),
        ("eq", 2, _eq, "Decide equality in the free effectful category."),
        ("compose", 2, _compose, "Sequential composite of two diagrams."),
        ("plug", 2, _plug, "Substitute a fill into a comb's hole."),
        ("render", 1, _render, "Render a diagram or comb as DOT."),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        _add_common_args(sub, inputs)
        if name == "plug":
            sub.add_argument("--slot", type=int, default=None, help="Hole slot to fill")
        sub.set_defaults(func=func, format="dot" if name == "render" else "json")

    laws = subparsers.add_parser("laws", help="Run a seeded randomized law suite.")
    laws.add_argument("--suite", required=True, choices=Suites.ALL_SUITES)
    laws.add_argument("--seed", type=int, default=None)
    laws.add_argument("--iters", type=int, default=None)
    laws.add_argument("--budget", type=int, default=None)
    laws.set_defaults(func=_laws)

    fincat = subparsers.add_parser("fincat", help="Build and verify finite effectful categories.")
    source = fincat.add_mutually_exclusive_group(required=True)
    source.add_argument("--example", default=None, help="writer:M3, writer:Z2, walking-arrow, trivial, discrete:N")
    source.add_argument("--category", dest="category_path", default=None, help="Category JSON document")
    fincat.add_argument("--universe", type=_int_list, default=[0, 1], help="Writer universe, e.g. 0,1")
    fincat.add_argument(
        "--verify",
        nargs="+",
        default=[],
        metavar="CHECK",
        help=f"Checkers to run: {', '.join(Checks.ALL_CHECKS + [Checks.ALL])}",
    )
    fincat.add_argument("--budget", type=int, default=None)
    fincat.set_defaults(func=_fincat)
    return parser


def to_command(args: argparse.Namespace) -> Command:
    fields = {key: value for key, value in vars(args).items() if key in Command.model_fields}
    try:
        return Command(**fields)
    except ValidationError as e:
        raise CliError("; ".join(err["msg"] for err in e.errors())) from e


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    configure_logging(settings.log_level)
    try:
        args = build_parser().parse_args(argv)
        command = to_command(args)
        logger.info(f"Running {command.subcommand}")
        return int(args.func(command))
    except PreoptError as e:
        _emit(e.to_dict())
        return e.exit_code
    except Exception as e:
        logger.exception("Unexpected engine error")
        _emit({"error": "Internal", "message": str(e)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
