"""Command-line front end.

Every command's options come from its pydantic argument schema, so the
schema is the single source of parameter names, defaults and help texts.

Exit status: 0 when the verdict matches ``--expect`` (or passes when no
expectation is given), 1 on a mismatch or failure, 2 on usage errors.
"""

import argparse
import logging
import re
import sys
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from .api import LabAPI
from .commands import commands, find_command
from .reports import write_report

LOGGER = logging.getLogger(__name__)

OUTPUT_FIELDS = ("out", "format", "expect")
NEGATIVE_VALUE = re.compile(r"^-[\d.]")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _option(name: str) -> str:
    return "--" + name.replace("_", "-")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holext",
        description="Numerical tests of holomorphic extendibility.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log at debug level.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in commands:
        sub = subparsers.add_parser(
            command["name"],
            description=command["description"],
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        schema = command["args_schema"]
        for name, field in schema.model_fields.items():
            sub.add_argument(
                _option(name),
                dest=name,
                default=argparse.SUPPRESS,
                help=field.description,
            )
    return parser


def glue_negative_values(argv: Sequence[str]) -> List[str]:
    """Join ``--opt -4..8`` into ``--opt=-4..8`` so argparse keeps it."""
    glued: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        following = argv[index + 1] if index + 1 < len(argv) else None
        if (
            token.startswith("--")
            and "=" not in token
            and following is not None
            and NEGATIVE_VALUE.match(following)
        ):
            glued.append(f"{token}={following}")
            index += 2
            continue
        glued.append(token)
        index += 1
    return glued


def _exit_status(verdict: Optional[str], expect: Optional[str]) -> int:
    if expect is not None:
        return EXIT_OK if verdict == expect else EXIT_FAILED
    return EXIT_FAILED if verdict == "fail" else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(
        glue_negative_values(sys.argv[1:] if argv is None else argv)
    )
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    command = find_command(args.command)
    assert command is not None
    schema = command["args_schema"]
    raw: Dict = {
        name: value
        for name, value in vars(args).items()
        if name in schema.model_fields
    }
    try:
        params = schema.model_validate(raw)
    except ValidationError as error:
        print(f"holext {args.command}: {error}", file=sys.stderr)
        return EXIT_USAGE

    kwargs = {
        name: getattr(params, name)
        for name in schema.model_fields
        if name not in OUTPUT_FIELDS
    }
    try:
        report = LabAPI().execute(command["method"], **kwargs)
    except ValueError as error:
        # HolextError and pydantic's ValidationError included
        print(
            f"holext {args.command}: {type(error).__name__}: {error}",
            file=sys.stderr,
        )
        return EXIT_USAGE

    text = write_report(report, params.out, params.format)
    if params.out is None:
        sys.stdout.write(text)
    verdict = getattr(report, "verdict", None)
    LOGGER.debug("%s: verdict %s", args.command, verdict)
    return _exit_status(verdict, params.expect)
