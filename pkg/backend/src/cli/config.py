from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from typing import Any, Literal, NoReturn

from operations import Operation, OperationRegistry, Param

OutputFormat = Literal["json", "table"]

DOCUMENT_KINDS = ("poly", "polys", "tensor", "point", "direction")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_SOLUTION = 2


class CliArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_INVALID. Exit code 2 means that no solution exists."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class CliConfig:
    operation: str
    """Registered operation name, e.g. `diff` or `haar verify`."""

    raw_inputs: dict[str, Any] = field(default_factory=dict)
    """Parsed arguments by parameter name. Document parameters hold file paths."""

    output_format: OutputFormat = "json"
    """
    Usage: `--output table`
    """

    output_file: str | None = None
    """
    Writes the JSON document here instead of printing it.

    Usage: `-o result.json`
    """

    verbose: bool = False
    """
    Logs debug messages to stderr.

    Usage: `-v`
    """

    @staticmethod
    def parse_argv(registry: OperationRegistry, argv: list[str] | None = None) -> CliConfig:
        parser = build_parser(registry)
        parsed = vars(parser.parse_args(argv))
        op: Operation = parsed.pop("_operation")
        return CliConfig(
            operation=op.name,
            raw_inputs={p.name: parsed.get(p.name) for p in op.params},
            output_format=parsed["output_format"],
            output_file=parsed["output_file"],
            verbose=parsed["verbose"],
        )


def _common_options() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        dest="output_format",
        choices=("json", "table"),
        default="json",
        help="Print the result as a JSON document or as a table.",
    )
    common.add_argument(
        "-o",
        dest="output_file",
        default=None,
        help="Write the JSON result to this file.",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    return common


def _add_param(parser: argparse.ArgumentParser, p: Param) -> None:
    help_text = p.help
    if not p.required and p.default not in (None, False):
        help_text += f" Default: {p.default}."
    kwargs: dict[str, Any] = {"dest": p.name, "help": help_text, "default": None}
    if p.kind in DOCUMENT_KINDS:
        kwargs["metavar"] = "FILE"
        if p.kind == "polys":
            kwargs["action"] = "append"
    elif p.kind == "int":
        kwargs["type"] = int
    elif p.kind == "float":
        kwargs["type"] = float
    elif p.kind == "bool":
        kwargs["action"] = "store_true"
    if p.choices:
        kwargs["choices"] = p.choices
    parser.add_argument(*p.cli_flags, **kwargs)


def build_parser(registry: OperationRegistry) -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="ncfree",
        description="Free differential calculus on non-commutative polynomials.",
    )
    common = _common_options()
    sub = parser.add_subparsers(dest="_command", metavar="COMMAND", required=True)

    for group, ops in registry.groups().items():
        if len(ops) == 1 and len(ops[0].path) == 1:
            targets = [(sub, ops[0], ops[0].path[0])]
        else:
            group_parser = sub.add_parser(group, help=f"{group} operations")
            nested = group_parser.add_subparsers(
                dest="_subcommand", metavar="COMMAND", required=True
            )
            targets = [(nested, op, op.path[-1]) for op in ops]
        for target, op, command in targets:
            first_line = op.description.split("\n\n")[0]
            p = target.add_parser(
                command, help=first_line, description=op.description, parents=[common]
            )
            for param in op.params:
                _add_param(p, param)
            p.set_defaults(_operation=op)

    return parser
