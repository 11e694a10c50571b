"""
Command-line surface: DSL parsing, subcommands and DOT rendering.
"""

from .exceptions import CliError, DslSyntaxError
from .main import build_parser, dump, main
from .parser import format_signature, parse_diagram, parse_signature
from .render import DotRenderer, render_dot
from .schemas import Command

__all__ = [
    "CliError",
    "DslSyntaxError",
    "build_parser",
    "dump",
    "main",
    "format_signature",
    "parse_diagram",
    "parse_signature",
    "DotRenderer",
    "render_dot",
    "Command",
]
