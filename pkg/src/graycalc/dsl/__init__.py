"""The graycalc document language: parse, print and run."""

from .parser import parse_syntax
from .printer import print_document
from .resolve import resolve
from .runner import CommandOutputs, CommandResult, run
from .syntax import Document, DSLError, SyntaxError, UnresolvedName, ValidationFailed


def parse(text: str) -> Document:
    """Parse and resolve ``text``; every name is checked in declaration order."""
    return resolve(parse_syntax(text))


__all__ = ["parse", "parse_syntax", "print_document", "resolve", "run", "CommandOutputs",
           "CommandResult", "Document", "DSLError", "SyntaxError", "UnresolvedName",
           "ValidationFailed"]
