"""
Results of command-line invocations and their rendering.
"""

import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional

from .file_formats import dumps, write_text


class ResultStatus(Enum):
    """
    Outcome of a command together with its process exit code.
    """

    OK = ('ok', 0)
    LAW_VIOLATION = ('law_violation', 1)
    PRECONDITION_ERROR = ('precondition_error', 2)
    BUDGET_EXCEEDED = ('budget_exceeded', 3)
    IO_ERROR = ('io_error', 4)

    def __init__(self, label: str, exit_code: int):
        self.label = label
        self.exit_code = exit_code


@dataclass
class CommandResult:
    """
    Status, machine-readable payload and human-readable diagnostics of one command.

    The payload is a JSON value, or DOT text for graph exports.
    """
    status: ResultStatus
    payload: Any = None
    diagnostics: List[str] = field(default_factory=list)
    out_path: Optional[str] = None

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def render(self) -> str:
        """
        :return: Deterministic text form of the payload; empty if there is none.
        """
        if self.payload is None:
            return ''
        if isinstance(self.payload, str):
            return self.payload
        return dumps(self.payload)


class ResultPrinter:
    """
    Writes command results: the payload to the output stream or a file, diagnostics to the
    error stream.
    """

    def __init__(self, output=sys.stdout, errors=sys.stderr):
        """
        :param output: Stream receiving the payload.
        :param errors: Stream receiving status and diagnostics.
        """
        self.output = output
        self.errors = errors

    def print_result(self, result: CommandResult) -> None:
        """
        :param result: Result to print; the payload goes to `result.out_path` if it is set.
        """
        text = result.render()
        if result.out_path is not None and text:
            write_text(text, result.out_path)
        elif text:
            self.output.write(text)
        for line in result.diagnostics:
            print(line, file=self.errors)
        if result.status is not ResultStatus.OK:
            print(f'status: {result.status.label}', file=self.errors)
