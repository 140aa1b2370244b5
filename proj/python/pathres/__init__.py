"""Path-algebra rewriting and bimodule resolutions."""

import json

from ._core import PathresError, __version__, example_names
from . import _core

__all__ = [
    "PathresError",
    "__version__",
    "example_names",
    "example_document",
    "run_task",
    "self_test",
    "cli",
]


def example_document(name, values=None, ints=None, system=""):
    return json.loads(_core.example_document(name, values or {}, ints or {}, system))


def run_task(doc, latex=False):
    """Run doc["task"]["kind"]; returns (result, exit_code)."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    result, code = _core.run_task(text, latex)
    return json.loads(result), code


def self_test(name, values=None, ints=None, system=""):
    result, code = _core.self_test(name, values or {}, ints or {}, system)
    return json.loads(result), code


def cli(*args):
    """Run the command line tool in-process; returns (exit_code, report or None, stderr)."""
    code, out, err = _core.cli([str(a) for a in args])
    return code, (json.loads(out) if out.strip().startswith("{") else None), err
