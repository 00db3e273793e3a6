"""Rational normal curves through points and codimension-two spaces, in exact arithmetic.

Documents are plain dicts in the same JSON shape the ``rnckit`` command reads and
writes; rationals are strings such as ``"22/7"``.
"""

import json
from fractions import Fraction

from . import _rnckit
from ._rnckit import (
    BadShape,
    Error,
    NotGeneric,
    ObstructionFails,
    ParseError,
    SCHEMA_VERSION,
    Unsupported,
)

__all__ = [
    "BadShape",
    "Error",
    "NotGeneric",
    "ObstructionFails",
    "ParseError",
    "SCHEMA_VERSION",
    "Unsupported",
    "ah_suite",
    "construct",
    "equivalent",
    "expect",
    "hilbert",
    "obstruct",
    "random_datum",
    "rational",
    "run",
    "verify",
]


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def rational(text):
    """Exact value of a rational string from a document."""
    return Fraction(text)


def construct(datum):
    return json.loads(_rnckit.construct(_doc(datum)))


def verify(document):
    return json.loads(_rnckit.verify(_doc(document)))


def obstruct(datum):
    return json.loads(_rnckit.obstruct(_doc(datum)))


def expect(n, p, l):
    return json.loads(_rnckit.expect(n, p, l))


def hilbert(scheme):
    return json.loads(_rnckit.hilbert(_doc(scheme)))


def ah_suite(seed=1):
    return json.loads(_rnckit.ah_suite(seed))


def equivalent(a, b):
    return json.loads(_rnckit.equivalent(_doc(a), _doc(b)))


def random_datum(n, p, l, seed=1, oracle=False):
    return json.loads(_rnckit.random_datum(n, p, l, seed, oracle))


def run(args, stdin=""):
    """Run the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _rnckit.run(list(args), stdin)
