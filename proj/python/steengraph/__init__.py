"""Wood graphs of the truncated mod-2 dual Steenrod algebras A*(n)."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import Monomial, __version__, analyze_json


def analyze(x: Monomial) -> dict:
    """Full analysis report for one monomial, as a dict."""
    return _json.loads(analyze_json(x))


def polynomial_str(terms) -> str:
    """Render a list of monomials the way the CLI prints polynomials."""
    return " + ".join(str(t) for t in terms) if terms else "0"


def tensor_str(terms) -> str:
    return " + ".join(f"{a} (x) {b}" for a, b in terms) if terms else "0"
