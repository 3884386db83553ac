"""Exact models of the two-hyperplane ternary operation on projective spaces.

Dict-level wrappers over the _core extension. Every function accepts either a
dict or a JSON string and returns a dict; the schemas are exactly the ones the
``ternarygeo`` command line tool reads and writes, so shell pipelines and
python callers share one vocabulary.
"""

import json as _json

from ._core import Error, ParseError, PreconditionError, __version__

from . import _core as _c

__all__ = [
    "Error",
    "ParseError",
    "PreconditionError",
    "__version__",
    "run_scenario",
    "run_laws",
    "ternary_eval",
    "gamma_eval",
    "render",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def run_scenario(scenario, seed=None, trials=None):
    """Run a scenario document; the returned report's "ok" is the verdict."""
    return _json.loads(_c.run_scenario(_text(scenario), seed, trials))


def run_laws(item, seed=None, trials=None):
    """Run a single {"structure": ..., "laws": [...]} item."""
    return _json.loads(_c.run_laws(_text(item), seed, trials))


def ternary_eval(spec):
    """Evaluate (x y z) from a lattice or chart description."""
    return _json.loads(_c.ternary_eval(_text(spec)))


def gamma_eval(spec, method=""):
    """Evaluate the five-slot submodule map; method "", "brute", "lattice"
    or "collinear"."""
    return _json.loads(_c.gamma_eval(_text(spec), method))


def render(spec=None):
    """Render the two-line construction; returns {"svg": ..., "w": [...]}.

    Keys x, y, z, view, coincident, width, height override a built-in
    example figure.
    """
    return _json.loads(_c.render(_text(spec if spec is not None else {})))
