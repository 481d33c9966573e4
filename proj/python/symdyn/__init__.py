"""Symbolic dynamics toolkit: languages, entropy, extender sets and measures of maximal entropy."""

import json

try:
    from . import _symdyn as _core
except ImportError:  # build tree: the extension sits next to the package, not inside it
    import _symdyn as _core

SymdynError = _core.SymdynError

__all__ = [
    "SymdynError", "cli", "count", "entropy", "enumerate", "extender_compare",
    "member", "mme", "replace_seq", "respects", "verify_run",
]


def _spec(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def entropy(spec):
    """Entropy data: h, lambda, irreducible and, for S-gap specs, root_lambda."""
    return json.loads(_core.entropy(_spec(spec)))


def count(spec, n):
    """Exact number of legal words of length n."""
    return int(_core.count(_spec(spec), n))


def enumerate(spec, n, budget=1 << 22):
    return _core.enumerate(_spec(spec), n, budget)


def member(spec, word):
    return _core.member(_spec(spec), word)


def extender_compare(spec, v, w):
    """One of 'equal', 'proper-subset', 'proper-superset', 'incomparable'."""
    return _core.extender_compare(_spec(spec), v, w)


def mme(spec, word):
    return json.loads(_core.mme(_spec(spec), word))


def replace_seq(u, v, w, positions):
    return _core.replace_seq(u, v, w, list(positions))


def respects(v, w):
    return _core.respects(v, w)


def verify_run(config=None):
    """Full report as a dict; the built-in config when none is given."""
    return json.loads(_core.verify_run("" if config is None else _spec(config)))


def cli(*args):
    """Run the command line in-process; returns (exit code, parsed stdout, parsed stderr)."""
    code, out, err = _core.cli([str(a) for a in args])
    load = lambda text: json.loads(text) if text.lstrip().startswith("{") else text
    return code, load(out), load(err)
