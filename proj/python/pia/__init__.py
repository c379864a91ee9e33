"""Pebble-intervals automata and two-variable logic over data words.

Automata, NFAs, sentences, formulas and data words are plain dicts in the
same JSON layout the `pia` command-line tool reads and writes. Words are
lists of letters.
"""

import json

from . import _core
from ._core import (
    AlphabetMismatch,
    FormatError,
    FreeVariable,
    NotUnidirectional,
    PartialMap,
    PiaError,
)

__all__ = [
    "AlphabetMismatch", "FormatError", "FreeVariable", "NotUnidirectional", "PartialMap", "PiaError",
    "accepts", "enumerate_accepted", "is_empty", "witness",
    "union", "concat", "star", "shuffle", "shuffle_star", "substitute",
    "nfa_to_pia", "pia_to_nfa", "nfa_accepts",
    "string_projection", "trim", "model_check",
    "satisfiable", "projection_member", "sentence_formula",
    "catalog", "catalog_names",
]


def _s(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def accepts(pia, word):
    return _core.accepts(_s(pia), list(word))


def enumerate_accepted(pia, max_len):
    return [tuple(w) for w in _core.enumerate_accepted(_s(pia), max_len)]


def is_empty(pia):
    return _core.is_empty(_s(pia))


def witness(pia):
    """A short accepted word, or None when the language is empty."""
    return _core.witness(_s(pia))


def union(a, b):
    return json.loads(_core.union_of(_s(a), _s(b)))


def concat(a, b):
    return json.loads(_core.concat(_s(a), _s(b)))


def star(a):
    return json.loads(_core.star(_s(a)))


def shuffle(a, b):
    return json.loads(_core.shuffle(_s(a), _s(b)))


def shuffle_star(a):
    return json.loads(_core.shuffle_star(_s(a)))


def substitute(a, mapping):
    return json.loads(_core.substitute(_s(a), dict(mapping)))


def nfa_to_pia(nfa):
    return json.loads(_core.nfa_to_pia(_s(nfa)))


def pia_to_nfa(pia):
    return json.loads(_core.pia_to_nfa(_s(pia)))


def nfa_accepts(nfa, word):
    return _core.nfa_accepts(_s(nfa), list(word))


def string_projection(dataword):
    return _core.string_projection(_s(dataword))


def trim(dataword):
    return json.loads(_core.trim(_s(dataword)))


def model_check(dataword, formula):
    return _core.model_check(_s(dataword), _s(formula))


def satisfiable(sentence):
    """(is_satisfiable, witness word or None)."""
    return _core.satisfiable(_s(sentence))


def projection_member(sentence, word):
    return _core.projection_member(_s(sentence), list(word))


def sentence_formula(sentence):
    return json.loads(_core.sentence_formula(_s(sentence)))


def catalog_names():
    return list(_core.catalog_names())


def catalog(name):
    return json.loads(_core.catalog(name))
