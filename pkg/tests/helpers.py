"""Shared strategies, schema loading and the acceptance-line recorder."""

import json
from pathlib import Path

from hypothesis import strategies as st
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

import qshuffle
from qshuffle.coeff import LaurentInt
from qshuffle.words import FreeElement, Word

SCHEMA_DIR = Path(qshuffle.__file__).parent / "schemas"

ACCEPTANCE = {}


def record(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[number] = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


def _registry() -> Registry:
    resources = []
    for path in SCHEMA_DIR.glob("*.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


_REGISTRY = _registry()


def validator(name: str) -> Draft202012Validator:
    schema = json.loads((SCHEMA_DIR / name).read_text())
    return Draft202012Validator(schema, registry=_REGISTRY)


def word_strings(min_size=0, max_size=6):
    return st.text(alphabet="xy", min_size=min_size, max_size=max_size)


def words(min_size=0, max_size=6):
    return word_strings(min_size, max_size).map(Word)


def laurents(max_terms=3, span=4, coeff=5):
    return st.dictionaries(st.integers(-span, span), st.integers(-coeff, coeff), max_size=max_terms).map(LaurentInt)


def elements(max_terms=3, max_len=4):
    return st.lists(st.tuples(word_strings(0, max_len), laurents()), max_size=max_terms).map(FreeElement)


def _mixed_map(prefix, exp):
    # (even family, side, q exponent) and (odd family, side, q exponent) for both orders
    return (
        ((f"{prefix}.1a", 0, 0), (f"{prefix}.2a", 0, -exp)),
        ((f"{prefix}.1b", 1, 0), (f"{prefix}.2b", 1, exp)),
    )


def series_sum_map():
    """Generating-function identity -> the finite-sum family side giving each coefficient.

    Values are ``(even, odd)`` where each entry is ``(family id, side, q exponent)``
    and the coefficient of ``t^m`` equals ``q^exponent`` times that side at the
    matching parameter.
    """
    table = {
        "S6.1.1": (("P5.conv1.1", 0, 0), ("P5.conv1odd.1", 0, 0)),
        "S6.1.2": (("P5.conv1.2", 0, 0), ("P5.conv1odd.2", 0, 0)),
        "S6.1.3": (("P5.conv1.3", 0, 0), ("P5.conv1odd.3", 0, 0)),
        "S6.1.4": (("P5.conv1.4", 0, 0), ("P5.conv1odd.4", 0, 0)),
        "S6.6.1": (("P5.GGh.1", 0, 0), ("P5.GGh.3", 0, 0)),
        "S6.6.2": (("P5.GGh.2", 0, 0), ("P5.GGh.4", 0, 0)),
        "S6.7.1": (("P5.WpWm.1", 0, 0), ("P5.WpWm.3", 0, 0)),
        "S6.7.2": (("P5.WpWm.2", 0, 0), ("P5.WpWm.4", 0, 0)),
    }
    for sid, prefix, exp in (("S6.2", "P5.WmGh", -1), ("S6.3", "P5.WmG", 1),
                             ("S6.4", "P5.WpGh", 1), ("S6.5", "P5.WpG", -1)):
        first, second = _mixed_map(prefix, exp)
        table[sid + ".1"] = first
        table[sid + ".2"] = second
    return table


def matching_sum(sid, m):
    """The finite sum that the ``t^m`` coefficient of ``sid``'s left side must equal."""
    from qshuffle.coeff import q_power
    from qshuffle.relations import instantiate
    from qshuffle.words import FreeElement

    even, odd = series_sum_map()[sid]
    if sid.startswith("S6.6"):
        # even coefficients come from the sum of length 2n + 2
        if m == 0:
            return FreeElement.word("")
        fid, side, exp = even if m % 2 == 0 else odd
        n = m // 2 - 1 if m % 2 == 0 else m // 2
    else:
        fid, side, exp = even if m % 2 == 0 else odd
        n = m // 2
    return instantiate(fid, [n])[side].scale(q_power(exp))
