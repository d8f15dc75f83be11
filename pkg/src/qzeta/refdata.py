"""Loader for the in-repo reference closed forms (data/closed_forms.json)."""

from __future__ import annotations

import json
from importlib import resources

from .qtpoly import FactoredRatQT, QTPoly
from .zeta_engine import GHPair


def _load():
    with resources.files("qzeta.data").joinpath("closed_forms.json").open() as fh:
        return json.load(fh)


_DATA = _load()


def _terms_to_qtpoly(terms) -> QTPoly:
    return QTPoly({(a, b): c for a, b, c in terms})


def _product_to_qtpoly(factors) -> QTPoly:
    acc = QTPoly.one()
    for sign, k in factors:
        acc = acc * QTPoly({(0, 0): 1, (0, k): sign})
    return acc


def reference_cm_closed(m: int) -> FactoredRatQT:
    """The quoted closed forms of c_3 and c_4."""
    key = {3: "c3", 4: "c4"}.get(m)
    if key is None:
        raise ValueError("closed forms are recorded for m = 3, 4 only")
    spec = _DATA[key]
    return FactoredRatQT(
        _terms_to_qtpoly(spec["numerator"]),
        [((a, b), mult) for a, b, mult in spec["factors"]],
    )


def reference_gh(m: int) -> GHPair:
    """The quoted (g_m, h_m) pairs for m = 5, 6."""
    if m not in (5, 6):
        raise ValueError("(g, h) pairs are recorded for m = 5, 6 only")
    g = _terms_to_qtpoly(_DATA[f"g{m}"])
    h = _product_to_qtpoly(_DATA[f"h{m}_product"])
    return GHPair(m, g, h)
