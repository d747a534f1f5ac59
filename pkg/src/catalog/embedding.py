"""Embedding of k_q(g)((f)) into k_q(y)((x)) through a concrete q-commuting pair (F, G)."""

from __future__ import annotations

from functools import lru_cache

from ..errors import MorphismError
from ..maps.morphism import DEFAULT_PRECISION, GENERAL, Morphism, apply
from ..rings.skew_laurent import TAG_FG, SkewLaurentPoly
from ..rings.skew_series import Element, SkewSeries, refine
from .elements import value

WEYL = "weyl"
ORDER3 = "order3"
PAIRS = (WEYL, ORDER3)


@lru_cache(maxsize=None)
def embedding(pair: str = WEYL, precision: int = DEFAULT_PRECISION) -> Morphism:
    """f -> F, g -> G; "weyl" uses the phi-invariant f2, g2 and "order3" the sigma-invariant f3, g3."""
    if pair == WEYL:
        return Morphism("embed_weyl", value("f2"), value("g2"), GENERAL, source_tag=TAG_FG)
    if pair == ORDER3:
        return Morphism("embed_order3", value("f3", precision), value("g3", precision), GENERAL, source_tag=TAG_FG)
    raise MorphismError(f"unknown embedding pair '{pair}' (known: {', '.join(PAIRS)})")


def embed_fg_to_xy(p: Element, precision: int = DEFAULT_PRECISION, pair: str = WEYL) -> Element:
    """Substitute F for f and G for g; exact when the pair and p allow it."""
    if p.tag != TAG_FG:
        raise MorphismError(f"embed_fg_to_xy expects an element of {TAG_FG}, got {p.tag}")
    if pair == WEYL:
        return apply(embedding(WEYL), p, precision)
    if isinstance(p, SkewLaurentPoly) and p.support in ((), (0,)) and p.coefficient(0).as_scalar() is not None:
        return SkewLaurentPoly.constant(p.coefficient(0))

    def build(working: int) -> Element:
        return apply(embedding(pair, working), p, working)

    result = refine(build, precision)
    if isinstance(result, SkewSeries):
        return result.truncate(precision)
    return result
