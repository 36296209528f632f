"""Shared strategies: random isometries as products of reflections."""

from itertools import product

from hypothesis import strategies as st

from hyperlat.errors import NotIsometryError
from hyperlat.isometry import compose, identity, reflection
from hyperlat.lattice import new_lattice, square

from conftest import GRAM_P, GRAM_PM1, GRAM_UM1, M_PARA, M_PELL

LATTICES = {
    "P": new_lattice(GRAM_P, [1, 0], "P"),
    "U_m1": new_lattice(GRAM_UM1, [1, 1, 0], "U_m1"),
    "P_m1": new_lattice(GRAM_PM1, [1, 0, 0], "P_m1"),
}


def small_reflections(lat, box=2):
    """All integral reflections in roots with entries in [-box, box] (one per line)."""
    out, seen = [], set()
    for r in product(range(-box, box + 1), repeat=lat.rank):
        if not any(r) or square(lat, r) >= 0:
            continue
        key = r if next(x for x in r if x) > 0 else tuple(-x for x in r)
        if key in seen:
            continue
        seen.add(key)
        try:
            s = reflection(lat, r)
        except NotIsometryError:
            continue
        out.append(s)
    return out


REFLECTIONS = {name: small_reflections(lat) for name, lat in LATTICES.items()}


def extra_generators(name):
    from hyperlat.isometry import new_isometry

    lat = LATTICES[name]
    if name == "P":
        return [new_isometry(lat, M_PELL)]
    if name == "U_m1":
        return [new_isometry(lat, M_PARA)]
    return [new_isometry(lat, [[3, 4, 0], [2, 3, 0], [0, 0, 1]])]


@st.composite
def isometries(draw, name=None, max_len=5):
    if name is None:
        name = draw(st.sampled_from(sorted(LATTICES)))
    lat = LATTICES[name]
    gens = REFLECTIONS[name] + extra_generators(name)
    word = draw(st.lists(st.sampled_from(gens), max_size=max_len))
    g = identity(lat)
    for h in word:
        g = compose(g, h)
    return g
