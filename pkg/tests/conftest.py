from __future__ import annotations

from hypothesis import strategies as st

from pathbetti import SimplicialComplex, make_complex


@st.composite
def small_complexes(draw, max_vertices: int = 6, allow_void: bool = True) -> SimplicialComplex:
    """Random facet complexes on at most ``max_vertices`` vertices."""
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    ambient = tuple(range(1, n + 1))
    min_facets = 0 if allow_void else 1
    facets = draw(st.lists(
        st.sets(st.sampled_from(ambient), min_size=1, max_size=n).map(tuple),
        min_size=min_facets,
        max_size=6,
    ))
    return make_complex(ambient, facets)
