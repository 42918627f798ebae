from hypothesis import strategies as st

from baerinv.commutators import bracket, generator


def commutators(max_index=3, max_leaves=6):
    leaves = st.integers(1, max_index).map(generator)
    return st.recursive(
        leaves,
        lambda children: st.tuples(children, children).map(lambda t: bracket(*t)),
        max_leaves=max_leaves,
    )
