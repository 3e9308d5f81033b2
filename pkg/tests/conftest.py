from hypothesis import strategies as st

from mobius_centers import GROUP_ALGEBRA, NILCOXETER, ZERO_HECKE
from mobius_centers.perm import Permutation

PRESETS = [NILCOXETER, ZERO_HECKE, GROUP_ALGEBRA]
PRESET_IDS = ["nilcoxeter", "0-hecke", "group"]


@st.composite
def perms_sharing_n(draw, count=1, min_n=1, max_n=8):
    """Draw `count` permutations on a common number of strands."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return tuple(
        Permutation(tuple(draw(st.permutations(list(range(1, n + 1))))))
        for _ in range(count)
    )
