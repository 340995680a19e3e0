import math

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from torelli_screen import validate

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def cover_data(draw, min_n=2, max_n=30, max_r=8, max_s=3):
    """Valid data: draw free multiplicities, then close the sum mod n.

    A genus-0 base gets an extra {1, n-1} pair when needed so the
    monodromy stays surjective (connected cover).
    """
    n = draw(st.integers(min_n, max_n))
    s = draw(st.integers(0, max_s))
    free = draw(st.lists(st.integers(1, n - 1), max_size=max_r - 1))
    u = list(free)
    deficit = (-sum(u)) % n
    if deficit:
        u.append(deficit)
    if s == 0 and math.gcd(n, *u) != 1:
        u.extend([1, n - 1])
    return validate(n, s, u)
