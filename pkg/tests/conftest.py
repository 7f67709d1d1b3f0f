import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

coordinates = st.floats(
    min_value=-100.0, max_value=100.0, allow_nan=False, allow_infinity=False
)
radii = st.floats(min_value=0.05, max_value=50.0, allow_nan=False, allow_infinity=False)


@st.composite
def point_lists(draw, min_size=1, max_size=20):
    return draw(
        st.lists(st.tuples(coordinates, coordinates), min_size=min_size, max_size=max_size)
    )


# Coordinates on a 1/64 grid in [-100, 100]: every orientation predicate is
# then exact in double precision, so degenerate (collinear/duplicate) inputs
# are decided identically by the library and by the brute-force oracles.
grid_coordinate = st.integers(min_value=-6400, max_value=6400).map(lambda v: v / 64.0)


@st.composite
def grid_point_lists(draw, min_size=1, max_size=20):
    return draw(
        st.lists(
            st.tuples(grid_coordinate, grid_coordinate),
            min_size=min_size,
            max_size=max_size,
        )
    )


@st.composite
def instances(draw, min_size=1, max_size=20):
    from diskcover import Instance

    pts = draw(point_lists(min_size=min_size, max_size=max_size))
    r = draw(radii)
    return Instance(points=pts, radius=r)
