import json
import os
from importlib import resources

import hypothesis
import pytest
from hypothesis import strategies as st

from twolift.graph import Graph
from twolift.models import SpinModel

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def multigraphs(draw, max_n=5, max_m=7, min_n=1, loops=True):
    n = draw(st.integers(min_n, max_n))
    vert = st.integers(0, n - 1)
    edge = st.tuples(vert, vert)
    if not loops:
        edge = edge.filter(lambda e: e[0] != e[1]) if n > 1 else st.nothing()
    edges = draw(st.lists(edge, max_size=max_m)) if n > 1 or loops else []
    return Graph(n, tuple(edges))


@st.composite
def simple_graphs(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(sorted(chosen)))


@st.composite
def int_models(draw, max_q=3, max_entry=3, weighted=True):
    q = draw(st.integers(1, max_q))
    A = [[0] * q for _ in range(q)]
    for i in range(q):
        for j in range(i, q):
            A[i][j] = A[j][i] = draw(st.integers(0, max_entry))
    nu = tuple(draw(st.integers(1, 3)) for _ in range(q)) if weighted else None
    return SpinModel(tuple(map(tuple, A)), nu)


def _registry():
    from referencing import Registry, Resource

    root = resources.files("twolift") / "schemas"
    reg = Registry()
    schemas = {}
    for entry in root.iterdir():
        if entry.name.endswith(".json"):
            data = json.loads(entry.read_text())
            schemas[entry.name] = data
            reg = reg.with_resource(entry.name, Resource.from_contents(data))
    return reg, schemas


@pytest.fixture(scope="session")
def validate_schema():
    import jsonschema

    reg, schemas = _registry()

    def check(payload, name):
        jsonschema.Draft202012Validator(schemas[name], registry=reg).validate(payload)

    return check
