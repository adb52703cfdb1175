import pytest

from bsgroup.ring import make_context
from bsgroup.words import evaluate, parse

MODULI = (2, 3, -2, 6, 10)


@pytest.fixture(params=MODULI, ids=lambda n: f"n={n}")
def ctx(request):
    return make_context(request.param)


@pytest.fixture
def ctx2():
    return make_context(2)


def elem(text, ctx):
    return evaluate(parse(text, ctx), ctx)
