import pytest

from preopt.diagram import Slice, make_diagram
from preopt.signature import running_signature


@pytest.fixture
def sig():
    """Atoms A, B; central s, c, h; non-central f, g."""
    return running_signature()


@pytest.fixture
def diagram(sig):
    """Build a diagram over the running signature from (name, offset) pairs."""

    def build(dom, *pairs):
        return make_diagram(sig, tuple(dom), [Slice.gen(name, offset) for name, offset in pairs])

    return build
