import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import assume, settings, strategies as st

from ratrig.exactfield import QQ, FieldSpec
from ratrig.linalg3 import Mat3, Vec3
from ratrig.metric import BilinearForm

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

PRIMES = [3, 5, 7, 13, 101]


@pytest.fixture
def minkowski():
    return BilinearForm.minkowski(QQ)


@pytest.fixture
def euclid():
    return BilinearForm.euclidean(QQ)


def V(*xs, spec=QQ):
    return Vec3.of(spec, *xs)


fields = st.sampled_from([QQ] + [FieldSpec.prime(p) for p in PRIMES])


@st.composite
def scalars(draw, spec, nonzero=False):
    if spec.is_prime:
        lo = 1 if nonzero else 0
        return spec(draw(st.integers(lo, spec.p - 1)))
    num = draw(st.integers(-12, 12).filter(lambda n: n != 0 or not nonzero))
    den = draw(st.integers(1, 6))
    return spec(Fraction(num, den))


@st.composite
def vectors(draw, spec):
    return Vec3(*(draw(scalars(spec)) for _ in range(3)))


@st.composite
def forms(draw, spec):
    """A random nondegenerate symmetric form (not necessarily diagonal)."""
    a1, a2, a3, b1, b2, b3 = (draw(scalars(spec)) for _ in range(6))
    m = Mat3(Vec3(a1, b3, b2), Vec3(b3, a2, b1), Vec3(b2, b1, a3))
    assume(not m.det().is_zero())
    return BilinearForm(m)


@st.composite
def setups(draw, n_vectors, spec=None):
    """(spec, B, [vectors]) with a random field (unless given) and form."""
    spec = draw(fields) if spec is None else spec
    B = draw(forms(spec))
    return spec, B, [draw(vectors(spec)) for _ in range(n_vectors)]
