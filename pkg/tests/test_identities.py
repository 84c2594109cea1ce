import pytest
from hypothesis import given, settings, strategies as st

from conftest import fields, forms, scalars, vectors
from ratrig.identities import CATALOGUE, by_name


@st.composite
def cases(draw, signature):
    spec = draw(fields)
    B = draw(forms(spec))
    args = []
    for kind in signature:
        if kind == "v":
            args.append(draw(vectors(spec)))
        else:
            args.append(draw(scalars(spec, nonzero=kind == "n")))
    return B, args


def test_catalogue_names_unique():
    names = [i.name for i in CATALOGUE]
    assert len(names) == len(set(names)) == 50
    assert by_name("jacobi_identity").signature == "vvv"
    with pytest.raises(KeyError):
        by_name("no_such_identity")


def test_signatures_are_well_formed():
    for ident in CATALOGUE:
        assert ident.signature and set(ident.signature) <= set("vsn")


@pytest.mark.parametrize("ident", CATALOGUE, ids=lambda i: i.name)
def test_identity_holds(ident):
    @settings(max_examples=60)
    @given(cases(ident.signature))
    def check(case):
        B, args = case
        if ident.pre is None or ident.pre(B, *args):
            assert ident.law(B, *args)

    check()
