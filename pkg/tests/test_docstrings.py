"""Run every doctest in the package so examples in docstrings stay true."""

from __future__ import annotations

import doctest

import pytest

from scrollcurves import catalog, chow, cli, curves, fixtures, scrolls, semigroups

MODULES = (semigroups, curves, scrolls, chow, catalog, fixtures, cli)


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.split(".")[-1])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0


def test_some_examples_exist():
    attempted = sum(doctest.testmod(m).attempted for m in MODULES)
    assert attempted > 0
