"""Keep the docstring examples honest."""

import doctest

import kinks.algebra
import kinks.core
import kinks.genfunc
import kinks.oracle
import kinks.treedp


def test_module_doctests():
    for module in (
        kinks.core,
        kinks.oracle,
        kinks.treedp,
        kinks.algebra,
        kinks.genfunc,
    ):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
        assert result.attempted > 0, module.__name__
