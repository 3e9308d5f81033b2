import doctest
from importlib import import_module


def test_module_doctests():
    # import_module avoids the package attributes, where some submodule
    # names are shadowed by same-named re-exported functions
    for name in ("mobius_centers.perm", "mobius_centers.partitions"):
        result = doctest.testmod(import_module(name))
        assert result.failed == 0
        assert result.attempted > 0
