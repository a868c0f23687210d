import doctest

import lcmgamma


def test_package_docstring_examples():
    result = doctest.testmod(lcmgamma, verbose=False)
    assert result.attempted > 0 and result.failed == 0
