import pytest

from schemarith.lexicon import load_default_lexicon


@pytest.fixture(scope="session")
def lex():
    return load_default_lexicon()
