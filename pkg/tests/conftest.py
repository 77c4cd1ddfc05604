import pytest

from slicetype.corpus import NgramModel, build_model, default_model


@pytest.fixture(scope="session")
def model() -> NgramModel:
    return default_model()


@pytest.fixture()
def tiny_model() -> NgramModel:
    # Small closed vocabulary with known counts and bigrams.
    return build_model(
        [("the", 100), ("then", 40), ("they", 60), ("toy", 10),
         ("input", 25), ("in", 50), ("winning", 5), ("qi", 3)],
        [("the", "toy", 8), ("in", "the", 12), ("the", "input", 2)],
    )
