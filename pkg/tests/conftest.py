import pytest

from taksir import compile_lexicon, load_registry, load_seed


@pytest.fixture(scope="session")
def registry():
    return load_registry()


@pytest.fixture(scope="session")
def seed(registry):
    return load_seed()


@pytest.fixture(scope="session")
def compiled(seed, registry):
    dictionary, failures = compile_lexicon(seed, registry)
    assert not failures, failures
    return dictionary


def load_golden():
    """Rows of tests/data/golden_bp.tsv: (ref, lemma, code, expected, note)."""
    import pathlib

    rows = []
    path = pathlib.Path(__file__).parent / "data" / "golden_bp.tsv"
    for line in path.read_text("utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        ref, lemma, code, expected, note = (line.split("\t") + [""])[:5]
        rows.append((ref, lemma, code, expected, note))
    return rows
