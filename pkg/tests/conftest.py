import pytest

from braidfact import corpus


@pytest.fixture()
def corpus_file(tmp_path):
    """Write a bundled example to disk and hand back its path."""

    def write(name: str) -> str:
        fname = name if name.endswith(".bfac") else name + ".bfac"
        p = tmp_path / fname
        p.write_text(corpus.text(name))
        return str(p)

    return write
