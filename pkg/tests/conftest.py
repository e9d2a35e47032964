import pytest

from implicit_net import parse_ratings

from helpers import TOY_LINES


@pytest.fixture
def toy_graph():
    return parse_ratings(TOY_LINES)


@pytest.fixture
def toy_file(tmp_path):
    path = tmp_path / "toy.tsv"
    path.write_text("% user item\n" + "\n".join(TOY_LINES) + "\n")
    return path
