import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simplicent import example_complex, example_graph  # noqa: E402


@pytest.fixture(scope="session")
def fig_graph():
    return example_graph()


@pytest.fixture(scope="session")
def fig(fig_graph):
    return example_complex(3)


def sid(c, k, labels):
    """Simplex ID from the original node labels, e.g. sid(c, 1, '14')."""
    idx = c.graph.label_index()
    return c.simplex_id(k, sorted(idx[ch] for ch in labels))
