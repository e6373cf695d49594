import pytest

from ambc.perm import parse_window


@pytest.fixture
def window():
    """Parse a window string; a thin alias that keeps test bodies short."""
    return parse_window
