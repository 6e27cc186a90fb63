import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "long: slow opt-in tests (set RAILGRID_RUN_LONG=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("RAILGRID_RUN_LONG"):
        return
    skip = pytest.mark.skip(reason="long test; set RAILGRID_RUN_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
