import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def _session_cache(tmp_path_factory):
    # keep test runs away from any user cache
    path = tmp_path_factory.mktemp("ideal-cache")
    old = os.environ.get("QCMS_CACHE_DIR")
    os.environ["QCMS_CACHE_DIR"] = str(path)
    yield path
    if old is None:
        os.environ.pop("QCMS_CACHE_DIR", None)
    else:
        os.environ["QCMS_CACHE_DIR"] = old
