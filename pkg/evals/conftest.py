import pytest

from common.config import get_settings, override_settings


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path):
    """Send artifacts to a temporary directory and undo any setting a test changes."""
    saved = get_settings().model_dump()
    override_settings(artifact_dir=tmp_path / "artifacts")
    yield get_settings()
    override_settings(**saved)
