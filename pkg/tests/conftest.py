from collections.abc import Callable

import msgspec
import pytest
from click.testing import CliRunner, Result

from app import cli
from config import Settings
from services.enumeration_service import EnumerationService


@pytest.fixture
def settings() -> Settings:
    return Settings(max_part_cap=30, max_weight_cap=120, workers=1, split_depth=4, log_level="WARNING")


@pytest.fixture
def service(settings: Settings) -> EnumerationService:
    return EnumerationService(settings)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def invoke(runner: CliRunner) -> Callable[..., Result]:
    def _invoke(*args: str) -> Result:
        return runner.invoke(cli, [str(a) for a in args])

    return _invoke


@pytest.fixture
def invoke_json(invoke) -> Callable[..., dict]:
    """Run a command that must succeed and return the decoded envelope."""

    def _invoke_json(*args: str) -> dict:
        result = invoke(*args)
        assert result.exit_code == 0, result.output
        return msgspec.json.decode(result.stdout)

    return _invoke_json
