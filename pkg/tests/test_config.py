import pytest

from spin_hurwitz.config import CACHE_SIZE, Settings, load_settings
from spin_hurwitz.services import cohft_elsv, hurwitz_numbers, qschur


def test_defaults(fresh_settings):
    settings = load_settings()
    assert settings == Settings()
    assert settings.truncation_margin == 2
    assert settings.log_level == "WARNING"


def test_environment_override(fresh_settings):
    fresh_settings.setenv("SPINH_TRUNCATION_MARGIN", "5")
    fresh_settings.setenv("SPINH_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.truncation_margin == 5
    assert settings.log_level == "DEBUG"


def test_settings_are_cached(fresh_settings):
    assert load_settings() is load_settings()


@pytest.mark.parametrize("margin", ["-1", "many"])
def test_invalid_margin(fresh_settings, margin):
    fresh_settings.setenv("SPINH_TRUNCATION_MARGIN", margin)
    with pytest.raises(ValueError, match="SPINH_TRUNCATION_MARGIN"):
        load_settings()


def test_memoized_helpers_are_bounded():
    for helper in (
        qschur._pfaffian,
        qschur._character,
        hurwitz_numbers._tau_coefficient,
        cohft_elsv._vertex_integral,
    ):
        assert helper.cache_info().maxsize == CACHE_SIZE
