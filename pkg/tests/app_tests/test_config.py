"""
tests/app_tests/test_config.py
==============================
Testovi za kb_app.core.config (engine_limits i nadjačavanje preko CLI-a).
"""

import pytest
from pydantic import ValidationError

from kb_app.core import config


def test_defaults_come_from_environment_module():
    limits = config.engine_limits()
    assert limits.max_points == config.MAX_POINTS
    assert limits.jobs == config.JOBS
    assert limits.aux_budget == config.AUX_BUDGET


def test_none_overrides_are_ignored():
    assert config.engine_limits(max_points=None, jobs=None) == config.engine_limits()


def test_overrides_replace_values():
    limits = config.engine_limits(max_elements=64, jobs=3)
    assert (limits.max_elements, limits.jobs) == (64, 3)


def test_invalid_override_is_rejected():
    with pytest.raises(ValidationError):
        config.engine_limits(max_points=0)


def test_limits_are_frozen():
    limits = config.engine_limits()
    with pytest.raises(ValidationError):
        limits.jobs = 2
