import json

import pytest

from quasisym import config
from quasisym.words import parking_functions


def test_cap_message_names_key(tmp_path):
    config.load()
    with pytest.raises(config.CapExceeded) as exc:
        config.check_cap("max_enum_n", 99)
    assert "max_enum_n" in str(exc.value) and config.ENV_VAR in str(exc.value)


def test_load_file(tmp_path):
    p = tmp_path / "caps.json"
    p.write_text(json.dumps({"max_enum_n": 2}))
    try:
        config.load(str(p))
        assert config.get("max_enum_n") == 2
        with pytest.raises(config.CapExceeded):
            list(parking_functions(3))
    finally:
        config.load()


def test_unknown_key(tmp_path):
    p = tmp_path / "caps.json"
    p.write_text(json.dumps({"nope": 1}))
    with pytest.raises(ValueError):
        config.load(str(p))
    config.load()


def test_env_var(tmp_path, monkeypatch):
    p = tmp_path / "caps.json"
    p.write_text(json.dumps({"max_tree_n": 3}))
    monkeypatch.setenv(config.ENV_VAR, str(p))
    try:
        assert config.load()["max_tree_n"] == 3
    finally:
        monkeypatch.delenv(config.ENV_VAR)
        config.load()
