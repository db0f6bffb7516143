import logging
from fractions import Fraction

from majorizer.utils.utils import env_float, env_int, get_logger, read_json, write_json
from majorizer.verdicts import Status, jsonable


def test_get_logger_is_cached_and_isolated():
    first = get_logger("majorizer.test_utils")
    second = get_logger("majorizer.test_utils")
    assert first is second
    assert len(first.handlers) == 1
    assert first.propagate is False
    assert get_logger() is logging.getLogger()


def test_log_level_from_env(monkeypatch):
    monkeypatch.setenv("MAJORIZER_LOG_LEVEL", "debug")
    assert get_logger("majorizer.test_utils_level").level == logging.DEBUG


def test_env_readers(monkeypatch):
    monkeypatch.delenv("MAJORIZER_SOMETHING", raising=False)
    assert env_float("SOMETHING", 1.5) == 1.5
    monkeypatch.setenv("MAJORIZER_SOMETHING", "2.25")
    assert env_float("SOMETHING", 1.5) == 2.25
    monkeypatch.setenv("MAJORIZER_SOMETHING", " ")
    assert env_int("SOMETHING", 4) == 4
    monkeypatch.setenv("MAJORIZER_SOMETHING", "12")
    assert env_int("SOMETHING", 4) == 12


def test_json_files(tmp_path):
    path = tmp_path / "nested" / "out.json"
    write_json(str(path), {"a": [1, 2]})
    assert read_json(str(path)) == {"a": [1, 2]}


def test_jsonable_and_exit_codes():
    assert jsonable([Fraction(3, 2), Fraction(4), float("inf"), 2**70]) == [
        "3/2",
        4,
        "inf",
        str(2**70),
    ]
    assert [s.exit_code for s in Status] == [0, 1, 5]
