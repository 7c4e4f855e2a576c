import json

import pytest
from loguru import logger
from pydantic import ValidationError

from lascoux.config import LascouxSettings, get_settings, reset_settings
from lascoux.errors import DomainError, IdentityCheckError, LascouxError, NegativeCoefficientError, UsageError
from lascoux.utils.logging import RunContext, get_logger, get_run_id, log_execution_time, setup_logging


class TestSettings:
    def test_defaults(self):
        settings = get_settings()
        assert settings.log_level == "WARNING"
        assert settings.log_format == "pretty"
        assert settings.verify_identities is True
        assert settings.default_seed == 1
        assert settings.default_trials == 1000
        assert settings.workers >= 1
        assert settings.log_file is None

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("LASCOUX_LOG_LEVEL", "debug")
        monkeypatch.setenv("LASCOUX_WORKERS", "3")
        monkeypatch.setenv("LASCOUX_LOG_FILE", "lascoux.log")
        monkeypatch.setenv("LASCOUX_VERIFY_IDENTITIES", "false")
        reset_settings()
        settings = get_settings()
        assert settings.log_file == "lascoux.log"
        assert settings.log_level == "DEBUG"
        assert settings.workers == 3
        assert settings.verify_identities is False

    def test_cached_until_reset(self, monkeypatch):
        first = get_settings()
        monkeypatch.setenv("LASCOUX_DEFAULT_SEED", "42")
        assert get_settings() is first
        reset_settings()
        assert get_settings().default_seed == 42

    @pytest.mark.parametrize("field, value", [("log_level", "LOUD"), ("log_format", "xml"), ("workers", 0)])
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError):
            LascouxSettings(**{field: value})

    def test_verify_default_drives_expansions(self, monkeypatch, mocker):
        from lascoux import expansion
        from lascoux.combi_core import WeakComposition
        from lascoux.heckewords import Permutation

        monkeypatch.setenv("LASCOUX_VERIFY_IDENTITIES", "false")
        reset_settings()
        check = mocker.spy(expansion, "_check_identity")
        expansion.expand_product(WeakComposition((1,)), Permutation(), 1)
        assert check.call_count == 0


class TestErrors:
    def test_fields_and_dict(self):
        exc = NegativeCoefficientError("negative", details={"terms": [("(1)", 0, -1)]})
        assert exc.code == "NEGATIVE_COEFFICIENT"
        assert exc.exit_code == 3
        assert exc.to_dict() == {"error": "negative", "code": "NEGATIVE_COEFFICIENT", "details": {"terms": [("(1)", 0, -1)]}}

    def test_domain_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            raise DomainError("bad")

    @pytest.mark.parametrize("cls, code", [(DomainError, 2), (UsageError, 2), (IdentityCheckError, 3), (LascouxError, 4)])
    def test_exit_codes(self, cls, code):
        assert cls("x").exit_code == code

    def test_custom_code(self):
        assert UsageError("x", code="BAD_FLAG").code == "BAD_FLAG"


class TestLogging:
    def test_invalid_level(self):
        with pytest.raises(ValueError):
            setup_logging(level="LOUD")

    def test_invalid_format(self):
        with pytest.raises(ValueError):
            setup_logging(format_type="xml")

    def test_environment_wins(self, monkeypatch, capsys):
        monkeypatch.setenv("LASCOUX_LOG_FORMAT", "json")
        setup_logging(level="INFO", format_type="pretty")
        get_logger("lascoux.tests").info("hello")
        line = capsys.readouterr().err.strip().splitlines()[-1]
        assert json.loads(line)["message"] == "hello"

    def test_json_records_carry_run_and_context(self, capsys):
        setup_logging(level="DEBUG", format_type="json")
        with RunContext("run-1") as run_id:
            assert get_run_id() == run_id == "run-1"
            get_logger("lascoux.expansion").bind(terms=18).info("expanded")
        assert get_run_id() is None
        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["level"] == "INFO"
        assert record["run_id"] == "run-1"
        assert record["context"] == {"module": "lascoux.expansion", "terms": 18}

    def test_pretty_sink(self, capsys):
        setup_logging(level="INFO", format_type="pretty")
        get_logger("lascoux.cli").bind(command="expand").warning("careful")
        err = capsys.readouterr().err
        assert "WARNING" in err and "careful" in err
        assert "command=expand" in err

    def test_level_filters(self, capsys):
        setup_logging(level="ERROR", format_type="json")
        get_logger("lascoux.cli").info("quiet")
        assert capsys.readouterr().err == ""

    def test_file_copy(self, tmp_path, capsys):
        path = tmp_path / "lascoux.log"
        setup_logging(level="INFO", format_type="json", log_file=str(path))
        get_logger("lascoux.tests").info("to file")
        logger.remove()
        assert "to file" in path.read_text()
        assert "to file" in capsys.readouterr().err

    def test_execution_time(self, log_records):
        @log_execution_time(level="INFO")
        def work():
            return 7

        assert work() == 7
        timing = [r for r in log_records if "execution_time_ms" in r["extra"]]
        assert timing and timing[-1]["level"].name == "INFO"

    def test_library_records(self, log_records):
        from lascoux.polynomials import grothendieck
        from lascoux.heckewords import Permutation

        grothendieck(Permutation.simple(1))
        assert any("grothendieck" in r["message"] for r in log_records)

    @pytest.fixture(autouse=True)
    def _restore_handlers(self):
        yield
        logger.remove()
        logger.disable("lascoux")
