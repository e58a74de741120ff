"""Tests for logging configuration."""

import logging

import pytest

from src.logging_config import HANDLER_NAME, get_logger, setup_logging, timed


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_single_handler(self):
        """Test that repeated setup keeps one named stderr handler and updates its level."""
        setup_logging("DEBUG")
        logger = setup_logging("info")
        own = [handler for handler in logger.handlers if handler.get_name() == HANDLER_NAME]
        assert len(own) == 1
        assert isinstance(own[0], logging.StreamHandler)
        assert own[0].level == logging.INFO
        setup_logging("WARNING")

    def test_foreign_handlers_left_alone(self):
        """Test that handlers attached by someone else neither block nor duplicate setup."""
        logger = logging.getLogger("sln_sheaves")
        foreign = logging.NullHandler()
        logger.addHandler(foreign)
        try:
            setup_logging("ERROR")
            own = [handler for handler in logger.handlers if handler.get_name() == HANDLER_NAME]
            assert len(own) == 1
            assert own[0].level == logging.ERROR
            assert foreign.level == logging.NOTSET
        finally:
            logger.removeHandler(foreign)
            setup_logging("WARNING")

    def test_unknown_level(self):
        """Test that an unknown level name is rejected."""
        with pytest.raises(ValueError):
            setup_logging("LOUD")

    def test_child_logger(self):
        """Test module loggers hang below sln_sheaves."""
        assert get_logger("green.kostka").name == "sln_sheaves.green.kostka"


class TestTimed:
    """Tests for the timing context."""

    def test_logs_elapsed_time(self):
        """Test that the label and elapsed seconds are logged at DEBUG."""
        records: list[logging.LogRecord] = []

        class Collect(logging.Handler):
            def emit(self, record: logging.LogRecord) -> None:
                records.append(record)

        logger = logging.getLogger("sln_sheaves.tests.timed")
        logger.setLevel(logging.DEBUG)
        handler = Collect()
        logger.addHandler(handler)
        try:
            with timed(logger, "census"):
                pass
        finally:
            logger.removeHandler(handler)
        assert len(records) == 1
        assert records[0].levelno == logging.DEBUG
        assert records[0].getMessage().startswith("census: ")
        assert records[0].getMessage().endswith("s")
