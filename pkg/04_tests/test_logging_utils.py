import logging

from utils.logging_utils import LOG_DIR_ENV, setup_logger


def test_log_file_in_override_directory(tmp_path, monkeypatch):
    monkeypatch.setenv(LOG_DIR_ENV, str(tmp_path))
    logger = setup_logger("verify_test")
    logger.info("hello")
    for handler in logger.handlers:
        handler.flush()
    files = list(tmp_path.glob("verify_test_*.log"))
    assert len(files) == 1
    assert "INFO - hello" in files[0].read_text()


def test_repeated_setup_keeps_one_handler_each(monkeypatch):
    monkeypatch.setenv(LOG_DIR_ENV, "")
    setup_logger("repeat_test")
    logger = setup_logger("repeat_test")
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0], logging.StreamHandler)
    assert not logging.getLogger("graphs").handlers
