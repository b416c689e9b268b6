"""Logging for anc_sieve.

All modules log through the single ``AncLogger`` logger. `setup_logging` wires
it to an info log, a debug log and the console. The console handler writes to
stderr: stdout is reserved for command output, which must be byte-for-byte
reproducible.

Example:
    ```python
    from anc_sieve.logger import AncLogger, setup_logging

    setup_logging(
        info_log_filename="anc_sieve.info.log",
        debug_log_filename="anc_sieve.debug.log",
        std_out_level="info",
        file_mode="w",
    )
    AncLogger.info("Starting csp suite")
    ```
"""
import logging
import pathlib
import sys
from typing import Optional, Union

AncLogger = logging.getLogger("AncLogger")

FILE_FORMAT = "%(asctime)s %(levelname)-8s %(message)s"
CONSOLE_FORMAT = "%(asctime)s %(levelname)-8s %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(
    info_log_filename: Optional[Union[str, pathlib.Path]] = None,
    debug_log_filename: Optional[Union[str, pathlib.Path]] = None,
    std_out_level: str = "info",
    file_mode: str = "a",
) -> logging.Logger:
    """Configures AncLogger handlers.

    Calling this again replaces the handlers installed by a previous call.

    Args:
        info_log_filename: file receiving INFO and above; skipped if None
        debug_log_filename: file receiving DEBUG and above; skipped if None
        std_out_level: console level name, e.g. "debug", "info", "warning"
        file_mode: "a" to append to existing log files, "w" to overwrite

    Returns:
        The configured AncLogger.
    """
    level = logging.getLevelName(std_out_level.upper())
    if not isinstance(level, int):
        raise ValueError(f"Invalid std_out_level: '{std_out_level}'")

    AncLogger.setLevel(logging.DEBUG)
    AncLogger.propagate = False
    for handler in list(AncLogger.handlers):
        AncLogger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT, DATE_FORMAT))
    AncLogger.addHandler(console_handler)

    for filename, file_level in (
        (info_log_filename, logging.INFO),
        (debug_log_filename, logging.DEBUG),
    ):
        if filename is None:
            continue
        pathlib.Path(filename).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(filename, mode=file_mode, encoding="utf-8")
        file_handler.setLevel(file_level)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, DATE_FORMAT))
        AncLogger.addHandler(file_handler)

    return AncLogger
