"""
Logging for delaylab.

Loguru sinks are built from configs/logging.yml for the active APP_ENV. Fields
bound with ``logger.bind`` (``dc``, ``law``, ``node``) are rendered after the
level in every sink.
"""
import logging
import sys

from loguru import logger

from delaylab.config import Config

CONTEXT_KEYS = ("law", "dc", "node")

FALLBACK_CONFIG = {
    "level": Config.LOG_LEVEL,
    "format": "{time:HH:mm:ss} | {level: <8} |{extra[context]} {name} - {message}",
    "sinks": {"console": {"colorize": False}},
}


def parse_level(level) -> int:
    """Level name or number to the loguru severity number."""
    if isinstance(level, int):
        return level
    try:
        return logger.level(str(level).upper()).no
    except ValueError:
        return logging.INFO


def render_context(record) -> None:
    extra = record["extra"]
    fields = [f"{key}={extra[key]}" for key in CONTEXT_KEYS if key in extra]
    extra["context"] = f" [{' '.join(fields)}]" if fields else ""


class InterceptHandler(logging.Handler):
    """Forwards stdlib logging records (networkx, pyvcd) into loguru."""

    def emit(self, record):
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame, depth = logging.currentframe(), 2
        while frame and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


class PackageLevels:
    """Per-package thresholds from the ``loggers`` section; the longest matching prefix wins."""

    def __init__(self, loggers):
        self.levels = {
            name: parse_level(cfg["level"])
            for name, cfg in (loggers or {}).items()
            if cfg and "level" in cfg
        }

    def __call__(self, record) -> bool:
        name = record["name"] or ""
        matches = [prefix for prefix in self.levels if name.startswith(prefix)]
        if not matches:
            return True
        return record["level"].no >= self.levels[max(matches, key=len)]


def _stderr(message) -> None:
    # sys.stderr is looked up per write
    sys.stderr.write(message)


def _file_sink(sink_config, log_config, default_level, package_filter):
    return dict(
        sink=sink_config["path"],
        level=parse_level(sink_config.get("level", default_level)),
        format=log_config["format"],
        rotation=sink_config.get("rotation", log_config.get("rotation")),
        retention=sink_config.get("retention", log_config.get("retention")),
        compression=log_config.get("compression"),
        filter=package_filter,
    )


def configure_logging(log_config=None, console_level=None) -> None:
    """(Re)build every sink from a merged logging config.

    ``console_level`` overrides the console threshold.
    """
    if log_config is None:
        try:
            log_config = Config.load_yaml("logging")
        except FileNotFoundError:
            log_config = FALLBACK_CONFIG

    level = log_config.get("level", Config.LOG_LEVEL)
    sinks = log_config.get("sinks", {})
    package_filter = PackageLevels(log_config.get("loggers"))

    console = sinks.get("console", {})
    colorize = console.get("colorize", False)
    console_format = log_config.get("color_format") if colorize else None
    handlers = [
        dict(
            sink=_stderr,
            level=parse_level(console_level or console.get("level", level)),
            format=console_format or log_config["format"],
            colorize=colorize,
            filter=package_filter,
        )
    ]
    if sinks.get("file"):
        handlers.append(_file_sink(sinks["file"], log_config, level, package_filter))
    if sinks.get("error_file"):
        handlers.append(_file_sink(sinks["error_file"], log_config, "ERROR", None))

    logger.configure(handlers=handlers, patcher=render_context)
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(parse_level(level))


def format_verdict_log(subject: str, status: str, counterexample=None) -> str:
    """Formats the one-line log message for a checker verdict."""
    message = f"{subject}: {status}"
    if counterexample:
        rendered = ", ".join(f"{k}={v}" for k, v in counterexample.items())
        message = f"{message} [{rendered}]"
    return message


configure_logging()

__all__ = ["logger", "configure_logging", "format_verdict_log"]
