from .main import buildParser, run, setupLogging

__all__ = ["buildParser", "run", "setupLogging"]
