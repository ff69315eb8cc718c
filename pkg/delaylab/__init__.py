"""delaylab: exact delay conditions for asynchronous circuits."""

__version__ = "0.1.0"
