"""Restricted partition functions and the Diophantine equations they produce."""

from importlib.metadata import version, PackageNotFoundError

try:
    __version__ = version("denumerant")
except PackageNotFoundError:
    # Package is not installed
    __version__ = "0.0.0-dev"
