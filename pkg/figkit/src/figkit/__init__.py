"""Static figure rendering for the qubit-oscillator simulation CSV output."""

__version__ = "0.1.0"

from .render import FigkitError, FigureSpec, MissingColumn, Style, load_csv, render

__all__ = ["FigkitError", "FigureSpec", "MissingColumn", "Style", "load_csv", "render"]
