"""Figure renderer for warptunnel CSV datasets."""

from .render import FigureSpec, RenderSummary, load_csv, render

__all__ = ["FigureSpec", "RenderSummary", "load_csv", "render"]

__version__ = "0.1.0"
