"""Flow assembly for majorizer pipelines."""

from .catalyst_search import CatalystSearch, start

__all__ = ["CatalystSearch", "start"]
