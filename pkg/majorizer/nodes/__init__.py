"""Node package exports for majorizer.

Expose the node classes so the flows can import them from ``majorizer.nodes``.
"""

from .prefilter import PrefilterNode
from .dimension_search import DimensionSearchNode
from .search_report import SearchReportNode

__all__ = [
    "PrefilterNode",
    "DimensionSearchNode",
    "SearchReportNode",
]
