"""
CatalystSearch - prefilter, per-dimension restart search and report as a PocketFlow graph.
"""

from pocketflow import Flow

from ..catalysis import CatalystSearchReport, SearchConfig
from ..functionals import ScanConfig
from ..nodes import DimensionSearchNode, PrefilterNode, SearchReportNode
from ..utils.utils import get_logger
from ..vectors import DVector

logger = get_logger(__name__)


class CatalystSearch:
    """Encapsulates one catalyst search over a pair of vectors.

    Parameters
    ----------
    x, y : DVector
        The pair; x must be strictly positive and Σx = Σy.
    search_cfg : SearchConfig
        Dimensions, restarts, seed and descent settings.
    scan_cfg : ScanConfig
        Scanner settings for the trumping prefilter.

    Attributes
    ----------
    shared : dict
        Runtime state passed through the nodes; ``shared['report']`` holds the result.
    flow : Flow
        Prefilter → dimension search (looping over dimensions) → report.

    """

    def __init__(
        self, x: DVector, y: DVector, search_cfg: SearchConfig, scan_cfg: ScanConfig
    ):
        self.search_cfg = search_cfg
        self.shared = {
            "x": x,
            "y": y,
            "search_cfg": search_cfg,
            "scan_cfg": scan_cfg,
            "dim": 1,
            "dim_tried": [],
            "best_violation_per_dim": [],
            "seeds_used": 0,
            "catalyst": None,
            "prefilter": None,
        }
        self._build_flow()

    def _build_flow(self):
        prefilter_node = PrefilterNode()
        search_node = DimensionSearchNode()
        report_node = SearchReportNode()

        prefilter_node.next(report_node, action="fails")
        prefilter_node.next(report_node, action="found")
        prefilter_node.next(report_node, action="exhausted")
        prefilter_node.next(search_node, action="search")
        search_node.next(search_node, action="next")
        search_node.next(report_node, action="found")
        search_node.next(report_node, action="exhausted")

        self.flow = Flow(start=prefilter_node)

    def run(self) -> CatalystSearchReport:
        logger.info("=== CATALYST SEARCH ===")
        logger.info(f"Dimensions: 1..{self.search_cfg.max_dim}")
        logger.info(f"Restarts per dimension: {self.search_cfg.restarts_per_dim}")
        logger.info(f"Seed: {self.search_cfg.seed}")
        self.flow.run(self.shared)
        return self.shared["report"]


def start(
    x: DVector, y: DVector, search_cfg: SearchConfig, scan_cfg: ScanConfig
) -> CatalystSearchReport:
    """Instantiate :class:`CatalystSearch` and run its flow.

    Args:
        x : First vector.
        y : Second vector.
        search_cfg : Search settings.
        scan_cfg : Scanner settings for the prefilter.

    Returns:
        The :class:`CatalystSearchReport` produced by the report node.

    """
    return CatalystSearch(x, y, search_cfg, scan_cfg).run()
