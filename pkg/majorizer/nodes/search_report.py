from pocketflow import Node

from ..catalysis import Catalyst, CatalystSearchReport
from ..utils.utils import get_logger

logger = get_logger(__name__)


class SearchReportNode(Node):
    """Assemble the :class:`CatalystSearchReport` and store it as ``shared['report']``."""

    def prep(self, shared):
        """Pass the whole shared state through."""
        logger.info("=== REPORT PHASE ===")
        return shared

    def exec(self, shared):
        """Build the report from the search counters and the catalyst, if any."""
        z = shared.get("catalyst")
        return CatalystSearchReport(
            found=z is not None,
            catalyst=Catalyst(z) if z is not None else None,
            dim_tried=list(shared["dim_tried"]),
            best_violation_per_dim=list(shared["best_violation_per_dim"]),
            prefilter=shared.get("prefilter"),
            seeds_used=shared["seeds_used"],
            seed=shared["search_cfg"].seed,
            reason=shared.get("reason", ""),
        )

    def post(self, shared, prep_res, exec_res):
        """Store the report under ``shared["report"]`` and end the flow."""
        shared["report"] = exec_res
        return None
