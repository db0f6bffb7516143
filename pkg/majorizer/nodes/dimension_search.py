import math

from pocketflow import BatchNode

from ..catalysis import accept, descend, draw_start
from ..utils.utils import get_logger

logger = get_logger(__name__)


class DimensionSearchNode(BatchNode):
    """Run every seeded restart for one catalyst dimension.

    Restarts are independent descents; candidates are rechecked in restart order, so the
    first accepted restart (and therefore the report) depends only on the seed.

    Returns (routing):
    - ``found`` once a candidate passes the full-precision recheck.
    - ``next`` to try the following dimension.
    - ``exhausted`` after ``max_dim``.
    """

    def prep(self, shared):
        """Build one work item per seeded restart for the current dimension.

        Args:
            shared : Shared flow state. Expected to include ``dim``, ``search_cfg``, ``x``
                and ``y``.

        Returns:
            A list of ``(xa, ya, dim, restart, cfg)`` tuples.

        """
        dim = shared["dim"]
        cfg = shared["search_cfg"]
        logger.info(f"=== CATALYST SEARCH PHASE (dim {dim}) ===")
        xa, ya = shared["x"].array, shared["y"].array
        return [(xa, ya, dim, k, cfg) for k in range(cfg.restarts_per_dim)]

    def exec(self, item):
        """Descend from the seeded start of one restart and tag the result with it."""
        xa, ya, dim, restart, cfg = item
        result = descend(xa, ya, draw_start(dim, restart, cfg.seed), cfg)
        result["restart"] = restart
        return result

    def post(self, shared, prep_res, exec_res):
        """Record the best violation and recheck candidates in restart order.

        Args:
            shared : Shared flow state; counters, ``catalyst`` and ``dim`` are updated.
            prep_res : The work items from :meth:`prep`.
            exec_res : One descent result per restart.

        Returns:
            ``found``, ``next`` or ``exhausted``.

        """
        dim = shared["dim"]
        cfg = shared["search_cfg"]
        shared["dim_tried"].append(dim)
        shared["seeds_used"] += len(exec_res)
        best = min((r["raw_violation"] for r in exec_res), default=math.inf)
        shared["best_violation_per_dim"].append(best)
        logger.info(f"Best violation at dim {dim}: {best:.3e}")

        for result in exec_res:
            if result["raw_violation"] > cfg.violation_tol:
                continue
            catalyst = accept(shared["x"], shared["y"], result["z"])
            if catalyst is not None:
                logger.info(f"Catalyst found at dim {dim} (restart {result['restart']})")
                shared["catalyst"] = catalyst.z
                return "found"

        if dim >= cfg.max_dim:
            shared["reason"] = f"no catalyst found up to dimension {cfg.max_dim}"
            return "exhausted"
        shared["dim"] = dim + 1
        return "next"
