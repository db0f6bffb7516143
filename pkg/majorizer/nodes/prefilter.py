from pocketflow import Node

from ..relations import majorize, trumped
from ..utils.utils import get_logger
from ..vectors import DVector

logger = get_logger(__name__)


class PrefilterNode(Node):
    """Rule out impossible searches and handle the trivial catalyst.

    Notes
    -----
    A failed trumping verdict proves that no catalyst of any dimension exists. When x is
    already majorized by y the scalar catalyst z = (1) is returned without searching.

    Returns (routing):
    - ``fails`` when the trumping check fails.
    - ``found`` when majorization already holds.
    - ``search`` when dimensions ≥ 2 must be searched.
    - ``exhausted`` when ``max_dim`` is 1.
    """

    def prep(self, shared):
        """Read the pair and scanner settings from the shared state.

        Args:
            shared : Shared flow state. Expected to include ``x``, ``y`` and ``scan_cfg``.

        Returns:
            The tuple ``(x, y, scan_cfg)``.

        """
        logger.info("=== PREFILTER PHASE ===")
        return shared["x"], shared["y"], shared["scan_cfg"]

    def exec(self, prep_res):
        """Evaluate trumping and plain majorization of the pair.

        Args:
            prep_res : The tuple produced by :meth:`prep`.

        Returns:
            The trumping verdict and the majorization verdict.

        """
        x, y, scan_cfg = prep_res
        return trumped(x, y, scan_cfg), majorize(x, y)

    def post(self, shared, prep_res, exec_res):
        """Record the verdicts and the dimension-1 attempt, then choose the route.

        Args:
            shared : Shared flow state; ``prefilter``, ``reason``, ``catalyst`` and ``dim``
                are written here.
            prep_res : Unused.
            exec_res : The verdict pair from :meth:`exec`.

        Returns:
            One of ``fails``, ``found``, ``search`` or ``exhausted``.

        """
        prefilter, direct = exec_res
        shared["prefilter"] = prefilter
        logger.info(f"Trumping prefilter: {prefilter.status.value}")
        if prefilter.fails:
            shared["reason"] = "trumping fails, so no catalyst of any dimension exists"
            return "fails"
        shared["dim_tried"].append(1)
        shared["best_violation_per_dim"].append(float(sum(-m for m in direct.margins if m < 0)))
        if direct.holds:
            shared["catalyst"] = DVector([1], exact=True)
            shared["reason"] = "x is majorized by y; the scalar catalyst suffices"
            return "found"
        if shared["search_cfg"].max_dim < 2:
            return "exhausted"
        shared["dim"] = 2
        return "search"
