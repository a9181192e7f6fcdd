"""Top-level construction: pick a route for (m, n, k) and return a verified SMR."""

from enum import Enum
from typing import List, Optional, Tuple

from .base import fixed_smr_4_12, mr_to_smr, smr3_even
from .block_plan import assemble
from .core import Params, SparseRectangle, params_new
from .errors import SearchExhaustedError
from .even_partitions import build_partition_even
from .odd_n import merged_square, odd_assembly, smr3_odd
from .odd_partitions import build_partition_odd, smr_square_k3
from .search import SearchBudget, search_mr, search_smr
from .verifier import ensure, verify_smr

__all__ = ["Route", "assemble", "enumerate_params", "generate", "generate_with_route"]


class Route(str, Enum):
    """How a rectangle was produced."""

    BASE = "base-3xn"
    EVEN_K = "even-k"
    ODD_K = "odd-k"
    FIXED = "fixed-4x12"
    SQUARE_K3 = "square-k3"
    MERGED_SQUARE = "merged-square"
    ODD_ASSEMBLY = "odd-assembly"
    MR_SHIFT = "mr-shift"
    DIRECT_SEARCH = "direct-search"


def _odd_n(params: Params, budget: SearchBudget) -> Tuple[SparseRectangle, Route]:
    if params.k == params.n:
        return smr3_odd(params.n, budget), Route.BASE
    if params.k % 3 == 0:
        return merged_square(params.m, params.n), Route.MERGED_SQUARE
    nodes = 0
    elapsed = 0
    try:
        rect = odd_assembly(params.m, params.n, params.k, budget)
    except SearchExhaustedError as e:
        rect = None
        nodes, elapsed = e.nodes, e.elapsed_ms or 0
    if rect is not None:
        return rect, Route.ODD_ASSEMBLY
    if params.cells % 2:
        result = search_mr(params, budget)
        nodes += result.nodes
        elapsed += result.elapsed_ms
        if result.found:
            return mr_to_smr(result.rectangle, params), Route.MR_SHIFT
    result = search_smr(params, budget)
    nodes += result.nodes
    elapsed += result.elapsed_ms
    if result.found:
        return result.rectangle, Route.DIRECT_SEARCH
    raise SearchExhaustedError(str(params), nodes, elapsed)


def generate_with_route(
    m: int, n: int, k: int, budget: Optional[SearchBudget] = None
) -> Tuple[SparseRectangle, Route]:
    """
    Build an SMR(m,n;k,3) and report which construction produced it.

    Args:
        m: Row count
        n: Column count
        k: Filled cells per row
        budget: Limits for any search the route needs

    Returns:
        (rectangle, route); the rectangle always passes verify_smr

    Raises:
        InadmissibleParametersError: If (m, n, k) is not admissible
        SearchExhaustedError: If a search route runs out of budget
        ConstructionDefectError: If a construction yields an invalid array
    """
    params = params_new(m, n, k)
    budget = budget or SearchBudget()
    if (m, n, k) == (4, 12, 9):
        rect, route = fixed_smr_4_12(), Route.FIXED
    elif k == 3:
        rect, route = smr_square_k3(n), Route.SQUARE_K3
    elif n % 2:
        rect, route = _odd_n(params, budget)
    elif k == n:
        rect, route = smr3_even(n), Route.BASE
    elif k % 2 == 0:
        base = smr3_even(n)
        rect = assemble(base, build_partition_even(n, k), params)
        route = Route.EVEN_K
    else:
        base = smr3_even(n)
        rect = assemble(base, build_partition_odd(n, k, budget), params)
        route = Route.ODD_K
    ensure(verify_smr(rect, params), f"{params} via {route.value}")
    return rect, route


def generate(
    m: int, n: int, k: int, budget: Optional[SearchBudget] = None
) -> SparseRectangle:
    """Build a verified SMR(m,n;k,3); see generate_with_route."""
    return generate_with_route(m, n, k, budget)[0]


def enumerate_params(n_max: int) -> List[Params]:
    """All admissible (m, n, k) with n <= n_max, sorted by (n, m)."""
    found = []
    for n in range(3, n_max + 1):
        for m in range(3, n + 1):
            if (3 * n) % m:
                continue
            k = 3 * n // m
            params = Params.unchecked(m, n, k)
            if params.admissible:
                found.append(params)
    return found
