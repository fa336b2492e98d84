"""Reduction methods for general term lists, by name."""
import logging
from concurrent.futures import ThreadPoolExecutor

from .. import config
from ..forms import ZERO_FORM, CanonicalForm, TermList, add_forms
from .base import BaseReducer
from .involution_method import InvolutionMethod
from .matrix_method import MatrixMethod

logger = logging.getLogger(__name__)

REDUCERS: dict[str, BaseReducer] = {
    MatrixMethod.name: MatrixMethod(),
    InvolutionMethod.name: InvolutionMethod(),
}


def get_reducer(name: str) -> BaseReducer:
    try:
        return REDUCERS[name]
    except KeyError:
        raise ValueError(f"unknown reduction method {name!r} (choose from {', '.join(REDUCERS)})") from None


def reduce_partitioned(
    terms: TermList,
    method: str = "matrix",
    workers: int | None = None,
    partition_size: int | None = None,
) -> CanonicalForm:
    """Reduce contiguous partitions of the term list on a thread pool and add the partial forms.
    Partials are summed in partition order, so the result does not depend on scheduling.
    With one worker the whole list goes to the reducer in a single call.
    """
    reducer = get_reducer(method)
    workers = config.REDUCE_WORKERS if workers is None else max(1, workers)
    size = config.PARTITION_SIZE if partition_size is None else max(1, partition_size)
    terms = list(terms)
    chunks = [terms[i:i + size] for i in range(0, len(terms), size)]
    if workers == 1 or len(chunks) <= 1:
        return reducer.reduce(terms)
    logger.debug("Reducing %s terms in %s partitions on %s threads.", len(terms), len(chunks), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(reducer.reduce, chunks))
    total = ZERO_FORM
    for partial in partials:
        total = add_forms(total, partial)
    return total


__all__ = [
    "BaseReducer",
    "InvolutionMethod",
    "MatrixMethod",
    "REDUCERS",
    "get_reducer",
    "reduce_partitioned",
]
