"""Matrix method: R = sum [m][n]+, then split R into four quaternion operators."""
import logging

from ..forms import CanonicalForm, TermList
from ..matrix_rep import decode, encode_standard, encode_transmuted, zero
from .base import BaseReducer

logger = logging.getLogger(__name__)


def operator_sum(terms: TermList):
    """Single operator matrix of the whole term list."""
    r = zero()
    for m, n in terms:
        r = r + encode_standard(m) @ encode_transmuted(n)
    return r


class MatrixMethod(BaseReducer):
    name = "matrix"

    def reduce(self, terms: TermList) -> CanonicalForm:
        logger.debug("Matrix method over %s terms.", len(terms))
        return decode(operator_sum(terms))
