"""Involution method: split each n into real parts with conjugate identities, no matrices.

A = sum m w, B = sum m x, C = sum m y, D = sum m z where n = w + x i + y j + z k and
w = (n + conj(n))/2, x = (gconj(n, i) - n) i / 2 (j, k alike).
"""
import logging

from ..forms import CanonicalForm, TermList
from ..quaternion import ZERO, Axis, add, component, scale
from .base import BaseReducer

logger = logging.getLogger(__name__)

_SLOT_AXES = (Axis.ONE, Axis.I, Axis.J, Axis.K)


class InvolutionMethod(BaseReducer):
    name = "involution"

    def reduce(self, terms: TermList) -> CanonicalForm:
        logger.debug("Involution method over %s terms.", len(terms))
        slots = [ZERO, ZERO, ZERO, ZERO]
        for m, n in terms:
            for index, axis in enumerate(_SLOT_AXES):
                # extracted parts are real
                slots[index] = add(slots[index], scale(component(n, axis), m))
        return CanonicalForm(*slots)
