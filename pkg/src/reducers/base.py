"""Abstract reducer: stateless, turns a term list into a canonical form."""
from abc import ABC, abstractmethod

from ..forms import CanonicalForm, TermList


class BaseReducer(ABC):
    """Reducers keep no state between calls; the same instance may be shared across threads."""

    name: str = ""

    @abstractmethod
    def reduce(self, terms: TermList) -> CanonicalForm:
        """Return {A, B, C, D} with A q + B q i + C q j + D q k = sum of m q n over terms.
        terms: sequence of (m, n) quaternion pairs; empty means the zero function.
        """
        pass

    def __call__(self, terms: TermList) -> CanonicalForm:
        return self.reduce(terms)
