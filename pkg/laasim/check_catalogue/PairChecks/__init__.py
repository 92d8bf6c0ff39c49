from .pair_column_inequality import PairColumnInequality
from .pair_column_ordering import PairColumnOrdering

__all__ = ["PairColumnInequality", "PairColumnOrdering"]
