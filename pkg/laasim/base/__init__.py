from .base_check import BaseCheck
from .results_typedict import (
    CheckTypedDict,
    KwargsParams,
    ResultCheckTypedDict,
    SummaryTypedDict,
    TabulateKwargs,
)

__all__ = [
    "BaseCheck",
    "CheckTypedDict",
    "KwargsParams",
    "ResultCheckTypedDict",
    "SummaryTypedDict",
    "TabulateKwargs",
]
