from .min_max_arg_check import min_max_arg_check
from .min_max_filter import Closed, min_max_filter

__all__ = ["Closed", "min_max_arg_check", "min_max_filter"]
