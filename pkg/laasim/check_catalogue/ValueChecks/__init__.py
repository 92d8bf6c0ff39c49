from .column_values_to_be_between import ColumnValuesToBeBetween

__all__ = ["ColumnValuesToBeBetween"]
