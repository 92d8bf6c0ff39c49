from .column_values_to_be_in_list import ColumnValuesToBeInList

__all__ = ["ColumnValuesToBeInList"]
