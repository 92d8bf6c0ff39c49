from .column_values_to_be_unique import ColumnValuesToBeUnique

__all__ = ["ColumnValuesToBeUnique"]
