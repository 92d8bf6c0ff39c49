from __future__ import annotations

from collections.abc import Callable

import pandas as pd
import polars as pl
import pyarrow as pa
import pytest
from _pytest.fixtures import SubRequest

from tests.utils.types import ReturnT


def polars_df(data: dict[str, list]) -> pl.DataFrame:
    return pl.DataFrame(data)


def polars_lf(data: dict[str, list]) -> pl.LazyFrame:
    return pl.LazyFrame(data)


def pandas_df(data: dict[str, list]) -> pd.DataFrame:
    return pd.DataFrame(data)


def pyarrow_table(data: dict[str, list]) -> pa.Table:
    return pa.Table.from_pydict(data)


def create_frame_fixture(func: Callable[[], dict[str, list]]) -> Callable:
    """Turn a data factory into a fixture parametrized over every frame backend."""
    params = [
        ("pandas", pandas_df),
        ("polars_df", polars_df),
        ("polars_lf", polars_lf),
        ("pyarrow_table", pyarrow_table),
    ]

    @pytest.fixture(
        params=params,
        ids=[param[0] for param in params],
    )
    def wrapper(request: SubRequest) -> ReturnT:
        _, df_factory = request.param
        return df_factory(func())

    return wrapper
