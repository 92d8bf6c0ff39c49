"""DC coupling matrix and pre-disturbance equilibrium."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg
from loguru import logger
from scipy.sparse import csr_matrix

from laasim.errors import DisconnectedNetworkError
from laasim.grid.model import EquilibriumDispatch

if TYPE_CHECKING:
    from laasim.grid.model import NetworkModel


def build_coupling_matrix(model: NetworkModel) -> np.ndarray:
    """Susceptance Laplacian ``Cft.T @ diag(b) @ Cft`` in p.u. on ``base_mva``.

    Parallel lines between the same pair of zones add up.

    Examples:
        >>> from laasim.grid.model import Line, NetworkModel, SyncGenerator, Zone
        >>> from laasim.grid.matrix import build_coupling_matrix
        >>> model = NetworkModel(
        ...     zones=(Zone("A", 50.0), Zone("B", 50.0)),
        ...     lines=(Line("A", "B", 10.0),),
        ...     generators=(SyncGenerator("G1", "A", 200.0),),
        ... )
        >>> build_coupling_matrix(model).tolist()
        [[10.0, -10.0], [-10.0, 10.0]]
    """
    n_lines, n_zones = len(model.lines), model.n_zones
    index = model.zone_index
    rows = np.r_[np.arange(n_lines), np.arange(n_lines)]
    cols = np.r_[
        [index[line.from_zone] for line in model.lines],
        [index[line.to_zone] for line in model.lines],
    ].astype(int)
    data = np.r_[np.ones(n_lines), -np.ones(n_lines)]
    cft = csr_matrix((data, (rows, cols)), shape=(n_lines, n_zones))
    b = csr_matrix(np.diag([line.susceptance for line in model.lines]))
    return np.asarray((cft.T @ b @ cft).toarray(), dtype=float)


def solve_equilibrium(model: NetworkModel) -> EquilibriumDispatch:
    """Dispatch generators pro-rata to rating and solve the DC flow for the angles.

    Net load (demand minus imports) is shared by every generator in proportion to
    its rating. Zone 0 is the angle reference.

    Raises:
        DisconnectedNetworkError: If the reduced coupling matrix is singular.
    """
    ratings = np.array([g.rating for g in model.generators], dtype=float)
    net_load = model.total_demand - model.net_import
    setpoints = ratings * net_load / ratings.sum()

    injection = -model.demand.copy()
    for gen, setpoint in zip(model.generators, setpoints, strict=True):
        injection[model.zone_index[gen.zone]] += setpoint
    for ic in model.interconnectors:
        injection[model.zone_index[ic.zone]] += ic.injection

    coupling = build_coupling_matrix(model)
    p_pu = injection / model.base_mva
    angles = np.zeros(model.n_zones)
    if model.n_zones > 1:
        try:
            angles[1:] = scipy.linalg.solve(coupling[1:, 1:], p_pu[1:], assume_a="pos")
        except (np.linalg.LinAlgError, ValueError) as e:
            msg = f"Reduced coupling matrix is singular: {e}"
            raise DisconnectedNetworkError(msg) from e

    residual = float(np.max(np.abs(p_pu - coupling @ angles)))
    logger.debug(
        f"Equilibrium for '{model.name}': net load {net_load:.1f} MW, "
        f"max residual {residual:.3e} p.u.",
    )
    return EquilibriumDispatch(
        setpoints=setpoints,
        angles=angles,
        injection=injection,
        residual=residual,
    )
