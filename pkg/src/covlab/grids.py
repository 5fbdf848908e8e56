"""Uniform grids over the truncation box, bilinear field interpolation,
and the shared binary/CSV export formats.

Fields live on a tensor grid ``x[i] = xlo + i*h``, ``t[j] = tlo + j*h``
(same spacing in both axes).  Scalar fields are ``(nx, nt)`` arrays;
vector/matrix fields carry trailing component axes.  Nodes outside the
domain (or inside an exclusion collar) hold NaN, and interpolation only
succeeds where all four surrounding nodes are finite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

GRID_MAGIC = b"COVGRID1\n"


@dataclass(frozen=True)
class Box:
    xlo: float
    xhi: float
    tlo: float
    thi: float

    def contains(self, pts: np.ndarray) -> np.ndarray:
        pts = np.atleast_2d(pts)
        return (
            (pts[:, 0] >= self.xlo)
            & (pts[:, 0] <= self.xhi)
            & (pts[:, 1] >= self.tlo)
            & (pts[:, 1] <= self.thi)
        )

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.xlo, self.xhi, self.tlo, self.thi)


class Grid2D:
    """Tensor grid with equal spacing ``h`` in x and t."""

    def __init__(self, box: Box, h: float):
        self.box = box
        self.h = float(h)
        # snap node counts so the grid covers the box exactly
        nx = int(round((box.xhi - box.xlo) / h)) + 1
        nt = int(round((box.thi - box.tlo) / h)) + 1
        self.x = box.xlo + h * np.arange(nx)
        self.t = box.tlo + h * np.arange(nt)
        self.nx = nx
        self.nt = nt

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.nt)

    def meshes(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.x, self.t, indexing="ij")

    def nodes(self) -> np.ndarray:
        X, T = self.meshes()
        return np.stack([X.ravel(), T.ravel()], axis=1)

    def interp(self, field: np.ndarray, pts: np.ndarray) -> np.ndarray:
        """Bilinear interpolation of ``field`` at ``pts`` of shape (m, 2).

        Returns an array of shape ``(m,) + field.shape[2:]``.  Queries whose
        surrounding nodes include NaN (or that fall outside the box) come
        back NaN.
        """
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        fx = (pts[:, 0] - self.box.xlo) / self.h
        ft = (pts[:, 1] - self.box.tlo) / self.h
        inside = (fx >= 0) & (fx <= self.nx - 1) & (ft >= 0) & (ft <= self.nt - 1)
        i = np.clip(np.floor(fx).astype(int), 0, self.nx - 2)
        j = np.clip(np.floor(ft).astype(int), 0, self.nt - 2)
        a = fx - i
        b = ft - j
        extra = field.ndim - 2
        sh = (-1,) + (1,) * extra
        a = a.reshape(sh)
        b = b.reshape(sh)
        f00 = field[i, j]
        f10 = field[i + 1, j]
        f01 = field[i, j + 1]
        f11 = field[i + 1, j + 1]
        out = (
            f00 * (1 - a) * (1 - b)
            + f10 * a * (1 - b)
            + f01 * (1 - a) * b
            + f11 * a * b
        )
        bad = ~inside
        if np.any(bad):
            out = np.asarray(out, dtype=float)
            out[bad.reshape(bad.shape + (1,) * extra) * np.ones_like(out, dtype=bool)] = np.nan
        return out

    def node_index(self, pts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Nearest node indices for points (m, 2)."""
        pts = np.atleast_2d(pts)
        i = np.clip(np.round((pts[:, 0] - self.box.xlo) / self.h).astype(int), 0, self.nx - 1)
        j = np.clip(np.round((pts[:, 1] - self.box.tlo) / self.h).astype(int), 0, self.nt - 1)
        return i, j


def central_gradient(grid: Grid2D, field: np.ndarray) -> np.ndarray:
    """Second-order central differences of a sampled field.

    Returns shape ``field.shape + (2,)`` with the derivative axis last,
    ordered (d/dx, d/dt).  One-sided at array edges; NaN wherever a stencil
    neighbour is NaN.
    """
    h = grid.h
    dx = np.full(field.shape, np.nan)
    dt = np.full(field.shape, np.nan)
    dx[1:-1] = (field[2:] - field[:-2]) / (2 * h)
    dt[:, 1:-1] = (field[:, 2:] - field[:, :-2]) / (2 * h)
    return np.stack([dx, dt], axis=-1)


def save_grid(path, grid: Grid2D, name: str, field: np.ndarray) -> None:
    """Binary grid export: magic, one JSON header line, raw float64."""
    header = {
        "n": 2,
        "grid_n": grid.nx - 1,
        "box": list(grid.box.as_tuple()),
        "h": grid.h,
        "name": name,
        "shape": list(field.shape),
    }
    with open(path, "wb") as f:
        f.write(GRID_MAGIC)
        f.write((json.dumps(header) + "\n").encode())
        f.write(np.ascontiguousarray(field, dtype="<f8").tobytes())


def load_grid(path) -> tuple[dict, np.ndarray]:
    with open(path, "rb") as f:
        magic = f.read(len(GRID_MAGIC))
        if magic != GRID_MAGIC:
            raise ValueError(f"not a covlab grid file: {path}")
        header = json.loads(f.readline().decode())
        data = np.frombuffer(f.read(), dtype="<f8").reshape(header["shape"])
    return header, data


def write_csv(path, columns: dict[str, np.ndarray]) -> None:
    names = list(columns)
    arrs = [np.asarray(columns[k]).ravel() for k in names]
    rows = np.stack(arrs, axis=1)
    with open(path, "w") as f:
        f.write(",".join(names) + "\n")
        for row in rows:
            f.write(",".join(format(v, ".17g") for v in row) + "\n")
