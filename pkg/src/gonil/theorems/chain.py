from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from gonil.exceptions import InputError
from gonil.linalg.elimination import span
from gonil.linalg.matrix import Matrix, Vector, unit_vector


@dataclass(frozen=True)
class ImageChain:
    dims: tuple[int, ...]
    stages: tuple[tuple[Vector, ...], ...]


def adjoint_image_chain(maps: Sequence[Matrix], dim: int | None = None) -> ImageChain:
    """Iterates ``S_{m+1} = sum_i maps[i](S_m)`` from ``S_0 = V``.

    Stops once a stage is zero or has the same dimension as the one
    before it. Stages are echelon bases.

    Raises:
        InputError: If the maps are not square of one size, or ``dim`` is
            missing for an empty list.
    """
    if dim is None:
        if not maps:
            raise InputError("dim is required when no maps are given")
        dim = maps[0].rows
    for M in maps:
        if not M.is_square or M.rows != dim:
            raise InputError("Maps must be square of the same size", errors={"dim": dim})
    current = span([unit_vector(dim, i) for i in range(dim)])
    stages = [current]
    while current:
        nxt = span([M.apply(v) for M in maps for v in current])
        if len(nxt) == len(current):
            break
        stages.append(nxt)
        current = nxt
    return ImageChain(tuple(len(s) for s in stages), tuple(stages))
