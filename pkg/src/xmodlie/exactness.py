"""Exactness checks for finite sequences of linear maps."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exact_linalg import Matrix, kernel

__all__ = ["ExactnessReport", "exactness_report"]


@dataclass
class ExactnessReport:
    """Dims, connecting-map ranks and defect dims of ``V_0 -> V_1 -> ... -> V_k``.

    ``defects[i]`` is ``dim Ker(out_i) - rank(in_i)`` at node i. With
    ``left_zero`` the sequence starts ``0 ->`` (so node 0 measures injectivity);
    with ``right_zero`` it ends ``-> 0`` (last node measures surjectivity).
    Nodes where the sequence makes no claim get ``None``.
    """

    names: list[str]
    dims: list[int]
    map_names: list[str]
    ranks: list[int]
    composite_ranks: list[int]
    defects: list[int | None]
    extra: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return all(r == 0 for r in self.composite_ranks) and all(not d for d in self.defects)

    def to_dict(self) -> dict:
        return {
            "objects": [{"name": n, "dim": d} for n, d in zip(self.names, self.dims)],
            "maps": [{"name": n, "rank": r} for n, r in zip(self.map_names, self.ranks)],
            "composite_ranks": list(self.composite_ranks),
            "defects": list(self.defects),
            "exact": self.exact,
            **self.extra,
        }


def exactness_report(names: Sequence[str], dims: Sequence[int], maps: Sequence[tuple[str, Matrix]],
                     left_zero: bool = True, right_zero: bool = True) -> ExactnessReport:
    if len(maps) != len(names) - 1:
        raise ValueError("need one map between each pair of consecutive objects")
    for k, (name, m) in enumerate(maps):
        if m.shape != (dims[k + 1], dims[k]):
            raise ValueError(f"map {name} has shape {m.shape}, expected {(dims[k + 1], dims[k])}")
    ranks = [m.rank() for _, m in maps]
    comps = [(maps[k + 1][1] @ maps[k][1]).rank() for k in range(len(maps) - 1)]
    defects: list[int | None] = []
    last = len(names) - 1
    for i in range(len(names)):
        rank_in = ranks[i - 1] if i > 0 else 0
        if i < last:
            ker_out = kernel(maps[i][1]).dim
        elif right_zero:
            ker_out = dims[i]
        else:
            defects.append(None)
            continue
        if i == 0 and not left_zero:
            defects.append(None)
            continue
        defects.append(ker_out - rank_in)
    return ExactnessReport(list(names), list(dims), [n for n, _ in maps], ranks, comps, defects)
