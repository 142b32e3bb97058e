"""Budgets and sample sizes, gathered in one place."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    rotations: int = 10**7  # rotation systems an exhaustive genus search may visit
    large_rotations: int = 10**9  # opt-in ceiling for the pruned planarity sweep
    cover_classes: int = 1 << 20
    lane_assignments: int = 10**6


@dataclass(frozen=True)
class AcceptanceConfig:
    seed: int = 20240601
    random_multigraphs: int = 300
    subdivisions: int = 10
    random_drawings: int = 20
    random_cover_graphs: int = 50
    projection_directions: int = 5
    structural_inputs: int = 1000
    max_one_vertex_loops: int = 5
    budgets: Budgets = Budgets()
