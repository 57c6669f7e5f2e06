'''
    difftest campaign settings, loadable from YAML:

        count: 500
        nmin: 6
        nmax: 12
        seed: 1
        probabilities: [0.1, 0.3, 0.5, 0.7, 0.9]
        constructive: 100
        workers: 4
        replay_dir: replays/
'''
from typing import List, Optional

import marshmallow as ma
import yaml
from marshmallow_dataclass import dataclass as ma_dataclass

from p6bull import constants
from p6bull.dataclasses import optional_field
from p6bull.types import Count, Probability, VertexCount


@ma_dataclass
class CampaignConfig:
    count: Count = optional_field(default=constants.DIFFTEST_COUNT, description='Random instances to draw.')
    nmin: VertexCount = optional_field(default=constants.DIFFTEST_NMIN)
    nmax: VertexCount = optional_field(default=constants.DIFFTEST_NMAX)
    seed: int = optional_field(default=0)
    probabilities: List[Probability] = optional_field(default_factory=lambda: list(constants.DIFFTEST_PROBABILITIES))
    constructive: Count = optional_field(default=0, description='Constructive in-class instances added to the random ones.')
    exhaustive: Optional[VertexCount] = optional_field(description='Run every labeled graph on this many vertices instead.')
    workers: VertexCount = optional_field(default=constants.DIFFTEST_WORKERS)
    replay_dir: str = optional_field(
        default=constants.DIFFTEST_REPLAY_DIR, description='Where failing instances are written as DIMACS files.'
    )
    timings: bool = optional_field(default=False, description='Record wall time; makes reports non-reproducible.')

    def __post_init__(self):
        if self.nmin > self.nmax:
            raise ma.ValidationError(f"nmin ({self.nmin}) is larger than nmax ({self.nmax})", 'nmin')
        if self.nmax > constants.DIFFTEST_MAX_N:
            raise ma.ValidationError(f"nmax is limited to {constants.DIFFTEST_MAX_N}", 'nmax')
        if not self.probabilities:
            raise ma.ValidationError("at least one edge probability is needed", 'probabilities')


def load_config(text: str) -> CampaignConfig:
    data = yaml.safe_load(text) or {}
    return CampaignConfig.Schema().load(data)


def load_config_file(path: str) -> CampaignConfig:
    with open(path) as f:
        return load_config(f.read())
