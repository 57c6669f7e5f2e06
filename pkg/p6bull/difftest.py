'''
    Differential campaign: decide4 against the exact 4-coloring oracle on generated instances.
'''
import logging
import os
import time
from functools import partial
from typing import Iterable, List, Optional

from marshmallow_dataclass import dataclass as ma_dataclass

from p6bull.concurrency import run_in_workers
from p6bull.config import CampaignConfig
from p6bull.constants import DIFFTEST_REPLAY_DIR
from p6bull.dataclasses import optional_field, required_field
from p6bull.datastructures import Status
from p6bull.dimacs import dump_dimacs, parse_dimacs
from p6bull.generate import Instance, constructive_instances, exhaustive_graphs, sample_instances
from p6bull.listcolor import exact_k_color
from p6bull.patterns import is_in_class
from p6bull.pipeline import decide4
from p6bull.schemas import CompactSchema
from p6bull.serializers import dumps

logger = logging.getLogger(__name__)


class RunReportBaseSchema(CompactSchema):
    class Meta:
        ordered = True


@ma_dataclass(base_schema=RunReportBaseSchema)
class RunReport:
    instance: str = required_field()
    n: int = required_field()
    m: int = required_field()
    status: str = required_field()
    expected_colorable: bool = required_field()
    disagreement: bool = required_field()
    routes: List[str] = optional_field(default_factory=list)
    oracle_calls: int = optional_field(default=0)
    precolorings: int = optional_field(default=0)
    claims: Optional[List[str]] = optional_field()
    seed: Optional[int] = optional_field()
    source: Optional[str] = optional_field()
    wall_time: Optional[float] = optional_field()


def run_instance(instance: Instance, timings: bool = False) -> RunReport:
    G = instance.graph
    started = time.perf_counter()
    outcome = decide4(G)
    elapsed = time.perf_counter() - started
    expected = exact_k_color(G, 4) is not None

    if outcome.status is Status.invariant_violation:
        disagreement = True
    else:
        disagreement = outcome.is_colorable != expected or outcome.status is Status.out_of_class

    return RunReport(
        instance=instance.instance_id,
        n=G.n,
        m=G.m,
        status=outcome.status.value,
        expected_colorable=expected,
        disagreement=disagreement,
        routes=list(outcome.stats.routes),
        oracle_calls=outcome.stats.oracle_calls,
        precolorings=outcome.stats.precolorings,
        claims=outcome.report or None,
        seed=instance.seed,
        source=instance.source,
        wall_time=round(elapsed, 6) if timings else None,
    )


def persist_replay(instance: Instance, report: RunReport, replay_dir: str) -> str:
    os.makedirs(replay_dir, exist_ok=True)
    path = os.path.join(replay_dir, f"{instance.instance_id}.col")
    comments = [
        f"instance {instance.instance_id}",
        f"seed {instance.seed}",
        f"source {instance.source}",
        f"status {report.status} expected_colorable {report.expected_colorable}",
        f"routes {' '.join(report.routes) or '-'}",
    ]
    with open(path, 'w') as f:
        f.write(dump_dimacs(instance.graph, comments))
    logger.warning('instance %s disagrees with the exact oracle, written to %s', instance.instance_id, path)
    return path


def replay(path: str) -> RunReport:
    '''Re-runs a persisted instance. The report matches the original apart from wall time.'''
    with open(path) as f:
        text = f.read()
    meta = {}
    for line in text.splitlines():
        parts = line.split(maxsplit=2)
        if len(parts) == 3 and parts[0] == 'c':
            meta[parts[1]] = parts[2]
    seed = meta.get('seed')
    instance = Instance(
        instance_id=meta.get('instance', os.path.splitext(os.path.basename(path))[0]),
        graph=parse_dimacs(text),
        seed=int(seed) if seed not in (None, 'None') else None,
        source=meta.get('source', 'replay'),
    )
    return run_instance(instance)


def run_campaign(
    instances: Iterable[Instance],
    workers: int = 1,
    replay_dir: str = DIFFTEST_REPLAY_DIR,
    timings: bool = False,
) -> List[RunReport]:
    '''Runs every instance and writes each disagreement to `replay_dir`.'''
    instances = list(instances)
    reports = run_in_workers(partial(run_instance, timings=timings), instances, workers, processes=True)

    disagreements = 0
    for instance, report in zip(instances, reports):
        if report.disagreement:
            disagreements += 1
            persist_replay(instance, report, replay_dir)
    logger.info('campaign finished: %d instances, %d disagreements', len(reports), disagreements)
    return reports


def exhaustive_instances(n: int) -> List[Instance]:
    return [
        Instance(f"x{n}-{index:06d}", G, None, f"exhaustive n={n}")
        for index, G in enumerate(exhaustive_graphs(n))
        if is_in_class(G) is None
    ]


def difftest(config: CampaignConfig) -> List[RunReport]:
    if config.exhaustive is not None:
        instances = exhaustive_instances(config.exhaustive)
    else:
        instances = list(sample_instances(config.count, config.nmin, config.nmax, config.probabilities, config.seed))
        instances.extend(constructive_instances(config.constructive, config.seed))
    logger.info('running %d instances on %d workers', len(instances), config.workers)
    return run_campaign(instances, config.workers, config.replay_dir, config.timings)


def reports_to_json(reports: List[RunReport]) -> str:
    return dumps(RunReport.Schema(many=True).dump(reports))


def summary(reports: List[RunReport]) -> dict:
    return {
        'instances': len(reports),
        'disagreements': sum(r.disagreement for r in reports),
        'invariant_violations': sum(r.status == Status.invariant_violation.value for r in reports),
        'colorable': sum(r.status == Status.four_colorable.value for r in reports),
    }
