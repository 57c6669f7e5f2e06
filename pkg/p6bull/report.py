from typing import List, Optional

from p6bull.datastructures import Outcome, TraceEvent
from p6bull.schemas import OutcomeSchema
from p6bull.serializers import dumps

_outcome_schema = OutcomeSchema()


def outcome_to_dict(outcome: Outcome) -> dict:
    return _outcome_schema.dump(outcome)


def emit_report(outcome: Outcome, format: str = 'json', trace: Optional[List[TraceEvent]] = None) -> str:
    data = outcome_to_dict(outcome)
    if format == 'json':
        if trace is not None:
            data['trace'] = [str(event).strip() for event in trace]
        return dumps(data)
    if format != 'text':
        raise ValueError(f"unknown report format {format!r}")

    lines = [f"status: {data['status']}"]
    if 'coloring' in data:
        lines.append('coloring: ' + ' '.join(f"{v + 1}:{c}" for v, c in enumerate(data['coloring'])))
    if 'witness' in data:
        lines.append(f"witness: induced {data['witness_pattern']} on vertices {' '.join(map(str, data['witness']))}")
    if 'report' in data:
        lines.append(f"violated: {', '.join(data['report'])}")
    if 'detail' in data:
        lines.append(f"detail: {data['detail']}")
    stats = data['stats']
    lines.append(f"routes: {' > '.join(stats['routes']) or '-'}")
    lines.append(
        f"precolorings: {stats['precolorings']}, 2-SAT calls: {stats['two_sat_calls']}, "
        f"oracle calls: {stats['oracle_calls']}, max depth: {stats['max_depth']}"
    )
    if not stats['class_checked']:
        lines.append('class check skipped: outcome is not covered by the algorithm')
    if trace is not None:
        lines.append('trace:')
        lines.extend(f"  {event}" for event in trace)
    return '\n'.join(lines) + '\n'
