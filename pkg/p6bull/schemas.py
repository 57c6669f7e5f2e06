from typing import Any, Dict

import marshmallow as ma
import marshmallow.fields as mf

from p6bull.datastructures import Outcome


class CompactSchema(ma.Schema):
    '''Drops keys whose value is None.'''

    @ma.post_dump
    def remove_none(self, data: Dict[str, Any], **kwargs) -> Dict[str, Any]:
        return {key: value for key, value in data.items() if value is not None}


class StatsSchema(ma.Schema):
    routes = mf.List(mf.String())
    precolorings = mf.Integer()
    two_sat_calls = mf.Integer()
    oracle_calls = mf.Integer()
    max_depth = mf.Integer()
    class_checked = mf.Boolean()


class OutcomeSchema(CompactSchema):
    status = mf.Function(lambda outcome: outcome.status.value)
    coloring = mf.Method('dump_coloring')
    witness = mf.Method('dump_witness')
    witness_pattern = mf.Method('dump_witness_pattern')
    report = mf.Method('dump_report')
    detail = mf.Method('dump_detail')
    stats = mf.Nested(StatsSchema)

    def dump_coloring(self, outcome: Outcome):
        if outcome.coloring is None:
            return None
        return [outcome.coloring[v] for v in sorted(outcome.coloring)]

    def dump_witness(self, outcome: Outcome):
        if outcome.witness is None:
            return None
        # 1-based, in pattern order
        return [v + 1 for v in outcome.witness.mapping]

    def dump_witness_pattern(self, outcome: Outcome):
        return None if outcome.witness is None else outcome.witness.pattern

    def dump_report(self, outcome: Outcome):
        return outcome.report or None

    def dump_detail(self, outcome: Outcome):
        return outcome.detail or None
