from typing import Dict, FrozenSet, Mapping

import marshmallow.fields as mf
from marshmallow.validate import Range
from marshmallow_dataclass import NewType

VertexSet = FrozenSet[int]
Coloring = Dict[int, int]
ColoringMap = Mapping[int, int]
ListAssignment = Mapping[int, FrozenSet[int]]

# Config field types
Probability = NewType('Probability', float, field=mf.Float, validate=Range(min=0.0, max=1.0))
VertexCount = NewType('VertexCount', int, field=mf.Integer, validate=Range(min=1))
Count = NewType('Count', int, field=mf.Integer, validate=Range(min=0))
