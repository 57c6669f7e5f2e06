import json
import logging
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any

logger = logging.getLogger(__name__)


def json_default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    elif is_dataclass(obj):
        return asdict(obj)
    elif isinstance(obj, Enum):
        return obj.value
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


class JSONEncoder(json.JSONEncoder):
    '''
        JSONEncoder for reports: vertex sets, enums and dataclasses, with sorted keys and
        compact separators so that equal reports encode to equal bytes.
    '''
    def __init__(self, *args, **kwargs):
        kwargs.setdefault('sort_keys', True)
        kwargs.setdefault('separators', (',', ':'))
        super().__init__(*args, **kwargs)

    def default(self, obj):
        try:
            return json_default(obj)
        except TypeError:
            logger.exception(f'Failed to encode {obj!r}')
            raise


def dumps(obj: Any, indent: int = None) -> str:
    if indent is not None:
        return json.dumps(obj, cls=JSONEncoder, indent=indent, separators=(',', ': '))
    return json.dumps(obj, cls=JSONEncoder)
