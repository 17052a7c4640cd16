"""
Machine-readable output records for the command-line interface
"""

import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd

from app.combinatorics.perm_core import Permutation
from app.combinatorics.triangle import JoinIrreducibleIndex, MonotoneTriangle

# Bump when a field is renamed or removed
SPEC_VERSION = "1"


class ResultEncoder(json.JSONEncoder):
    """JSON encoder for numpy, pandas and combinatorics types"""

    def default(self, obj: Any) -> Any:
        if isinstance(obj, Permutation):
            return list(obj.values)
        if isinstance(obj, MonotoneTriangle):
            return [list(row) for row in obj.rows()]
        if isinstance(obj, JoinIrreducibleIndex):
            return {'a': obj.a, 'b': obj.b, 'c': obj.c, 'n': obj.n}
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, pd.DataFrame):
            return obj.to_dict('records')
        if is_dataclass(obj) and not isinstance(obj, type):
            return asdict(obj)
        return super().default(obj)


def build_record(command: str, input_value: Any, data: Dict[str, Any]) -> Dict[str, Any]:
    """Successful OutputRecord"""
    return {
        'spec_version': SPEC_VERSION,
        'command': command,
        'input': input_value,
        'success': True,
        'data': data,
    }


def build_error(command: Optional[str], input_value: Any, message: str) -> Dict[str, Any]:
    """Failed OutputRecord"""
    return {
        'spec_version': SPEC_VERSION,
        'command': command,
        'input': input_value,
        'success': False,
        'error': message,
    }


def dumps(record: Dict[str, Any]) -> str:
    return json.dumps(record, cls=ResultEncoder, sort_keys=True, indent=2, ensure_ascii=False)
