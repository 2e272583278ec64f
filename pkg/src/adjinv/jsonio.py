"""JSON encoding of result objects.

Integers beyond 2**53 are written as decimal strings so that consumers using
IEEE doubles do not lose precision.
"""

from __future__ import annotations

import json
from typing import Any

from .root_system import build
from .tensor import Decomposition
from .theorems import FSIndicator, SplitResult

SAFE_INT = 2**53


def encode_int(n: int) -> int | str:
    return str(n) if abs(n) > SAFE_INT else n


def decode_int(x: int | str) -> int:
    return int(x)


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, FSIndicator):
        return {"type": "FSIndicator", "value": int(obj), "name": obj.name.lower()}
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, SplitResult):
        return {
            "type": "SplitResult",
            "b": encode_int(obj.b),
            "b_S": encode_int(obj.b_S),
            "b_Lambda": encode_int(obj.b_Lambda),
        }
    if isinstance(obj, Decomposition):
        return {
            "type": "Decomposition",
            "algebra": str(obj.algebra.spec),
            "terms": [[list(k), encode_int(m)] for k, m in obj],
        }
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_jsonable(data: Any) -> Any:
    if isinstance(data, dict):
        kind = data.get("type")
        if kind == "FSIndicator":
            return FSIndicator(data["value"])
        if kind == "SplitResult":
            return SplitResult(
                decode_int(data["b"]), decode_int(data["b_S"]), decode_int(data["b_Lambda"])
            )
        if kind == "Decomposition":
            rs = build(data["algebra"])
            return Decomposition(rs, {tuple(k): decode_int(m) for k, m in data["terms"]})
        return {k: from_jsonable(v) for k, v in data.items()}
    if isinstance(data, list):
        return [from_jsonable(v) for v in data]
    if isinstance(data, str) and data.lstrip("-").isdigit():
        return int(data)
    return data


def emit(obj: Any, **kwargs: Any) -> str:
    return json.dumps(to_jsonable(obj), **kwargs)


def parse(text: str) -> Any:
    return from_jsonable(json.loads(text))
