import json
import math
from dataclasses import dataclass, field
from typing import List, Optional

from ..exceptions import DocumentParseError

SPECIAL_VALUES = ("zero", "one")


@dataclass
class SpadjorDocument:
    """On-disk form of a spadjor: orientation is carried by vertex order"""

    epsilon: Optional[float] = None
    special: Optional[str] = None
    curves: List[List[List[float]]] = field(default_factory=list)

    def to_dict(self) -> dict:
        data = {"epsilon": self.epsilon}
        if self.special is not None:
            data["special"] = self.special
        data["curves"] = [[[float(x), float(y)] for x, y in c] for c in self.curves]
        return data

    @classmethod
    def from_dict(cls, data) -> "SpadjorDocument":
        if not isinstance(data, dict):
            raise DocumentParseError("Document must be a JSON object")
        unknown = set(data) - {"epsilon", "special", "curves"}
        if unknown:
            raise DocumentParseError(f"Unknown document keys: {sorted(unknown)}")

        epsilon = data.get("epsilon")
        if epsilon is not None:
            if isinstance(epsilon, bool) or not isinstance(epsilon, (int, float)):
                raise DocumentParseError(f"epsilon must be a number, got {epsilon!r}")
            if not (math.isfinite(epsilon) and epsilon > 0):
                raise DocumentParseError(f"epsilon must be positive, got {epsilon!r}")
            epsilon = float(epsilon)

        special = data.get("special")
        if special is not None and special not in SPECIAL_VALUES:
            raise DocumentParseError(
                f"special must be 'zero' or 'one', got {special!r}"
            )

        curves = data.get("curves", [])
        if not isinstance(curves, list):
            raise DocumentParseError("curves must be an array")
        parsed = [_parse_curve(i, c) for i, c in enumerate(curves)]
        if special is not None and parsed:
            raise DocumentParseError(f"A '{special}' document cannot list curves")
        if special is None and not parsed:
            raise DocumentParseError("Document has neither curves nor a special value")
        return cls(epsilon=epsilon, special=special, curves=parsed)

    def dumps(self) -> str:
        """Canonical text: one curve per line, shortest round-trip floats"""
        head = []
        for key, value in self.to_dict().items():
            if key != "curves":
                head.append(f"  {json.dumps(key)}: {json.dumps(value)}")
            elif not value:
                head.append('  "curves": []')
            else:
                lines = ",\n".join("    " + json.dumps(curve) for curve in value)
                head.append('  "curves": [\n' + lines + "\n  ]")
        return "{\n" + ",\n".join(head) + "\n}\n"

    @classmethod
    def loads(cls, text: str) -> "SpadjorDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentParseError(f"Invalid JSON: {e}") from e
        return cls.from_dict(data)


def _parse_curve(index: int, raw) -> List[List[float]]:
    if not isinstance(raw, list):
        raise DocumentParseError(f"Curve {index} must be an array of points")
    points = []
    for k, point in enumerate(raw):
        if (
            not isinstance(point, list)
            or len(point) != 2
            or any(
                isinstance(v, bool) or not isinstance(v, (int, float)) for v in point
            )
        ):
            raise DocumentParseError(
                f"Curve {index}, point {k}: expected [x, y], got {point!r}"
            )
        if not all(math.isfinite(v) for v in point):
            raise DocumentParseError(
                f"Curve {index}, point {k}: coordinates must be finite"
            )
        points.append([float(point[0]), float(point[1])])
    return points
