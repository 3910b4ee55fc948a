from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Mapping, NamedTuple

import numpy as np
from sanic.log import logger

from documents import (
    DocumentError,
    ReportJson,
    direction_from_json,
    generator_map_from_json,
    point_from_json,
    poly_from_json,
    render_table,
    tensor2_from_json,
)
from matricial import EvalMode, MatrixPoint
from ncpoly import NCPoly, TensorPoly
from seed import Seed
from util import timed_supplier

ParamKind = Literal[
    "poly", "polys", "tensor", "point", "direction", "int", "float", "bool", "str", "words"
]
"""
Document kinds (`poly`, `polys`, `tensor`, `point`, `direction`) are JSON documents;
the CLI reads them from files, the server takes them inline.
"""

_MISSING = object()


class UnknownOperationError(KeyError):
    pass


@dataclass(frozen=True)
class Param:
    name: str
    kind: ParamKind
    help: str
    flags: tuple[str, ...] = ()
    """CLI spellings. Defaults to `--name` with underscores as dashes."""
    default: Any = _MISSING
    choices: tuple[str, ...] = ()

    @property
    def required(self) -> bool:
        return self.default is _MISSING

    @property
    def cli_flags(self) -> tuple[str, ...]:
        return self.flags or ("--" + self.name.replace("_", "-"),)

    def to_dict(self):
        return {
            "name": self.name,
            "kind": self.kind,
            "help": self.help,
            "required": self.required,
            "default": None if self.required else self.default,
            "choices": list(self.choices),
        }


class Result(NamedTuple):
    document: ReportJson
    """What `--output json` prints and the server returns."""
    text: str | None = None
    """Human-readable form. Falls back to the report table."""

    def render(self) -> str:
        return self.text if self.text is not None else render_table(self.document)


class InputReader:
    """Typed access to the raw inputs of one operation call."""

    def __init__(self, raw: Mapping[str, Any]) -> None:
        self.__raw = raw

    def has(self, key: str) -> bool:
        return self.__raw.get(key) is not None

    def __get(self, key: str) -> Any:
        value = self.__raw.get(key)
        if value is None:
            raise ValueError(f"Missing input `{key}`.")
        return value

    def get_int(self, key: str) -> int:
        value = self.__get(key)
        if isinstance(value, str):
            try:
                return int(value)
            except ValueError:
                pass
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        raise ValueError(f"Invalid int value for {key}: {value}")

    def get_optional_int(self, key: str) -> int | None:
        return self.get_int(key) if self.has(key) else None

    def get_float(self, key: str) -> float:
        value = self.__get(key)
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        raise ValueError(f"Invalid float value for {key}: {value}")

    def get_bool(self, key: str) -> bool:
        value = self.__raw.get(key, False)
        if isinstance(value, bool):
            return value
        raise ValueError(f"Invalid bool value for {key}: {value}")

    def get_str(self, key: str) -> str:
        value = self.__get(key)
        if isinstance(value, str):
            return value
        raise ValueError(f"Invalid str value for {key}: {value}")

    def get_words(self, key: str) -> tuple[int, ...]:
        """A word of functional indices, given as a list or as `1,2,3` (empty for the unit)."""
        value = self.__get(key)
        if isinstance(value, str):
            parts = [s for s in value.replace(" ", "").split(",") if s]
            try:
                return tuple(int(s) for s in parts)
            except ValueError as e:
                raise ValueError(f"Invalid word for {key}: {value!r}") from e
        if isinstance(value, list) and all(
            isinstance(i, int) and not isinstance(i, bool) for i in value
        ):
            return tuple(value)
        raise ValueError(f"Invalid word for {key}: {value}")

    def get_seed(self, key: str = "seed") -> Seed:
        if not self.has(key):
            raise ValueError("Randomized operations need an explicit --seed.")
        return Seed(self.get_int(key))

    def get_mode(self, key: str = "mode") -> EvalMode:
        try:
            return EvalMode(self.get_str(key))
        except ValueError as e:
            raise ValueError(f"Invalid mode {self.__raw.get(key)!r}, expected b or z.") from e

    def get_poly(self, key: str) -> NCPoly:
        return poly_from_json(self.__get(key))

    def get_polys(self, key: str) -> list[NCPoly]:
        value = self.__get(key)
        docs = value if isinstance(value, list) else [value]
        if not docs:
            raise DocumentError(f"At least one polynomial is needed for {key}.")
        return [poly_from_json(d) for d in docs]

    def get_generator_map(self, key: str) -> dict[int, int] | None:
        value = self.__get(key)
        docs = value if isinstance(value, list) else [value]
        return generator_map_from_json(docs[0])

    def get_tensor(self, key: str) -> TensorPoly:
        return tensor2_from_json(self.__get(key))

    def get_point(self, key: str) -> MatrixPoint:
        return point_from_json(self.__get(key))

    def get_direction(self, key: str) -> np.ndarray:
        return direction_from_json(self.__get(key))


RunFn = Callable[[InputReader], Result]


@dataclass(frozen=True)
class Operation:
    path: tuple[str, ...]
    """Command path, e.g. ("diff",) or ("haar", "verify")."""
    description: str
    params: tuple[Param, ...]
    run: RunFn
    randomized: bool = False

    @property
    def name(self) -> str:
        return " ".join(self.path)

    def to_dict(self):
        return {
            "name": self.name,
            "description": self.description,
            "randomized": self.randomized,
            "params": [p.to_dict() for p in self.params],
        }


@dataclass
class OperationRegistry:
    operations: dict[str, Operation] = field(default_factory=dict)

    def register(
        self,
        name: str,
        *,
        description: str | list[str],
        params: list[Param],
        randomized: bool = False,
    ):
        if not isinstance(description, str):
            description = "\n\n".join(description)

        names = {p.name for p in params}
        assert len(names) == len(params), f"Duplicate parameter in {name}"
        if randomized:
            assert "seed" in names, f"Randomized operation {name} takes no seed"

        def inner_wrapper(wrapped_func: RunFn) -> RunFn:
            op = Operation(
                path=tuple(name.split(" ")),
                description=description,
                params=tuple(params),
                run=wrapped_func,
                randomized=randomized,
            )
            assert op.name not in self.operations, f"{op.name} registered twice"
            self.operations[op.name] = op
            logger.debug(f"Registered {op.name}")
            return wrapped_func

        return inner_wrapper

    def get(self, name: str) -> Operation:
        op = self.operations.get(name)
        if op is None:
            raise UnknownOperationError(f"Unknown operation {name!r}.")
        return op

    def groups(self) -> dict[str, list[Operation]]:
        """Operations by their first path segment."""
        result: dict[str, list[Operation]] = {}
        for op in self.operations.values():
            result.setdefault(op.path[0], []).append(op)
        return result

    def to_list(self):
        return [op.to_dict() for op in self.operations.values()]


registry = OperationRegistry()


def run_operation(name: str, raw: Mapping[str, Any]) -> Result:
    op = registry.get(name)
    defaults = {p.name: p.default for p in op.params if not p.required}
    inputs = {**defaults, **{k: v for k, v in raw.items() if v is not None}}
    missing = [p.name for p in op.params if p.required and inputs.get(p.name) is None]
    if missing:
        raise ValueError(f"{op.name}: missing input(s) {', '.join(missing)}.")

    result, duration = timed_supplier(lambda: op.run(InputReader(inputs)))()
    logger.info(f"Ran {op.name} in {duration:.3f}s")
    return result
