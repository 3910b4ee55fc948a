from __future__ import annotations

from typing import Any, Literal, TypedDict


class SuccessResponse(TypedDict):
    type: Literal["success"]
    result: dict[str, Any]


class ErrorSource(TypedDict):
    operation: str
    inputs: list[str]


class ErrorResponse(TypedDict):
    type: Literal["error"]
    message: str
    exception: str
    source: ErrorSource | None


def success_response(result: dict[str, Any]) -> SuccessResponse:
    return {"type": "success", "result": result}


def error_response(
    message: str,
    exception: str | Exception,
    source: ErrorSource | None = None,
) -> ErrorResponse:
    return {
        "type": "error",
        "message": message,
        "exception": str(exception),
        "source": source,
    }
