from __future__ import annotations

import asyncio
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Final, TypedDict

from sanic import Sanic
from sanic.log import logger
from sanic.request import Request
from sanic.response import json

import commands  # noqa: F401
from operations import UnknownOperationError, registry, run_operation
from poincare import NotExact, NotInKernel
from response import (
    ErrorResponse,
    ErrorSource,
    SuccessResponse,
    error_response,
    success_response,
)
from server_config import ServerConfig


class RunRequest(TypedDict):
    operation: str
    inputs: dict[str, Any]


class AppContext:
    def __init__(self, config: ServerConfig):
        self.config: Final[ServerConfig] = config
        self.pool: Final[ThreadPoolExecutor] = ThreadPoolExecutor(
            max_workers=config.threads
        )

    @staticmethod
    def get(app_instance: Sanic) -> AppContext:
        assert isinstance(app_instance.ctx, AppContext)
        return app_instance.ctx


def execute(body: Any) -> tuple[SuccessResponse | ErrorResponse, int]:
    """Runs one request body and returns the response with its HTTP status."""
    if (
        not isinstance(body, dict)
        or not isinstance(body.get("operation"), str)
        or not isinstance(body.get("inputs") or {}, dict)
    ):
        return error_response("Invalid request", "Expected {operation, inputs}."), 400
    request: RunRequest = {"operation": body["operation"], "inputs": body.get("inputs") or {}}
    source: ErrorSource = {"operation": request["operation"], "inputs": sorted(request["inputs"])}
    try:
        result = run_operation(request["operation"], request["inputs"])
        return success_response(result.document), 200
    except UnknownOperationError as e:
        return error_response("Unknown operation", e.args[0], source), 400
    except (NotExact, NotInKernel) as e:
        return error_response("No solution", e, source), 422
    except ValueError as e:
        return error_response("Invalid input", e, source), 400
    except Exception as e:
        logger.error(e, exc_info=True)
        return error_response("Error running operation!", e, source), 500


def create_app(config: ServerConfig) -> Sanic:
    app = Sanic("ncfree_executor", ctx=AppContext(config))

    @app.route("/operations")
    async def operations(_request: Request):
        """Lists every operation with its parameters."""
        return json(registry.to_list())

    @app.route("/run", methods=["POST"])
    async def run(request: Request):
        ctx = AppContext.get(request.app)
        body = request.json
        logger.info(f"Run request: {body.get('operation') if isinstance(body, dict) else body}")
        loop = asyncio.get_running_loop()
        response, status = await loop.run_in_executor(ctx.pool, execute, body)
        return json(response, status=status)

    @app.after_server_start
    async def after_server_start(sanic_app: Sanic, loop: asyncio.AbstractEventLoop):
        logger.info(f"Serving {len(registry.operations)} operations")
        if AppContext.get(sanic_app).config.close_after_start:
            logger.info("Closing server...")
            sanic_app.stop()

    return app


def main():
    config = ServerConfig.parse_argv()
    app = create_app(config)
    app.run(host=config.host, port=config.port, single_process=True)


if __name__ == "__main__":
    main()
