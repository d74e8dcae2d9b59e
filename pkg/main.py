"""
HTTP service launcher.

``ENVIRONMENT`` selects development (loopback, auto-reload) or production
(all interfaces, no access log); ``PORT`` sets the port. The command-line
tool lives in ``python -m sqrtmod``.
"""

import asyncio
import logging
import os
from typing import Any

import uvicorn
import uvloop

APP = "sqrtmod.asgi:app"

logger = logging.getLogger("sqrtmod.server")


def server_options(environment: str, port: int) -> dict[str, Any]:
    """uvicorn keyword arguments for a launch mode."""
    if environment.lower() == "development":
        return {
            "host": "127.0.0.1",
            "port": port,
            "reload": True,
            "log_level": "info",
            "access_log": True,
        }
    return {"host": "0.0.0.0", "port": port, "log_level": "info", "access_log": False}


def run() -> None:
    environment = os.getenv("ENVIRONMENT", "development")
    options = server_options(environment, int(os.getenv("PORT", "8000")))
    asyncio.set_event_loop_policy(uvloop.EventLoopPolicy())
    logging.basicConfig(level=logging.INFO)
    logger.info(
        "serving %s on %s:%d (%s)", APP, options["host"], options["port"], environment
    )
    uvicorn.run(APP, **options)


if __name__ == "__main__":
    run()
