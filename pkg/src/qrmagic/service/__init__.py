"""HTTP service wrapping the core package.

``models`` defines the pydantic request/response schemas, ``handlers``
the pure request -> response functions, and ``app`` the FastAPI wiring.
The CLI calls the same handlers in process, so both front ends share one
schema and one behavior.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
