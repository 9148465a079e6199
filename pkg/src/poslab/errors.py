"""Exceptions shared across modules."""

import os


class ResourceCapExceeded(RuntimeError):
    """An exponential oracle was asked for an instance above its configured bound."""


def env_cap(default: int) -> int:
    """``POSLAB_CAP`` overrides the default bound of every capped operation."""
    value = os.environ.get("POSLAB_CAP")
    return int(value) if value else default
