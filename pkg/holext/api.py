"""Dispatcher for the lab commands."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel

from .configuration import Configuration, resolve_configuration
from .functions import (
    ball_verdict,
    boundary_probe,
    disc_analyticity,
    fiber,
    gallery_list,
    normalize_pair,
    prop71,
    semiquadric_intersect,
    slice_at,
    test_circle,
    test_circle_family,
    test_family,
    test_line,
)
from .reports import dump_json


class LabAPI(BaseModel):
    """Runs lab commands under one resolved configuration."""

    _configuration: Configuration

    def __init__(self, configuration: Optional[Configuration] = None):
        super().__init__()

        self._configuration = resolve_configuration(configuration)

    @property
    def configuration(self) -> Configuration:
        return self._configuration

    def execute(self, method: str, *args, **kwargs) -> BaseModel:
        config = self._configuration
        if method == "test_circle":
            return test_circle(config, *args, **kwargs)
        elif method == "test_line":
            return test_line(config, *args, **kwargs)
        elif method == "test_family":
            return test_family(config, *args, **kwargs)
        elif method == "test_circle_family":
            return test_circle_family(config, *args, **kwargs)
        elif method == "disc_analyticity":
            return disc_analyticity(config, *args, **kwargs)
        elif method == "ball_verdict":
            return ball_verdict(config, *args, **kwargs)
        elif method == "slice":
            return slice_at(config, *args, **kwargs)
        elif method == "boundary_probe":
            return boundary_probe(config, *args, **kwargs)
        elif method == "normalize_pair":
            return normalize_pair(config, *args, **kwargs)
        elif method == "prop71":
            return prop71(config, *args, **kwargs)
        elif method == "fiber":
            return fiber(config, *args, **kwargs)
        elif method == "semiquadric_intersect":
            return semiquadric_intersect(config, *args, **kwargs)
        elif method == "gallery_list":
            return gallery_list(config, *args, **kwargs)
        else:
            raise ValueError("Invalid method " + method)

    def run(self, method: str, *args, **kwargs) -> str:
        return dump_json(self.execute(method, *args, **kwargs))
