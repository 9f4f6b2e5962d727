from typing import Dict, List, Optional

from .configuration import Command
from .descriptions import (
    BALL_VERDICT_DESCRIPTION,
    BOUNDARY_PROBE_DESCRIPTION,
    DISC_ANALYTICITY_DESCRIPTION,
    FIBER_DESCRIPTION,
    GALLERY_LIST_DESCRIPTION,
    NORMALIZE_PAIR_DESCRIPTION,
    PROP71_DESCRIPTION,
    SEMIQUADRIC_INTERSECT_DESCRIPTION,
    SLICE_DESCRIPTION,
    TEST_CIRCLE_DESCRIPTION,
    TEST_CIRCLE_FAMILY_DESCRIPTION,
    TEST_FAMILY_DESCRIPTION,
    TEST_LINE_DESCRIPTION,
)
from .schema import (
    BallVerdict,
    BoundaryProbe,
    DiscAnalyticity,
    Fiber,
    GalleryList,
    NormalizePair,
    Prop71,
    SemiquadricIntersect,
    Slice,
    TestCircle,
    TestCircleFamily,
    TestFamily,
    TestLine,
)

commands: List[Dict] = [
    {
        "method": "test_circle",
        "name": "test-circle",
        "description": TEST_CIRCLE_DESCRIPTION,
        "args_schema": TestCircle,
    },
    {
        "method": "test_line",
        "name": "test-line",
        "description": TEST_LINE_DESCRIPTION,
        "args_schema": TestLine,
    },
    {
        "method": "test_family",
        "name": "test-family",
        "description": TEST_FAMILY_DESCRIPTION,
        "args_schema": TestFamily,
    },
    {
        "method": "test_circle_family",
        "name": "test-circle-family",
        "description": TEST_CIRCLE_FAMILY_DESCRIPTION,
        "args_schema": TestCircleFamily,
    },
    {
        "method": "disc_analyticity",
        "name": "disc-analyticity",
        "description": DISC_ANALYTICITY_DESCRIPTION,
        "args_schema": DiscAnalyticity,
    },
    {
        "method": "ball_verdict",
        "name": "ball-verdict",
        "description": BALL_VERDICT_DESCRIPTION,
        "args_schema": BallVerdict,
    },
    {
        "method": "slice",
        "name": "slice",
        "description": SLICE_DESCRIPTION,
        "args_schema": Slice,
    },
    {
        "method": "boundary_probe",
        "name": "boundary-probe",
        "description": BOUNDARY_PROBE_DESCRIPTION,
        "args_schema": BoundaryProbe,
    },
    {
        "method": "normalize_pair",
        "name": "normalize-pair",
        "description": NORMALIZE_PAIR_DESCRIPTION,
        "args_schema": NormalizePair,
    },
    {
        "method": "prop71",
        "name": "prop71",
        "description": PROP71_DESCRIPTION,
        "args_schema": Prop71,
    },
    {
        "method": "fiber",
        "name": "fiber",
        "description": FIBER_DESCRIPTION,
        "args_schema": Fiber,
    },
    {
        "method": "semiquadric_intersect",
        "name": "semiquadric-intersect",
        "description": SEMIQUADRIC_INTERSECT_DESCRIPTION,
        "args_schema": SemiquadricIntersect,
    },
    {
        "method": "gallery_list",
        "name": "gallery-list",
        "description": GALLERY_LIST_DESCRIPTION,
        "args_schema": GalleryList,
    },
]


def find_command(name: Command) -> Optional[Dict]:
    for command in commands:
        if command["name"] == name:
            return command
    return None
