"""Symbolic coverability, termination and boundedness for weighted VASS."""

from .ideals import (
    EMPTY,
    INF,
    OMEGA,
    Config,
    Dims,
    DimensionError,
    DownSet,
    Ideal,
    UnsupportedModel,
    UpSet,
    config_leq,
    down_of_config,
    downset_includes,
    downset_member,
    downset_union,
    enumerate_downsets,
    ideal_includes,
    ideal_member,
    minimize,
    parse_config,
    parse_ideal,
    render_config,
    render_ideal,
)
from .models import (
    ParseError,
    Transition,
    WVass,
    backward_step,
    downset_post,
    ideal_post_t,
    parse_model,
    post_configs,
    render_model,
    validate,
)
from .coverability import (
    Coverable,
    NotCoverable,
    Unknown,
    backward_capped,
    check_hint,
    decide_cover,
    is_inductive,
    procedure1_run,
)
from .antichain import build_at, decide_boundedness, decide_termination

__version__ = "0.1.0"
