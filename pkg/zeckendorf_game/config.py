"""Validation of command-line options for the Zeckendorf game toolkit."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Any

import voluptuous as vol

from .const import (
    DEFAULT_GROWTH_CONSTANTS,
    DETERMINISTIC_STRATEGIES,
    OUTPUT_FORMATS,
    STRATEGY_NAMES,
)
from .exceptions import InvalidConfig

_LOGGER = logging.getLogger(__name__)

CONF_N = "n"
CONF_STRATEGY = "strategy"
CONF_STRATEGIES = "strategies"
CONF_SEED = "seed"
CONF_STRICT = "strict"
CONF_GAMES = "games"
CONF_BINS = "bins"
CONF_OUT = "out"
CONF_FORMAT = "format"
CONF_THREADS = "threads"
CONF_STANDARDIZED = "standardized"
CONF_CAP = "cap"
CONF_START = "start"
CONF_COUNT = "count"
CONF_CONSTANT = "constant"
CONF_FROM = "n_from"
CONF_TO = "n_to"
CONF_RANDOM_SEEDS = "random_seeds"

POSITIVE_INT = vol.All(vol.Coerce(int), vol.Range(min=1))
NON_NEGATIVE_INT = vol.All(vol.Coerce(int), vol.Range(min=0))


def strategy_list(value: Any) -> tuple[str, ...]:
    """Parse "all" or a comma-separated list of deterministic strategy names."""
    if not isinstance(value, str):
        raise vol.Invalid("expected a comma-separated list of strategy names")
    if value.strip() == "all":
        return DETERMINISTIC_STRATEGIES

    names = tuple(part.strip() for part in value.split(",") if part.strip())
    if not names:
        raise vol.Invalid("no strategy names given")
    for name in names:
        if name not in DETERMINISTIC_STRATEGIES:
            raise vol.Invalid(f"unknown deterministic strategy {name!r}")
    return names


def _range_in_order(data: dict[str, Any]) -> dict[str, Any]:
    if data[CONF_FROM] > data[CONF_TO]:
        raise vol.Invalid(
            f"--from {data[CONF_FROM]} is greater than --to {data[CONF_TO]}"
        )
    return data


COMMAND_SCHEMAS: dict[str, vol.Schema] = {
    "decompose": vol.Schema({vol.Required(CONF_N): POSITIVE_INT}),
    "simulate": vol.Schema(
        {
            vol.Required(CONF_N): POSITIVE_INT,
            vol.Required(CONF_STRATEGY): vol.In(STRATEGY_NAMES),
            vol.Required(CONF_SEED): NON_NEGATIVE_INT,
            vol.Required(CONF_STRICT): bool,
        }
    ),
    "batch": vol.Schema(
        {
            vol.Required(CONF_N): POSITIVE_INT,
            vol.Required(CONF_GAMES): vol.All(vol.Coerce(int), vol.Range(min=2)),
            vol.Required(CONF_SEED): NON_NEGATIVE_INT,
            vol.Required(CONF_BINS): vol.Any(None, POSITIVE_INT),
            vol.Required(CONF_OUT): vol.Any(None, str),
            vol.Required(CONF_FORMAT): vol.In(OUTPUT_FORMATS),
            vol.Required(CONF_THREADS): POSITIVE_INT,
            vol.Required(CONF_STANDARDIZED): bool,
        }
    ),
    "enumerate": vol.Schema(
        {vol.Required(CONF_N): POSITIVE_INT, vol.Required(CONF_CAP): POSITIVE_INT}
    ),
    "solve": vol.Schema(
        {vol.Required(CONF_N): POSITIVE_INT, vol.Required(CONF_CAP): POSITIVE_INT}
    ),
    "growth": vol.Schema(
        {
            vol.Required(CONF_STRATEGY): vol.In(DETERMINISTIC_STRATEGIES),
            vol.Required(CONF_START): POSITIVE_INT,
            vol.Required(CONF_COUNT): POSITIVE_INT,
            vol.Required(CONF_CONSTANT): vol.Any(None, vol.Coerce(float)),
            vol.Required(CONF_OUT): vol.Any(None, str),
            vol.Required(CONF_THREADS): POSITIVE_INT,
        }
    ),
    "verify": vol.Schema(
        vol.All(
            {
                vol.Required(CONF_FROM): POSITIVE_INT,
                vol.Required(CONF_TO): POSITIVE_INT,
                vol.Required(CONF_STRATEGIES): strategy_list,
                vol.Required(CONF_RANDOM_SEEDS): NON_NEGATIVE_INT,
                vol.Required(CONF_SEED): NON_NEGATIVE_INT,
                vol.Required(CONF_THREADS): POSITIVE_INT,
            },
            _range_in_order,
        )
    ),
}


@dataclass(frozen=True, slots=True)
class CliConfig:
    """A validated command and its options."""

    command: str
    options: dict[str, Any]

    def __getitem__(self, key: str) -> Any:
        """Return one validated option."""
        return self.options[key]


def validate_input(command: str, data: dict[str, Any]) -> CliConfig:
    """Validate and coerce the raw options of one command."""
    _LOGGER.debug("Validating options for %s: %s", command, data)
    schema = COMMAND_SCHEMAS.get(command)
    if schema is None:
        raise InvalidConfig(f"Unknown command {command!r}")

    try:
        options = schema(data)
    except vol.Invalid as err:
        _LOGGER.error("Invalid options for %s: %s", command, err)
        raise InvalidConfig(f"Invalid options for {command}: {err}") from err

    if command == "growth" and options[CONF_CONSTANT] is None:
        options[CONF_CONSTANT] = DEFAULT_GROWTH_CONSTANTS[options[CONF_STRATEGY]]

    return CliConfig(command=command, options=options)
