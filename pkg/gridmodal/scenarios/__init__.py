"""
Scenario documents for GridModal.

Scenarios are JSON documents validated against the pydantic models in
gridmodal.models.scenario. Every problem in a document is reported at once,
each message prefixed with its key path or source position.
"""

import json
from typing import Any, List, Sequence, Union

from pydantic import ValidationError

from gridmodal.errors import ScenarioError
from gridmodal.models import Scenario
from gridmodal.scenarios.loader import ScenarioLoader


def _key_path(loc: Sequence[Union[str, int]], prefix: str = "") -> str:
    path = prefix
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}" if path else str(part)
    return path


def validation_messages(exc: ValidationError, prefix: str = "") -> List[str]:
    """
    Flatten a pydantic validation error into ``key.path: message`` strings.

    Args:
        exc: The validation error
        prefix: Key path of the validated block inside the scenario, if any

    Returns:
        One message per problem, in the order pydantic reports them
    """
    messages = []
    for error in exc.errors():
        message = str(error["msg"])
        if message.startswith("Value error, "):
            message = message[len("Value error, "):]
        path = _key_path(error["loc"], prefix)
        # Scenario-level checks name their keys in the message already
        if path and not message.startswith(f"{path}:"):
            message = f"{path}: {message}"
        messages.append(message)
    return messages


def parse_scenario(text: str) -> Scenario:
    """
    Parse and validate a scenario document.

    Args:
        text: JSON document

    Returns:
        The validated scenario

    Raises:
        ScenarioError: With the syntax error position, or with every validation error
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"line {exc.lineno} column {exc.colno}: {exc.msg}"])
    if not isinstance(data, dict):
        raise ScenarioError(["scenario: expected a JSON object at the top level"])

    try:
        return Scenario.model_validate(data)
    except ValidationError as exc:
        raise ScenarioError(validation_messages(exc))


__all__ = ["ScenarioLoader", "parse_scenario", "validation_messages"]
