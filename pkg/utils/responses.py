from dataclasses import dataclass, field
from typing import Any, Optional


# exit-code contract shared by every management command
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def jsonable(value):
    """Turn witnesses (tuples, frozensets, numpy scalars) into plain JSON values."""
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(item) for item in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if hasattr(value, 'item') and callable(value.item):
        return value.item()
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


@dataclass
class CommandResult:
    payload: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK
    # tab-separated output replaces the JSON document when set
    text: Optional[str] = None


class CommandResponse:
    @staticmethod
    def success(result: Any = None, message=None):
        payload = {'result': result}
        if message is not None:
            payload['detail'] = str(message)
        return CommandResult(payload, EXIT_OK)

    @staticmethod
    def table(text):
        return CommandResult(payload=None, text=text)

    @staticmethod
    def failure(error):
        """A domain failure with its witness; ``error`` is a DomainError."""
        return CommandResult({
            'error': {
                'code': error.code,
                'detail': error.detail,
                'witness': jsonable(error.witness),
            },
        }, EXIT_USAGE if error.usage else EXIT_FAILURE)

    @staticmethod
    def property_failure(result: Any, detail):
        """A report that was computed but whose checks did not pass."""
        return CommandResult({'result': result, 'detail': str(detail)}, EXIT_FAILURE)

    @staticmethod
    def bad_request(detail=None):
        return CommandResult({'error': {'code': 'usage', 'detail': jsonable(detail)}}, EXIT_USAGE)
