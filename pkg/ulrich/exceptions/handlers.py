import logging
from django.core.management.base import CommandError
from .exceptions import UlrichError, EXIT_USAGE

logger = logging.getLogger(__name__)


def command_exception_handler(exc, context):
    """
    Translate an exception raised inside a command into a CommandError.

    Args:
        exc: The exception that was raised
        context: Dictionary with the command name and the parsed options

    Returns:
        CommandError carrying the exit code and a consistent error payload
    """
    command = context.get('command', 'unknown command')

    if isinstance(exc, CommandError):
        return exc

    if isinstance(exc, UlrichError):
        logger.warning(
            f"{type(exc).__name__} in {command}: {exc.detail}",
            extra={'command': command, 'code': exc.default_code},
        )
        error = CommandError(str(exc.detail), returncode=exc.exit_code)
        error.payload = {'error': exc.as_payload()}
        return error

    logger.critical(
        f"Unhandled exception in {command}: {type(exc).__name__}",
        exc_info=True,
        extra={'command': command},
    )
    error = CommandError(
        f'Internal error: {type(exc).__name__}: {exc}',
        returncode=EXIT_USAGE,
    )
    error.payload = {
        'error': {
            'code': 'internal_error',
            'message': str(exc),
            'type': type(exc).__name__,
        }
    }
    return error
