import logging
from functools import wraps
from .handlers import command_exception_handler

logger = logging.getLogger(__name__)


def handle_exceptions(handle_func):
    """
    Decorator routing every exception of a command's ``handle`` through the handler.

    Usage:
        class Command(ReportCommand):
            @handle_exceptions
            def handle(self, *args, **options):
                # command code
    """
    @wraps(handle_func)
    def wrapper(command, *args, **options):
        try:
            return handle_func(command, *args, **options)
        except Exception as exc:
            name = command.__module__.rsplit('.', 1)[-1]
            raise command_exception_handler(exc, {'command': name, 'options': options}) from exc

    return wrapper
