"""
Exception handling module for the Ulrich toolkit.

This module contains:
- Custom exception classes (exceptions.py)
- Command exception handler (handlers.py)
- Error handling decorator for commands (decorators.py)
"""
from .exceptions import (
    EXIT_OK,
    EXIT_FALSIFIED,
    EXIT_USAGE,
    UlrichError,
    ValidationError,
    ParseError,
    UnknownVariableError,
    CoefficientDomainError,
    DomainMismatchError,
    SizeExceededError,
    ShapeError,
    NotSkewSymmetricError,
    CharacteristicError,
    RootOfUnityError,
    DegreeMismatchError,
    FalsifiedError,
)
from .handlers import command_exception_handler
from .decorators import handle_exceptions

__all__ = [
    'EXIT_OK',
    'EXIT_FALSIFIED',
    'EXIT_USAGE',
    'UlrichError',
    'ValidationError',
    'ParseError',
    'UnknownVariableError',
    'CoefficientDomainError',
    'DomainMismatchError',
    'SizeExceededError',
    'ShapeError',
    'NotSkewSymmetricError',
    'CharacteristicError',
    'RootOfUnityError',
    'DegreeMismatchError',
    'FalsifiedError',
    'command_exception_handler',
    'handle_exceptions',
]
