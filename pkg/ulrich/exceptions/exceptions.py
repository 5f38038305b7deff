EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2


class UlrichError(Exception):
    """Base exception for toolkit errors"""
    exit_code = EXIT_USAGE
    default_detail = 'A toolkit error occurred.'
    default_code = 'error'

    def __init__(self, detail=None, code=None, exit_code=None):
        self.detail = detail if detail is not None else self.default_detail
        if code is not None:
            self.default_code = code
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.detail)

    def as_payload(self):
        return {
            'code': self.default_code,
            'message': str(self.detail),
            'type': type(self).__name__,
        }


class ValidationError(UlrichError):
    """Invalid input or violated precondition"""
    default_detail = 'Validation error occurred.'
    default_code = 'validation_error'


class ParseError(ValidationError):
    """Polynomial text does not follow the grammar"""
    default_detail = 'Could not parse polynomial.'
    default_code = 'parse_error'

    def __init__(self, detail=None, position=None, text=None):
        self.position = position
        self.text = text
        if detail is not None and position is not None:
            detail = f'{detail} at position {position}'
        super().__init__(detail)

    def as_payload(self):
        payload = super().as_payload()
        payload['position'] = self.position
        return payload


class UnknownVariableError(ParseError):
    default_detail = 'Unknown variable.'
    default_code = 'unknown_variable'


class CoefficientDomainError(ParseError):
    default_detail = 'Coefficient does not belong to the coefficient domain.'
    default_code = 'coefficient_domain'


class DomainMismatchError(ValidationError):
    default_detail = 'Operands live in different rings.'
    default_code = 'domain_mismatch'


class SizeExceededError(ValidationError):
    default_detail = 'Matrix too large for cofactor expansion.'
    default_code = 'size_exceeded'


class ShapeError(ValidationError):
    default_detail = 'Matrix has the wrong shape.'
    default_code = 'shape_error'


class NotSkewSymmetricError(ShapeError):
    default_detail = 'Matrix is not skew-symmetric.'
    default_code = 'not_skew_symmetric'


class CharacteristicError(ValidationError):
    default_detail = 'Unsupported characteristic.'
    default_code = 'characteristic'


class RootOfUnityError(ValidationError):
    default_detail = 'A primitive root of unity is required.'
    default_code = 'root_of_unity'


class DegreeMismatchError(ValidationError):
    default_detail = 'Entries are not homogeneous of one degree.'
    default_code = 'degree_mismatch'


class FalsifiedError(UlrichError):
    """A claimed mathematical statement turned out false"""
    exit_code = EXIT_FALSIFIED
    default_detail = 'Verification failed.'
    default_code = 'falsified'
