""" Errors and warnings raised by Screenpipes. Value problems subclass
ValueError, file problems subclass IOError, so callers that only know
the builtins still catch them. """

from __future__ import print_function, division, absolute_import


class ScreenValidationError(ValueError):
    """ Raised when a screen record has fatal problems. All problems
    found are listed in violations, not just the first one. """

    def __init__(self, screen_id, violations):
        self.screen_id = screen_id
        self.violations = list(violations)

        message = ("Screen " + str(screen_id) + " failed validation: "
                   + "; ".join(self.violations))

        super(ScreenValidationError, self).__init__(message)


class SchemaError(ValueError):
    """ Raised when an input file is not valid JSON or does not have the
    expected top-level structure. """

    def __init__(self, path, message, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column

        where = str(path)
        if line is not None:
            where += ":" + str(line) + ":" + str(column)

        super(SchemaError, self).__init__(where + ": " + message)


class ConfigError(ValueError):
    pass


class MissingRaster(IOError):
    pass


class EmptyCrop(ValueError):
    pass


class SetMismatch(ValueError):
    pass


class IdMismatch(ValueError):
    pass


class InfeasibleSpec(ValueError):
    pass


class ScreenValidationWarning(UserWarning):
    pass


class UnachievablePrecisionWarning(UserWarning):
    pass
