from uibcdf_stdlib.exceptions import InputArgumentError as _InputArgumentError


def _with_documentation(message, documentation_web=None):

    if documentation_web is not None:
        message = message.rstrip('.') + ': {}'.format(documentation_web)

    return message


class TailScoreError(Exception):

    def __init__(self, message, documentation_web=None):

        super().__init__(_with_documentation(message, documentation_web))


class InputArgumentError(TailScoreError, _InputArgumentError, ValueError):

    def __init__(self, argument, caller=None, reason=None, documentation_web=None):

        self.argument = argument
        self.caller = caller
        self.reason = reason

        _InputArgumentError.__init__(self, argument, caller, documentation_web)

    def __str__(self):

        message = super().__str__()
        if self.reason is not None:
            message = '{} ({})'.format(message, self.reason)

        return message


class ConstructionError(TailScoreError, ValueError):
    pass


class PreconditionError(TailScoreError, ValueError):
    pass


class MonotonicityError(TailScoreError, ValueError):

    def __init__(self, message, witness=None, documentation_web=None):

        self.witness = witness
        if witness is not None:
            message = message.rstrip('.') + ' (witness: {}).'.format(witness)

        super().__init__(message, documentation_web)


class RepairFailureError(MonotonicityError):
    pass


class BracketError(TailScoreError, ArithmeticError):
    pass


class QuadratureError(TailScoreError, ArithmeticError):
    pass


class VariationDivergenceError(TailScoreError, ArithmeticError):
    pass


class GridGuardError(TailScoreError, ValueError):

    def __init__(self, n_points, limit, documentation_web=None):

        self.n_points = n_points
        message = 'The grid has {} points, above the limit of {}.'.format(n_points, limit)

        super().__init__(message, documentation_web)


class InputFileError(TailScoreError, ValueError):

    def __init__(self, path, message, line=None, documentation_web=None):

        self.path = path
        self.line = line
        if line is not None:
            message = '{}:{}: {}'.format(path, line, message)
        else:
            message = '{}: {}'.format(path, message)

        super().__init__(message, documentation_web)


class UnknownRegistryNameError(TailScoreError, KeyError):

    def __init__(self, name, known=(), documentation_web=None):

        self.name = name
        message = 'Unknown building block "{}". Known names: {}.'.format(name, ', '.join(sorted(known)))

        super().__init__(message, documentation_web)

    def __str__(self):
        return self.args[0]


class UnknownSuiteError(TailScoreError, KeyError):

    def __init__(self, name, known=(), documentation_web=None):

        self.name = name
        message = 'Unknown verification suite "{}". Known suites: {}.'.format(name, ', '.join(sorted(known)))

        super().__init__(message, documentation_web)

    def __str__(self):
        return self.args[0]
