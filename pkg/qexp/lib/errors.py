class QexpError(Exception):
    '''
    Base class of every error raised by qexp.
    '''


class StructureError(QexpError, ValueError):
    '''
    Operands built over different symbol tables, or malformed arguments.
    '''


class PoleError(QexpError, ZeroDivisionError):
    '''
    Division by zero: a zero rational function, a denominator vanishing after
    substitution, or a pole at an evaluation point.
    '''


class NotInvertibleError(PoleError):
    '''
    Power series with a vanishing constant term.
    '''


class OrderError(QexpError, ValueError):
    '''
    Index beyond the truncation order.
    '''


class SingularMatrixError(QexpError, ValueError):
    '''
    Lower-triangular matrix without unit diagonal.
    '''


class DomainError(QexpError, ValueError):
    '''
    Numeric evaluation requested outside the convergence region.
    '''


class ParseError(QexpError, ValueError):
    '''
    Malformed rational-function literal.
    '''


class ConfigError(QexpError, ValueError):
    '''
    Invalid run configuration.
    '''
