#!/usr/bin/python
# -*- coding: utf-8 -*-


class BilliardException(Exception):
    pass


class DomainError(BilliardException):
    """
    Input lies outside the scope of the requested model
    """
    pass


class InvalidInputError(DomainError):
    pass


class IntegrityError(BilliardException):
    """
    Internal consistency check failed, carries diagnostics
    """

    def __init__(self, message, diagnostics=None):
        super(IntegrityError, self).__init__(message)
        self.diagnostics = diagnostics or {}


class ParseError(BilliardException):
    pass


class ValidationFailure(BilliardException):
    def __init__(self, report):
        super(ValidationFailure, self).__init__('Domain validation failed: {}'.format(
            '; '.join(str(violation) for violation in report.violations)))
        self.report = report
