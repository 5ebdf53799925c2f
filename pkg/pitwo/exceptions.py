#
# (c) Copyright 2026 by the pitwo developers.
#
# Exceptions
#
# Everything we raise on purpose is a PiError. The exit_code is what the CLI
# hands back to the shell: 1 for domain failures, 2 for syntax/usage.
#

class PiError(RuntimeError):
    exit_code = 1

    def __init__(self, msg, step=None):
        self.step = step
        self.raw_msg = msg
        super().__init__(msg)

    def __str__(self):
        if self.step is None:
            return self.raw_msg
        return f'step {self.step}: {self.raw_msg}'

class PiSyntaxError(PiError):
    exit_code = 2

    def __init__(self, msg, line=None, column=None, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(expected))
        if line is not None:
            msg = f'line {line}, column {column}: {msg}'
        if self.expected:
            msg += ' (expected one of: %s)' % ', '.join(self.expected)
        super().__init__(msg)

# file we cannot open, or cannot decode as text
class BadInputFile(PiError):
    exit_code = 2

# deeper than the interpreter stack allows
class TooDeep(PiError): pass

# typing
class IllTyped(PiError): pass
class TypeMismatch(IllTyped): pass
class Ambiguous(IllTyped): pass
class ValueTypeMismatch(PiError): pass

# level-2 theory
class EndpointMismatch(PiError): pass
class NotPi2(PiError): pass
class SemanticMismatch(PiError): pass

# rewriting
class BadPosition(PiError): pass
class PatternMismatch(PiError): pass
class IllTypedInstance(PiError): pass
class FinalMismatch(PiError): pass

# model / correspondence
class NoCell(PiError): pass
class NotQuotedEndpoints(PiError): pass

# If you see one of these, the code is wrong, not your input.
class InternalError(PiError): pass
class SoundnessViolation(InternalError): pass
class AgreementViolation(InternalError): pass

# EOF
