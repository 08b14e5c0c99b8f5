"""Custom error classes for jspec."""

from typing import Dict, Any, Optional

class JSpecError(Exception):
    """Base exception for jspec."""

    def __init__(self, message: str, code: int = -32000, data: Optional[Dict[str, Any]] = None):
        self.message = message
        self.code = code
        self.data = data
        super().__init__(message)

    def to_json_rpc_error(self) -> Dict[str, Any]:
        """Convert to JSON-RPC error format."""
        error = {
            "code": self.code,
            "message": self.message
        }
        if self.data:
            error["data"] = self.data
        return error

class ValidationError(JSpecError):
    """Input validation error (malformed flags, schemas or values)."""

    def __init__(self, message: str, field: str = None):
        super().__init__(message, -32602)
        if field:
            self.data = {"field": field}

class CompositionError(JSpecError):
    """Two maps or morphisms that do not compose."""

    def __init__(self, message: str):
        super().__init__(message, -32010)

class WindowError(JSpecError):
    """A query reaches outside the truncation window."""

    def __init__(self, message: str):
        super().__init__(message, -32011)

class InvalidDatumError(JSpecError):
    """A T-datum failed validation and cannot be evaluated or converted."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message, -32012, witness)

class InvalidFunctorError(JSpecError):
    """A J-functor failed validation and cannot be converted."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message, -32013, witness)

class VerificationError(JSpecError):
    """A certified construction turned out not to be well defined or bijective."""

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message, -32020, witness)
