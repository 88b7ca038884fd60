"""Exception hierarchy shared across the package."""


class ShakeKeyError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(ShakeKeyError):
    """Invalid pipeline configuration, preset name, or parameter value."""


class TraceParseError(ShakeKeyError):
    """Malformed trace CSV content."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TraceOrderError(TraceParseError):
    """Trace timestamps decreased between consecutive rows."""


class SecretFormatError(ShakeKeyError):
    """Malformed secret file content."""


class PipelineError(ShakeKeyError):
    """Base class for failures inside the secret-extraction pipeline."""


class InsufficientDataError(PipelineError):
    """Series too short to compute thresholds."""


class NoSyncPointError(PipelineError):
    """No step fell strictly inside the detection band; re-collect data."""


class InsufficientTailError(PipelineError):
    """Fewer points remain after the sync point than one transform window."""


class TransformSizeError(PipelineError):
    """Transform input length is not a power of two."""


class NumericError(PipelineError):
    """Non-finite value encountered where a finite magnitude is required."""


class CryptoError(ShakeKeyError):
    """Base class for key-derivation and message-encryption failures."""


class DecryptionError(CryptoError):
    """Decryption failed (wrong key or corrupted ciphertext); nothing released."""


class MessageFormatError(CryptoError):
    """Encrypted blob is truncated or not block-aligned."""


class StegoError(ShakeKeyError):
    """Base class for image-carrier failures."""


class CapacityError(StegoError):
    """Payload does not fit in the carrier image."""


class StegoFormatError(StegoError):
    """Carrier does not hold a readable payload header."""
