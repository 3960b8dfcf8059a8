"""Exception hierarchy shared across the package."""


class BciArmError(Exception):
    """Base class for all errors raised by this package."""


class SessionFormatError(BciArmError):
    """A session or label-track file violates the documented line format."""


class EpochError(BciArmError):
    """An epoch-level precondition failed (wrong rate, rejected epoch, ...)."""


class ModelError(BciArmError):
    """Classifier model is missing, malformed, or incompatible."""


class KinematicsError(BciArmError):
    """Invalid pose or DH table input."""


class ServoError(BciArmError):
    """Servo pulse/angle outside its legal range, or unknown command binding."""


class ConfigError(BciArmError):
    """Configuration file failed validation."""
