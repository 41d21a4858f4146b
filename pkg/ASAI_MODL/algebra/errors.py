# -*- coding: utf-8 -*-
"""
Exceptions raised by the algebra, oracle and cli layers.
"""

__all__ = [
    "AsaiError",
    "InvalidSetting",
    "InvalidDatum",
    "NonRegularInput",
    "DualityUndefined",
    "DualityViolation",
    "ModulusTooLarge",
    "NotDistinguishedInput",
    "BadCharacteristic",
    "CharacteristicMismatch",
    "NotDivisible",
]


class AsaiError(Exception):
    """Base class of every error raised by the package."""


class InvalidSetting(AsaiError):
    pass


class InvalidDatum(AsaiError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join("{}: {}".format(v.tag, v.message) for v in self.violations))


class NonRegularInput(AsaiError):
    pass


class DualityUndefined(AsaiError):
    pass


class DualityViolation(AsaiError):
    pass


class ModulusTooLarge(AsaiError):
    def __init__(self, modulus, bound):
        self.modulus = modulus
        self.bound = bound
        super().__init__("modulus {} exceeds the enumeration bound {}".format(modulus, bound))


class NotDistinguishedInput(AsaiError):
    pass


class BadCharacteristic(AsaiError):
    pass


class CharacteristicMismatch(AsaiError):
    pass


class NotDivisible(AsaiError):
    pass
