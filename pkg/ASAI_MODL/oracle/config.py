# -*- coding: utf-8 -*-
"""
Oracle suite configuration, loaded from the json files in suite_configs/.
"""

import json
import logging
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Dict, List, Optional

from ..algebra.charlattice import DEFAULT_MAX_MODULUS

__all__ = ["MIN_MAX_MODULUS", "OracleConfig", "available_suites", "load_config"]

logger = logging.getLogger(__name__)

# q_o = 3, n = 3 gives M = 728 and must always be enumerable
MIN_MAX_MODULUS = 728
# products of two residues stay inside int64
INT64_SAFE_MODULUS = 2 ** 31 - 1

SUITE_DIR = Path(__file__).parent / "suite_configs"


@dataclass(frozen=True)
class OracleConfig:
    max_modulus: int = DEFAULT_MAX_MODULUS
    parallel: bool = False
    workers: int = 1
    block_size: int = 2 ** 16
    galois_pair: Dict[str, List[int]] = field(default_factory=lambda: {"q_o": [3], "n": [1, 3]})
    self_dual: Dict[str, List[int]] = field(default_factory=lambda: {"q": [3], "n": [1, 2]})
    parity: List[Dict[str, int]] = field(default_factory=list)
    ell_bound: int = 31
    euler_bound: int = 24
    euler_primes: List[int] = field(default_factory=lambda: [2, 3, 5, 7, 13])
    sample_size: int = 512
    scan_cap: Optional[int] = None

    def __post_init__(self):
        if self.max_modulus < MIN_MAX_MODULUS:
            raise ValueError("max_modulus must be >= {}, got {}".format(MIN_MAX_MODULUS, self.max_modulus))
        if self.max_modulus > INT64_SAFE_MODULUS:
            raise ValueError("max_modulus must be <= {}".format(INT64_SAFE_MODULUS))
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def limit(self) -> int:
        """Largest modulus a scan will enumerate; larger settings are skipped."""
        if self.scan_cap is None:
            return self.max_modulus
        return min(self.max_modulus, self.scan_cap)

    def with_modulus_limit(self, value: int) -> "OracleConfig":
        # below the enumeration floor the value only caps which settings run
        if value < MIN_MAX_MODULUS:
            return replace(self, scan_cap=value)
        return replace(self, max_modulus=value, scan_cap=None)

    def to_dict(self) -> dict:
        return asdict(self)


def available_suites() -> List[str]:
    return sorted(p.stem for p in SUITE_DIR.glob("*.json"))


def load_config(name: str, **overrides) -> OracleConfig:
    config_file = SUITE_DIR / f"{name}.json"
    assert config_file.exists(), f"Unknown oracle suite {name}, available: {available_suites()}"
    with open(config_file, 'r') as fv:
        values = json.load(fv)
    values.update({k: v for k, v in overrides.items() if v is not None})
    logger.info(f"Loaded oracle suite {name} from {config_file}")
    return OracleConfig(**values)
