from .config import OracleConfig, available_suites, load_config
from .report import OracleReport
from .suite import run_suite
