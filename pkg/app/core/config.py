# filename: app/core/config.py
import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


class Settings:
    PROJECT_NAME: str = "Semigroup Homology Toolkit"
    PROJECT_VERSION: str = "0.4.0"

    DEBUG: bool = _env_bool("SGH_DEBUG", False)

    # core-semigroup
    CANONICAL_FORM_MAX_ORDER: int = _env_int("SGH_CANONICAL_FORM_MAX_ORDER", 5)
    IDENTITY_MAX_VARIABLES: int = _env_int("SGH_IDENTITY_MAX_VARIABLES", 4)

    # ideal structure / group completion
    BRUTEFORCE_IDEAL_MAX_ORDER: int = _env_int("SGH_BRUTEFORCE_IDEAL_MAX_ORDER", 64)
    ABELIANIZATION_BRUTEFORCE_MAX_ORDER: int = _env_int("SGH_ABELIANIZATION_BRUTEFORCE_MAX_ORDER", 64)
    VERIFY_STRUCTURE: bool = _env_bool("SGH_VERIFY_STRUCTURE", True)

    # resolution caps
    MAX_RESOLUTION_NODES: int = _env_int("SGH_MAX_RESOLUTION_NODES", 100_000)
    MAX_NODE_RANK: int = _env_int("SGH_MAX_NODE_RANK", 100_000)
    MAX_SHIFT: int = _env_int("SGH_MAX_SHIFT", 1_000_000)

    # nerve oracle
    NERVE_MAX_COLUMNS: int = _env_int("SGH_NERVE_MAX_COLUMNS", 20_000)

    # census
    CENSUS_MAX_ORDER: int = _env_int("SGH_CENSUS_MAX_ORDER", 3)
    CENSUS_EXTENDED_MAX_ORDER: int = _env_int("SGH_CENSUS_EXTENDED_MAX_ORDER", 4)
    CENSUS_MAX_DIM: int = _env_int("SGH_CENSUS_MAX_DIM", 6)
    CENSUS_WORKERS: int = _env_int("SGH_CENSUS_WORKERS", 1)


settings = Settings()
