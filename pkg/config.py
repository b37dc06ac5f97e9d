import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()

@dataclass
class Settings:
    max_part_cap: int = int(os.getenv("UNREF_MAX_CAP", "30"))
    max_weight_cap: int = int(os.getenv("UNREF_MAX_WEIGHT", "120"))
    workers: int = int(os.getenv("UNREF_WORKERS", "1"))
    split_depth: int = int(os.getenv("UNREF_SPLIT_DEPTH", "4"))
    log_level: str = os.getenv("UNREF_LOG_LEVEL", "WARNING")

settings = Settings()
