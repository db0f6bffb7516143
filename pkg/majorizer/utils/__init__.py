# majorizer utilities
from .utils import get_logger, env_float, env_int, read_json, write_json

__all__ = ["get_logger", "env_float", "env_int", "read_json", "write_json"]
