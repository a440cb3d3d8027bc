from .generate import generate_config_toml_from_app_model
from .loader import ConfigLoader

__all__ = ["ConfigLoader", "generate_config_toml_from_app_model"]
