import os
import sys
from importlib import metadata, resources
from pathlib import Path

PLATFORM = sys.platform
CLI_NAME = "EDAHA"
CLI_NAME_LOWER = "edaha"
PROJECT_NAME = "edaha"
APP_NAME = os.environ.get(f"{CLI_NAME}_APP_NAME", CLI_NAME_LOWER)

try:
    __version__ = metadata.version(PROJECT_NAME)
except metadata.PackageNotFoundError:
    __version__ = "0.0.0"

try:
    APP_DIR = Path(str(resources.files(PROJECT_NAME)))
except ModuleNotFoundError:
    APP_DIR = Path(__file__).resolve().parent.parent

ASSETS_DIR = APP_DIR / "assets"
CERTIFICATES_DIR = ASSETS_DIR / "certificates"

try:
    import click

    APP_DATA_DIR = Path(click.get_app_dir(APP_NAME, roaming=False))
except ModuleNotFoundError:
    APP_DATA_DIR = (
        Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config")) / APP_NAME
    )

if PLATFORM == "win32":
    APP_CACHE_DIR = APP_DATA_DIR / "cache"
elif PLATFORM == "darwin":
    APP_CACHE_DIR = Path.home() / "Library" / "Caches" / APP_NAME
else:
    xdg_cache_home = Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache"))
    APP_CACHE_DIR = xdg_cache_home / APP_NAME

LOG_FOLDER = APP_CACHE_DIR / "logs"

APP_DATA_DIR.mkdir(parents=True, exist_ok=True)
APP_CACHE_DIR.mkdir(parents=True, exist_ok=True)
LOG_FOLDER.mkdir(parents=True, exist_ok=True)

USER_CONFIG = APP_DATA_DIR / "config.toml"

LOG_FILE = LOG_FOLDER / "app.log"
