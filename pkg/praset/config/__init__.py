"""
Configuration module for praset.
"""

from praset.config.app_config import AppConfig, load_app_config, parse_limit

__all__ = ["AppConfig", "load_app_config", "parse_limit"]
