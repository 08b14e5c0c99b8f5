"""Configuration management for jspec."""

import os
from dotenv import load_dotenv
from pydantic import BaseModel, validator

class Config(BaseModel):
    """Application configuration."""

    # Server Configuration
    HOST: str = "0.0.0.0"
    PORT: int = 8000
    DEBUG: bool = False

    # Verification Configuration
    SEED: int = 20100101
    MAX_WINDOW: int = 4
    WINDOW_M: int = 2
    WINDOW_N: int = 2
    RANDOM_DATA_COUNT: int = 50
    RANDOM_PAIR_COUNT: int = 20
    SPECTRUM_P_MAX: int = 2

    # Output
    SCHEMA_VERSION: str = "v1"

    @validator('WINDOW_M', 'WINDOW_N')
    def validate_window(cls, v, values):
        if v < 0:
            raise ValueError('Window bounds must be non-negative')
        limit = values.get('MAX_WINDOW', 4)
        if v > limit:
            raise ValueError(f'Window bounds must not exceed MAX_WINDOW={limit}')
        return v

    @validator('RANDOM_DATA_COUNT', 'RANDOM_PAIR_COUNT', 'SPECTRUM_P_MAX')
    def validate_counts(cls, v):
        if v < 0:
            raise ValueError('Counts must be non-negative')
        return v

def load_config() -> Config:
    """Load configuration from environment variables (and an optional .env file)."""
    load_dotenv()
    return Config(
        HOST=os.getenv('HOST', '0.0.0.0'),
        PORT=int(os.getenv('PORT', '8000')),
        DEBUG=os.getenv('DEBUG', 'false').lower() == 'true',
        MAX_WINDOW=int(os.getenv('JSPEC_MAX_WINDOW', '4')),
        SEED=int(os.getenv('JSPEC_SEED', '20100101')),
        WINDOW_M=int(os.getenv('JSPEC_WINDOW_M', '2')),
        WINDOW_N=int(os.getenv('JSPEC_WINDOW_N', '2')),
        RANDOM_DATA_COUNT=int(os.getenv('JSPEC_RANDOM_DATA_COUNT', '50')),
        RANDOM_PAIR_COUNT=int(os.getenv('JSPEC_RANDOM_PAIR_COUNT', '20')),
        SPECTRUM_P_MAX=int(os.getenv('JSPEC_SPECTRUM_P_MAX', '2'))
    )

# Global config instance
config = load_config()
