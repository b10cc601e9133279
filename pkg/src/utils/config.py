"""
Configuration management for the Hermitian hull toolkit
Handles environment variables, oracle limits, sweep and logging settings.
"""

from typing import List, Literal
from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()

class Config(BaseSettings):
    """Configuration class for the Hermitian hull toolkit."""

    model_config = SettingsConfigDict(
        env_prefix="EAQMDS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application settings
    debug: bool = Field(False, description="Log at DEBUG regardless of log_level")

    # Oracle settings
    max_n: int = Field(2000, description="Largest code length the Gram oracle is run on")

    # Sweep settings
    verify_q_list: List[int] = Field(
        default_factory=lambda: [4, 5, 7, 8, 9, 11, 13],
        description="Field sizes swept by the verify command",
    )
    workers: int = Field(1, description="Worker processes for sweeps (1 = serial)")

    # Output settings
    default_format: Literal["csv", "json"] = Field(
        "csv", description="Output format of sweep and table when --format is omitted"
    )
    output_directory: str = Field("output", description="Base of relative --output paths")

    # Logging settings
    log_level: str = Field("INFO", description="Log level")
    log_to_file: bool = Field(False, description="Also write logs to a file")
    log_directory: str = "logs"
    log_file: str = "eaqmds.log"
