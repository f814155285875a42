"""
Database utility functions for exporting result tables through SQLAlchemy.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Optional

import pandas as pd
from sqlalchemy import Column, MetaData, Table, create_engine, text, types
from sqlalchemy.engine import Engine

DEFAULT_DB_CONFIG = {
    'url': 'sqlite:///02_data/02_output/results.sqlite',
    'schema_name': None,
    'if_exists': 'append',
}


def infer_sql_type(dtype, column_name: str) -> types.TypeEngine:
    """
    Infer SQLAlchemy type from pandas dtype.

    Args:
        dtype: Pandas dtype
        column_name: Name of the column (used for length inference)

    Returns:
        SQLAlchemy type
    """
    # bool first: pandas treats bool as a subtype of integer in some versions
    if pd.api.types.is_bool_dtype(dtype):
        return types.Boolean()
    if pd.api.types.is_integer_dtype(dtype):
        return types.BigInteger()
    if pd.api.types.is_float_dtype(dtype):
        return types.Float()
    if pd.api.types.is_datetime64_any_dtype(dtype):
        return types.DateTime()

    # Free-form columns holding histograms, witnesses or graph6 lists
    if any(keyword in column_name.lower() for keyword in ['histogram', 'witness', 'graph6', 'message', 'source']):
        return types.String(length=4000)
    return types.String(length=255)


def derive_sql_types(df: pd.DataFrame) -> Dict[str, types.TypeEngine]:
    return {column: infer_sql_type(df[column].dtype, column) for column in df.columns}


def load_db_config(config_path: Optional[str | Path] = None) -> dict:
    """Load database configuration from config.json, filling missing keys with defaults."""
    config_path = Path(config_path) if config_path else Path(__file__).parent.parent / "config.json"
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            loaded = json.load(f)
    except Exception as e:
        raise ValueError(f"Error loading database config from {config_path}: {str(e)}")
    if not isinstance(loaded, dict):
        raise ValueError(f"Invalid database config format in {config_path}")
    return {**DEFAULT_DB_CONFIG, **loaded}


def get_engine(config: Optional[dict] = None) -> Engine:
    """Get SQLAlchemy engine for the configured results database."""
    if config is None:
        config = load_db_config()
    url = config['url']
    if url.startswith('sqlite:///') and not url.startswith('sqlite:////'):
        Path(url[len('sqlite:///'):]).parent.mkdir(parents=True, exist_ok=True)
    return create_engine(url, pool_pre_ping=True)


def check_connection(engine: Engine, logger: logging.Logger) -> bool:
    try:
        with engine.connect() as conn:
            conn.execute(text("SELECT 1"))
        logger.debug(f"Connected to {engine.url.render_as_string(hide_password=True)}")
        return True
    except Exception as e:
        logger.error(f"SQLAlchemy connection test failed: {str(e)}")
        return False


def write_to_sql(
    df: pd.DataFrame,
    table_name: str,
    sql_types: Optional[Dict] = None,
    logger: Optional[logging.Logger] = None,
    config: Optional[dict] = None,
) -> None:
    """
    Write DataFrame to a SQL table, creating it on first use.

    Args:
        df: DataFrame to write
        table_name: Name of the target table
        sql_types: Optional column -> SQLAlchemy type mapping. Missing columns are inferred.
        logger: Optional logger instance for logging operations
        config: Database settings; loaded from config.json when omitted

    Raises:
        ConnectionError: If the database cannot be reached
    """
    if logger is None:
        logger = logging.getLogger(__name__)

    try:
        if config is None:
            config = load_db_config()
        column_types = derive_sql_types(df)
        if sql_types:
            column_types.update({col: sql_type for col, sql_type in sql_types.items() if col in df.columns})

        engine = get_engine(config)
        if not check_connection(engine, logger):
            raise ConnectionError("Could not establish SQLAlchemy connection")

        schema_name = config.get('schema_name')
        metadata = MetaData()
        Table(table_name, metadata, *[Column(name, sql_type) for name, sql_type in column_types.items()], schema=schema_name)
        metadata.create_all(engine)

        df.to_sql(
            name=table_name,
            con=engine,
            schema=schema_name,
            if_exists=config.get('if_exists', 'append'),
            index=False,
            dtype=column_types,
        )
        target = f"{schema_name}.{table_name}" if schema_name else table_name
        logger.info(f"Successfully wrote {len(df)} rows to {target}")
        for col, sql_type in column_types.items():
            logger.debug(f"  {col}: {sql_type}")
        engine.dispose()

    except Exception as e:
        logger.error(f"Error writing to SQL database: {str(e)}")
        raise
