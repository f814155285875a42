import logging

import pandas as pd
import pytest
from sqlalchemy import create_engine, inspect, text, types

import sql_data_types
from utils.checkpoint_utils import ISSUE_COLUMNS, handle_problematic_inputs
from utils.db_utils import infer_sql_type, load_db_config, write_to_sql


@pytest.fixture
def db_config(tmp_path):
    return {'url': f"sqlite:///{tmp_path / 'results.sqlite'}", 'schema_name': None, 'if_exists': 'append'}


class TestInferSqlType:
    def test_numeric_and_bool(self):
        assert isinstance(infer_sql_type(pd.Series([True]).dtype, 'is_critical'), types.Boolean)
        assert isinstance(infer_sql_type(pd.Series([3]).dtype, 'n'), types.BigInteger)
        assert isinstance(infer_sql_type(pd.Series([0.5]).dtype, 'ratio'), types.Float)

    def test_text_lengths(self):
        assert infer_sql_type(pd.Series(["x"]).dtype, 'multiplicity_histogram').length == 4000
        assert infer_sql_type(pd.Series(["x"]).dtype, 'verdict').length == 255


class TestWriteToSql:
    def test_creates_and_appends(self, db_config):
        df = pd.DataFrame([{'n': 6, 'm': 6, 'is_critical': True, 'verdict': 'yes'}])
        write_to_sql(df, 'verify_results', logger=logging.getLogger(__name__), config=db_config)
        write_to_sql(df, 'verify_results', config=db_config)
        engine = create_engine(db_config['url'])
        with engine.connect() as conn:
            assert conn.execute(text("SELECT COUNT(*) FROM verify_results")).scalar() == 2
        engine.dispose()

    def test_type_overrides(self, db_config):
        df = pd.DataFrame([{'n': 5, 'k': 2, 'max_edges': None, 'extremal_graph6': ''}])
        write_to_sql(df, 'search_results', sql_types=sql_data_types.sql_types_search, config=db_config)
        engine = create_engine(db_config['url'])
        columns = {column['name']: column['type'] for column in inspect(engine).get_columns('search_results')}
        assert isinstance(columns['max_edges'], types.Integer)
        engine.dispose()

    def test_unreachable_database(self, tmp_path):
        config = {'url': 'sqlite:////nonexistent-root-dir/sub/results.sqlite'}
        with pytest.raises(Exception):
            write_to_sql(pd.DataFrame([{'n': 1}]), 'results', config=config)

    def test_load_db_config_fills_defaults(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text('{"url": "sqlite://"}')
        config = load_db_config(path)
        assert config['url'] == "sqlite://"
        assert config['if_exists'] == 'append'

    def test_load_db_config_invalid(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(ValueError):
            load_db_config(path)


def test_problem_ledger(tmp_path):
    issue = {'input_name': 'a.el', 'input_path': '/x/a.el', 'issue_type': 'ERROR',
             'message': 'bad header', 'timestamp': '2024-01-01T00:00:00', 'runner': 'VerifyRunner'}
    path = handle_problematic_inputs([issue], tmp_path, 'VerifyRunner')
    ledger = pd.read_csv(path)
    assert list(ledger.columns) == ISSUE_COLUMNS
    assert ledger.loc[0, 'message'] == 'bad header'
    assert handle_problematic_inputs([], tmp_path, 'VerifyRunner') is None
