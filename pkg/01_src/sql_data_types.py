from sqlalchemy import types
# SQL column types that override the dtype-based inference per result table


sql_types_analyze = {
    'source': types.String(length=1000),             # varchar(1000)
    'n': types.Integer(),                            # int
    'm': types.Integer(),                            # int
    'k': types.Integer(),                            # int
    't': types.Integer(),                            # int
    'diameter': types.Integer(),                     # int, null when disconnected
    'is_critical': types.Boolean(),                  # bit
    'witness': types.String(length=255),             # varchar(255)
    'multiplicity_histogram': types.String(length=4000),  # varchar(4000), JSON
    'lemma_l31': types.Boolean(),                    # bit
    'lemma_l41': types.Boolean(),                    # bit, null when not applicable
    'lemma_l42': types.Boolean(),                    # bit
    'lemma_l43': types.Boolean(),                    # bit
    'lemma_e_g0_bound': types.Boolean(),             # bit
    'lemma_matching_ok': types.Boolean(),            # bit
    'degree_square_ratio': types.Float(),            # float
}

sql_types_search = {
    'n': types.Integer(),                            # int
    'k': types.Integer(),                            # int
    'max_edges': types.Integer(),                    # int, null when no critical graph exists
    'critical_count': types.Integer(),               # int
    'class_count': types.Integer(),                  # int
    'extremal_graph6': types.String(length=4000),    # varchar(4000)
    'murty_simon_ok': types.Boolean(),               # bit, null for k != 2
}
