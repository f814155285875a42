"""
Pydantic models for the machine-readable documents written with --json.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Witness(BaseModel):
    kind: str
    diameter: Optional[int] = None
    edge: Optional[List[int]] = None


class LemmaChecks(BaseModel):
    """Verdicts of the lemma checkers; None when a check is not applicable."""

    l31: bool
    l41: Optional[bool] = None
    l42: Optional[bool] = None
    l43: Optional[bool] = None
    e_g0_bound: Optional[bool] = None
    matching_ok: Optional[bool] = None


class PipelineReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int
    t: int
    h1_size: int
    h2_size: int
    h3_size: int
    h4_size: int
    h2_linear: bool
    h2_ratio_ok: bool
    h3_ratio_ok: bool
    h4_ratio_ok: bool
    h4_triangle_free: bool
    collisions: int = 0
    dropped_paths: int = 0
    max_step_deletions: int = 0
    step_bound_ok: bool = True

    @property
    def all_ok(self) -> bool:
        return all((self.h2_linear, self.h2_ratio_ok, self.h3_ratio_ok, self.h4_ratio_ok, self.h4_triangle_free))


class AnalysisReport(BaseModel):
    source: Optional[str] = None
    n: int
    m: int
    k: int
    t: int
    diameter: Optional[int] = Field(None, description="null when the graph is disconnected")
    is_critical: bool
    witness: Optional[Witness] = None
    critical_pair_count: int
    multiplicity_histogram: Dict[int, int]
    heavy_edge_count: int
    t_edge_count: int
    g0_edge_count: int
    lemma_checks: LemmaChecks
    degree_square_sum: int
    degree_square_ratio: Optional[float] = None
    pipelines: Optional[List[PipelineReport]] = None


class SearchDocument(BaseModel):
    n: int
    k: int
    max_edges: Optional[int] = None
    extremal_graph6: List[str]
    critical_count: int
    class_count: int
