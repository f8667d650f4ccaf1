"""Graph enrichment passes and the default pipeline."""

from __future__ import annotations

from cpg.passes.base import (
    UNKNOWN_TYPE,
    AnalysisTimeout,
    DfgMode,
    Pass,
    PassContext,
    order_passes,
    run_passes,
)
from cpg.passes.calls import call_pass
from cpg.passes.dfg import ReachingDefinitions, dfg_pass
from cpg.passes.eog import EogBuilder, eog_pass, function_exits
from cpg.passes.inference import INFERRED_UNIT_NAME, inference_pass
from cpg.passes.symbols import symbol_pass
from cpg.passes.types import TypeRegistry, expression_type, type_pass

DEFAULT_PASSES: tuple[Pass, ...] = (
    Pass("symbols", symbol_pass),
    Pass("types", type_pass, ("symbols",)),
    Pass("calls", call_pass, ("symbols", "types")),
    Pass("inference", inference_pass, ("symbols", "calls")),
    Pass("eog", eog_pass),
    Pass("dfg", dfg_pass, ("eog", "inference")),
)

__all__ = [
    "DEFAULT_PASSES",
    "INFERRED_UNIT_NAME",
    "UNKNOWN_TYPE",
    "AnalysisTimeout",
    "DfgMode",
    "EogBuilder",
    "Pass",
    "PassContext",
    "ReachingDefinitions",
    "TypeRegistry",
    "call_pass",
    "dfg_pass",
    "eog_pass",
    "expression_type",
    "function_exits",
    "inference_pass",
    "order_passes",
    "run_passes",
    "symbol_pass",
    "type_pass",
]
