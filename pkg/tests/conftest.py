from __future__ import annotations

import pytest
from bandrg.experiments.comparison import compare_rg_pc

ACCEPTANCE_COUPLINGS = (0.01, 1.0, 10.0)


@pytest.fixture(scope="session")
def comparison_reports():
    """RG against PC comparisons with N = 200 for n = 4, ..., 60."""
    return {g: compare_rg_pc(g, 200, range(4, 61), 3) for g in ACCEPTANCE_COUPLINGS}
