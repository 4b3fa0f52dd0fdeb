"""Python bindings for the lvspread C++ core."""

from ._lvspread import *  # noqa: F401,F403
from ._lvspread import ModelParams, MutationScaling

__all__ = [name for name in dir() if not name.startswith("_")]


def reference_params() -> ModelParams:
    """Parameters of the front-profile reference run."""
    return ModelParams(D_e=0.3, D_d=1.5, r_e=1.1, r_d=0.2, m_ee=1 / 1.2, m_dd=1.0,
                       m_ed=0.8, m_de=0.7, mu_e=0.001, mu_d=0.00025)
