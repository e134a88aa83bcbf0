from .sample import Sample
from .estimate_report import EstimateReport
from .estimators import m_estimate, z_estimate
