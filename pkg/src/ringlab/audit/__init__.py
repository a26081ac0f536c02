from .claims import REGISTRY, AuditContext, AuditReport, Status, audit, run_all
from .inventory import DEFAULT_RINGS, default_inventory
from .recheck import recheck_fact, recheck_witness

__all__ = [
    "REGISTRY",
    "AuditContext",
    "AuditReport",
    "Status",
    "audit",
    "run_all",
    "DEFAULT_RINGS",
    "default_inventory",
    "recheck_fact",
    "recheck_witness",
]
