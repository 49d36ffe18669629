"""Decremental graph connectivity via a randomized sparse certificate.

Public surface: the graph container, the decremental connectivity and
2-edge-connectivity structures with constant-time queries and a final
self-check, the unique-perfect-matching application, and the brute-force
oracles used to verify all of it.
"""

from .engine import CertificateDelta, CertificateEngine, CertificateParams, SelfCheckReport
from .frontend import BridgeEvent, DecrementalConnectivity, SplitNotification
from .graph import DynamicGraph, EdgeMask, GraphError, boundary_scan, degree, load
from .matching import MatchingResult, unique_perfect_matching
from .tracker import ComponentTracker, SplitEvent, TrackerError

__all__ = [
    "BridgeEvent",
    "CertificateDelta",
    "CertificateEngine",
    "CertificateParams",
    "ComponentTracker",
    "DecrementalConnectivity",
    "DynamicGraph",
    "EdgeMask",
    "GraphError",
    "MatchingResult",
    "SelfCheckReport",
    "SplitEvent",
    "SplitNotification",
    "TrackerError",
    "boundary_scan",
    "degree",
    "load",
    "unique_perfect_matching",
]

__version__ = "0.1.0"
