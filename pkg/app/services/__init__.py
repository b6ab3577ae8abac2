"""
Service layer: graph construction, σ computation, enumeration and verification
"""
