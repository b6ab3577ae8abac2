"""
HTTP routers: sigma computation, verification suites and distribution tables
"""
