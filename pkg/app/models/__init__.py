"""
Graph value type and pydantic schemas
"""
