"""
Geometry value types, curves and spadjors.
"""
