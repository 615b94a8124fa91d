"""
SVG drawing of spadjors.
"""
