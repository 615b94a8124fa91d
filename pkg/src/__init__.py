"""
Boolean algebra on Yin sets represented by realizable spadjors.
"""
