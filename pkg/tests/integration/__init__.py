"""
Integration tests running whole pipelines and the command line.
"""
