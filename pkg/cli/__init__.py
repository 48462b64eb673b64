"""
CLI package - command-line entry point
"""
