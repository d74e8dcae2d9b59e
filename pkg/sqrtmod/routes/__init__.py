"""
Routes package for the modular square root service.

Contains the FastAPI endpoints exposing the algorithms over HTTP.
"""
