"""Exceptional sequences over the linear A_n quiver and non-crossing spanning trees."""

__version__ = "0.1.0"
