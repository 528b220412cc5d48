"""Elliptic surfaces over k(t): models, fibre classification, families, sections."""
from .families import FAMILIES, family, random_member
from .tate import KodairaFibre, Place, SurfaceAnalysis, analyze, classify_place
from .weierstrass import UnsupportedCharacteristic, WeierstrassModel

__all__ = [
    "FAMILIES", "KodairaFibre", "Place", "SurfaceAnalysis", "UnsupportedCharacteristic",
    "WeierstrassModel", "analyze", "classify_place", "family", "random_member",
]
