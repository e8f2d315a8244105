from . import single_person, two_person
from .single_person import SinglePersonFeatures
from .two_person import TwoPersonFeatures

__all__ = ["single_person", "two_person", "SinglePersonFeatures", "TwoPersonFeatures"]
