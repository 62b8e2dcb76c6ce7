"""Pure braid groups presented by squares of longest elements."""

from .braid import BraidWord, Permutation, free_reduce, is_pure, project_to_permutation, reverse_word
from .garside import GarsideNormalForm, equal, normal_form

__all__ = [
    "BraidWord",
    "GarsideNormalForm",
    "Permutation",
    "equal",
    "free_reduce",
    "is_pure",
    "normal_form",
    "project_to_permutation",
    "reverse_word",
]
