"""Prompt templates for the four modules and five Project Coach roles."""

from .library import (
    MODULE_KINDS,
    BindingReport,
    PromptLibrary,
    PromptTemplate,
    find_placeholders,
)

__all__ = [
    "MODULE_KINDS",
    "BindingReport",
    "PromptLibrary",
    "PromptTemplate",
    "find_placeholders",
]
