"""System-prompt templates and strict placeholder interpolation.

Template bodies live as text assets next to this module, one file per
template, indexed by ``index.json``; code never embeds prompt text. Four of
the five Project Coach prompts are marked ``reconstructed`` in the index:
their exact upstream wording is unavailable, so stand-ins with the same
contract ship until the originals can be dropped in as a data change.

Interpolation is single-pass: a binding value containing brace tokens is
inserted literally (course documents legitimately contain code braces).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from ..errors import ConfigurationError, NotFoundError, ValidationError

MODULE_KINDS = ("coding", "project", "exam", "interview")

_PLACEHOLDER = re.compile(r"\{([A-Za-z_][A-Za-z0-9_]*)\}")


def find_placeholders(body: str) -> frozenset[str]:
    return frozenset(_PLACEHOLDER.findall(body))


@dataclass(frozen=True)
class PromptTemplate:
    template_id: str
    module_kind: str
    body: str
    placeholders: frozenset[str]
    reconstructed: bool = False


@dataclass(frozen=True)
class BindingReport:
    missing: frozenset[str]
    extra: frozenset[str]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


class PromptLibrary:
    """Immutable after load; freely shared across threads."""

    def __init__(self, templates: list[PromptTemplate],
                 default_scoping_document: str):
        self._templates = {t.template_id: t for t in templates}
        self.default_scoping_document = default_scoping_document

    @classmethod
    def load(cls) -> "PromptLibrary":
        root = resources.files(__package__) / "assets"
        index = json.loads((root / "index.json").read_text(encoding="utf-8"))
        templates = []
        for entry in index["templates"]:
            if entry["module_kind"] not in MODULE_KINDS:
                raise ConfigurationError(
                    f"template {entry['template_id']!r}: unknown module kind "
                    f"{entry['module_kind']!r}"
                )
            body = (root / entry["asset"]).read_text(encoding="utf-8")
            declared = frozenset(entry["placeholders"])
            found = find_placeholders(body)
            if declared != found:
                raise ConfigurationError(
                    f"template {entry['template_id']!r}: index declares placeholders "
                    f"{sorted(declared)} but body contains {sorted(found)}"
                )
            templates.append(
                PromptTemplate(
                    template_id=entry["template_id"],
                    module_kind=entry["module_kind"],
                    body=body,
                    placeholders=found,
                    reconstructed=bool(entry.get("reconstructed", False)),
                )
            )
        scoping_default = (root / "default_project_scoping_document.md").read_text(
            encoding="utf-8"
        )
        return cls(templates, scoping_default)

    def get(self, template_id: str) -> PromptTemplate:
        try:
            return self._templates[template_id]
        except KeyError:
            raise NotFoundError(
                f"unknown template {template_id!r}",
                details={"known_templates": list(self._templates)},
            ) from None

    def list_templates(self, module_kind: str | None = None) -> list[PromptTemplate]:
        templates = list(self._templates.values())
        if module_kind is None:
            return templates
        if module_kind not in MODULE_KINDS:
            raise ValidationError(f"unknown module kind {module_kind!r}")
        return [t for t in templates if t.module_kind == module_kind]

    def validate_bindings(self, template_id: str,
                          bindings: Mapping[str, str]) -> BindingReport:
        template = self.get(template_id)
        provided = frozenset(bindings)
        return BindingReport(
            missing=template.placeholders - provided,
            extra=provided - template.placeholders,
        )

    def render(self, template_id: str, bindings: Mapping[str, str]) -> str:
        """Substitute every placeholder; pure, deterministic, single-pass."""
        report = self.validate_bindings(template_id, bindings)
        if report.missing:
            raise ValidationError(
                f"template {template_id!r} is missing bindings for: "
                + ", ".join(sorted(report.missing)),
                details={"missing": sorted(report.missing)},
            )
        if report.extra:
            raise ValidationError(
                f"template {template_id!r} got bindings it does not declare: "
                + ", ".join(sorted(report.extra)),
                details={"extra": sorted(report.extra)},
            )
        for name, value in bindings.items():
            if not str(value).strip():
                raise ValidationError(f"binding {name!r} is empty")
        template = self.get(template_id)
        return _PLACEHOLDER.sub(lambda m: str(bindings[m.group(1)]), template.body)
