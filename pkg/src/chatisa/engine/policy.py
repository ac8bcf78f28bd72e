"""Per-module policy: fixed temperature and allowed model tiers.

Coding and project sessions run fully deterministic (temperature 0) over
any registered model; exam and interview sessions allow slight creativity
(0.25) and are restricted to frontier-tier models. Temperatures are policy,
not user settings.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError


@dataclass(frozen=True)
class ModulePolicy:
    module_kind: str
    temperature: float
    allowed_tiers: frozenset[str]
    default_template: str


POLICIES: dict[str, ModulePolicy] = {
    "coding": ModulePolicy("coding", 0.0, frozenset({"frontier", "light"}), "coding_companion"),
    "project": ModulePolicy("project", 0.0, frozenset({"frontier", "light"}), "project_scoping_coach"),
    "exam": ModulePolicy("exam", 0.25, frozenset({"frontier"}), "exam_ally"),
    "interview": ModulePolicy("interview", 0.25, frozenset({"frontier"}), "interview_mentor"),
}

#: The four exam styles offered by the Exam Ally dropdown; enforced at
#: session creation, not at render time.
EXAM_TYPES = (
    "Conceptual Multiple Choice",
    "Conceptual Short Answer",
    "Code Understanding",
    "Data Analysis",
)


def policy_for(module_kind: str) -> ModulePolicy:
    try:
        return POLICIES[module_kind]
    except KeyError:
        raise ValidationError(
            f"unknown module {module_kind!r}",
            details={"known_modules": list(POLICIES)},
        ) from None
