"""Activity label universe shared by every stage of the pipeline."""

from __future__ import annotations

ACTIVITY_NAMES: tuple[str, ...] = ("walking", "limping", "jogging", "upstairs", "downstairs")
NUM_ACTIVITIES = len(ACTIVITY_NAMES)

# Sentinel for samples/windows without a known activity.
UNLABELED = -1
UNLABELED_TOKEN = "?"

_NAME_TO_ID = {name: i for i, name in enumerate(ACTIVITY_NAMES)}


def activity_id(name: str) -> int:
    """Map an activity name (or the unlabeled token) to its integer id."""
    if name == UNLABELED_TOKEN:
        return UNLABELED
    try:
        return _NAME_TO_ID[name]
    except KeyError:
        raise ValueError(f"unknown activity name {name!r}; expected one of {ACTIVITY_NAMES} or {UNLABELED_TOKEN!r}") from None


def activity_name(label: int) -> str:
    """Map an integer id back to its activity name (or the unlabeled token)."""
    if label == UNLABELED:
        return UNLABELED_TOKEN
    if 0 <= label < NUM_ACTIVITIES:
        return ACTIVITY_NAMES[label]
    raise ValueError(f"activity id {label} out of range 0..{NUM_ACTIVITIES - 1}")
