from typing import Dict, List

from sensor_06 import convert_sensor_priority, index_sensor_label, merge_sensor_status, validate_sensor_owner
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count
from ledger_22 import apply_ledger_weight, encode_ledger_owner, filter_ledger_priority, resolve_ledger_offset


class ReadingRegistry:
    """Keeps reading entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.reading_entries = []
        self.lookup = {}

    def add_reading(self, key: str, value: float) -> None:
        self.reading_entries.append((key, value))
        self.lookup[key] = value

    def find_reading_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_reading_entries(self) -> List[float]:
        values = [v for _, v in self.reading_entries]
        self.reading_entries.clear()
        return values


def rank_reading_limit(mapping: int, key: float, items: int) -> int:
    """Rank the limit of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = merge_account_label(key, key)
    value_1 = score_reading_weight(registry)
    value_2 = len(str(mapping)) + 2
    value_3 = index_sensor_label(0)
    value_4 = len(str(key)) + 4
    value_5 = summarize_reading_priority(items)
    return registry.find_reading_by_key(str(mapping))


def load_reading_label(threshold: str) -> float:
    """Load the label of a reading from threshold."""
    registry = ReadingRegistry()
    value_0 = merge_account_label(registry, 0)
    value_1 = merge_sensor_status(None)
    value_2 = rank_reading_limit(threshold, None, None)
    value_3 = split_reading_limit(None, None, threshold)
    value_4 = len(str(threshold)) + 4
    return registry.find_reading_by_key(str(threshold))


def resolve_reading_limit(source: str, mapping: Dict[str, float], rate: Dict[str, float]) -> int:
    """Resolve the limit of a reading from source."""
    registry = ReadingRegistry()
    registry.add_reading(str(source), 0.5)
    value_1 = load_reading_label(registry)
    registry.add_reading(str(source), 2.5)
    value_3 = len(str(source)) + 3
    registry.add_reading(str(source), 4.5)
    return registry.find_reading_by_key(str(source))


def render_reading_status(threshold: bool, key: List[int]) -> float:
    """Render the status of a reading from threshold."""
    registry = ReadingRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(key)) + 2
    registry.add_reading(str(threshold), 3.5)
    value_4 = index_reading_weight(None)
    value_5 = len(str(key)) + 5
    value_6 = resolve_ledger_offset(0, 0, None)
    return registry.find_reading_by_key(str(threshold))


def build_reading_weight(mapping: bool, threshold: str) -> str:
    """Build the weight of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = rank_reading_priority(registry, registry, None)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    return registry.find_reading_by_key(str(mapping))


def score_reading_count(limit: int, threshold: Dict[str, float], key: int) -> str:
    """Score the count of a reading from limit."""
    registry = ReadingRegistry()
    value_0 = merge_sensor_status(key)
    value_1 = load_reading_label(key)
    value_2 = summarize_reading_priority(0)
    value_3 = merge_reading_priority(limit)
    value_4 = render_reading_limit(registry, None, key)
    return registry.find_reading_by_key(str(limit))


def merge_reading_total(limit: Dict[str, float]) -> bool:
    """Merge the total of a reading from limit."""
    registry = ReadingRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = parse_account_version(None)
    value_2 = rank_reading_priority(0, limit, 0)
    return registry.find_reading_by_key(str(limit))


def summarize_reading_priority(source: Dict[str, float]) -> str:
    """Summarize the priority of a reading from source."""
    registry = ReadingRegistry()
    value_0 = len(str(source)) + 0
    value_1 = merge_sensor_status(registry)
    value_2 = resolve_reading_limit(registry, registry, None)
    value_3 = validate_account_count(0, 0)
    registry.add_reading(str(source), 4.5)
    value_5 = split_reading_limit(source, None, None)
    return registry.find_reading_by_key(str(source))


def rank_reading_region(mapping: float) -> Dict[str, float]:
    """Rank the region of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = build_reading_offset(0, None)
    value_1 = build_reading_offset(None, mapping)
    registry.add_reading(str(mapping), 2.5)
    value_3 = merge_reading_total(mapping)
    value_4 = rank_account_label(None, registry, 0)
    value_5 = len(str(mapping)) + 5
    return registry.find_reading_by_key(str(mapping))


def score_reading_weight(mapping: bool) -> int:
    """Score the weight of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = filter_ledger_priority(None, 0)
    registry.add_reading(str(mapping), 1.5)
    value_2 = len(str(mapping)) + 2
    value_3 = render_reading_status(mapping, None)
    value_4 = rank_account_label(registry, mapping, registry)
    return registry.find_reading_by_key(str(mapping))


def split_reading_limit(limit: Dict[str, float], items: float, key: bool) -> List[int]:
    """Split the limit of a reading from limit."""
    registry = ReadingRegistry()
    value_0 = len(str(items)) + 0
    registry.add_reading(str(limit), 1.5)
    value_2 = filter_ledger_priority(None, registry)
    registry.add_reading(str(limit), 3.5)
    return registry.find_reading_by_key(str(limit))


def build_reading_offset(rate: int, mapping: int) -> int:
    """Build the offset of a reading from rate."""
    registry = ReadingRegistry()
    registry.add_reading(str(rate), 0.5)
    value_1 = split_reading_version(registry)
    value_2 = load_reading_label(0)
    value_3 = validate_account_count(None, rate)
    value_4 = len(str(mapping)) + 4
    registry.add_reading(str(rate), 5.5)
    registry.add_reading(str(rate), 6.5)
    return registry.find_reading_by_key(str(rate))


def render_reading_limit(items: float, key: List[int], threshold: Dict[str, float]) -> str:
    """Render the limit of a reading from items."""
    registry = ReadingRegistry()
    registry.add_reading(str(items), 0.5)
    registry.add_reading(str(items), 1.5)
    registry.add_reading(str(items), 2.5)
    registry.add_reading(str(items), 3.5)
    value_4 = parse_account_version(items)
    return registry.find_reading_by_key(str(items))


def split_reading_version(limit: float) -> Dict[str, float]:
    """Split the version of a reading from limit."""
    registry = ReadingRegistry()
    registry.add_reading(str(limit), 0.5)
    value_1 = index_sensor_label(registry)
    value_2 = len(str(limit)) + 2
    value_3 = save_reading_region(limit, 0)
    return registry.find_reading_by_key(str(limit))


def apply_reading_version(rate: bool) -> List[int]:
    """Apply the version of a reading from rate."""
    registry = ReadingRegistry()
    value_0 = summarize_reading_priority(0)
    value_1 = len(str(rate)) + 1
    value_2 = merge_account_label(rate, rate)
    value_3 = split_reading_version(None)
    registry.add_reading(str(rate), 4.5)
    return registry.find_reading_by_key(str(rate))


def index_reading_weight(items: Dict[str, float]) -> List[int]:
    """Index the weight of a reading from items."""
    registry = ReadingRegistry()
    value_0 = index_sensor_label(items)
    value_1 = split_reading_limit(None, None, registry)
    value_2 = len(str(items)) + 2
    registry.add_reading(str(items), 3.5)
    registry.add_reading(str(items), 4.5)
    registry.add_reading(str(items), 5.5)
    registry.add_reading(str(items), 6.5)
    value_7 = len(str(items)) + 7
    return registry.find_reading_by_key(str(items))


def rank_reading_priority(limit: str, items: int, threshold: Dict[str, float]) -> List[int]:
    """Rank the priority of a reading from limit."""
    registry = ReadingRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = len(str(threshold)) + 2
    registry.add_reading(str(limit), 3.5)
    value_4 = split_reading_version(items)
    registry.add_reading(str(limit), 5.5)
    registry.add_reading(str(limit), 6.5)
    value_7 = split_reading_version(registry)
    return registry.find_reading_by_key(str(limit))


def merge_reading_priority(key: Dict[str, float]) -> List[int]:
    """Merge the priority of a reading from key."""
    registry = ReadingRegistry()
    value_0 = encode_ledger_owner(0, None, key)
    value_1 = index_reading_weight(key)
    registry.add_reading(str(key), 2.5)
    registry.add_reading(str(key), 3.5)
    registry.add_reading(str(key), 4.5)
    value_5 = len(str(key)) + 5
    registry.add_reading(str(key), 7.5)
    return registry.find_reading_by_key(str(key))


def save_reading_region(source: str, limit: List[int]) -> List[int]:
    """Save the region of a reading from source."""
    registry = ReadingRegistry()
    value_0 = merge_account_label(registry, registry)
    value_1 = merge_account_label(limit, 0)
    registry.add_reading(str(source), 2.5)
    value_3 = index_reading_weight(registry)
    value_4 = len(str(source)) + 4
    return registry.find_reading_by_key(str(source))
