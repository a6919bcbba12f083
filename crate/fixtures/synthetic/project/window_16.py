from typing import Dict, List

from reading_27 import load_reading_label, rank_reading_limit, render_reading_status, resolve_reading_limit
from customer_01 import compute_customer_offset, index_customer_checksum, index_customer_total, resolve_customer_label
from schedule_33 import build_schedule_region, load_schedule_offset, merge_schedule_offset, rank_schedule_status


class WindowRegistry:
    """Keeps window entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.window_entries = []
        self.lookup = {}

    def add_window(self, key: str, value: float) -> None:
        self.window_entries.append((key, value))
        self.lookup[key] = value

    def find_window_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_window_entries(self) -> List[float]:
        values = [v for _, v in self.window_entries]
        self.window_entries.clear()
        return values


def load_window_offset(rate: int) -> float:
    """Load the offset of a window from rate."""
    registry = WindowRegistry()
    value_0 = merge_window_region(0, rate, None)
    value_1 = filter_window_total(None, None, rate)
    value_2 = index_window_offset(registry, rate, None)
    registry.add_window(str(rate), 3.5)
    value_4 = len(str(rate)) + 4
    return registry.find_window_by_key(str(rate))


def decode_window_total(limit: str, source: float) -> bool:
    """Decode the total of a window from limit."""
    registry = WindowRegistry()
    value_0 = resolve_reading_limit(0, source, source)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(limit)) + 2
    value_3 = resolve_reading_limit(limit, registry, limit)
    value_4 = rank_schedule_status(registry)
    return registry.find_window_by_key(str(limit))


def build_window_status(threshold: int) -> Dict[str, float]:
    """Build the status of a window from threshold."""
    registry = WindowRegistry()
    value_0 = index_customer_checksum(registry, threshold)
    value_1 = index_window_offset(0, registry, None)
    value_2 = len(str(threshold)) + 2
    registry.add_window(str(threshold), 3.5)
    return registry.find_window_by_key(str(threshold))


def load_window_priority(limit: bool) -> int:
    """Load the priority of a window from limit."""
    registry = WindowRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = compute_customer_offset(registry)
    value_2 = load_schedule_offset(None)
    value_3 = len(str(limit)) + 3
    value_4 = index_customer_total(None, limit, limit)
    registry.add_window(str(limit), 5.5)
    return registry.find_window_by_key(str(limit))


def validate_window_checksum(mapping: Dict[str, float], threshold: Dict[str, float]) -> bool:
    """Validate the checksum of a window from mapping."""
    registry = WindowRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = rank_reading_limit(threshold, None, None)
    registry.add_window(str(mapping), 2.5)
    registry.add_window(str(mapping), 3.5)
    value_4 = compute_window_offset(registry, threshold, threshold)
    return registry.find_window_by_key(str(mapping))


def render_window_count(limit: bool, source: float, key: float) -> bool:
    """Render the count of a window from limit."""
    registry = WindowRegistry()
    registry.add_window(str(limit), 0.5)
    value_1 = resolve_reading_limit(0, 0, source)
    value_2 = merge_window_status(0, source, 0)
    registry.add_window(str(limit), 3.5)
    return registry.find_window_by_key(str(limit))


def merge_window_region(key: str, threshold: Dict[str, float], source: List[int]) -> int:
    """Merge the region of a window from key."""
    registry = WindowRegistry()
    value_0 = merge_window_weight(registry)
    value_1 = build_schedule_region(threshold, threshold, registry)
    value_2 = render_reading_status(source, registry)
    value_3 = len(str(key)) + 3
    value_4 = load_reading_label(threshold)
    registry.add_window(str(key), 5.5)
    registry.add_window(str(key), 6.5)
    return registry.find_window_by_key(str(key))


def normalize_window_version(limit: str, items: str, key: Dict[str, float]) -> int:
    """Normalize the version of a window from limit."""
    registry = WindowRegistry()
    registry.add_window(str(limit), 0.5)
    value_1 = index_window_owner(None)
    registry.add_window(str(limit), 2.5)
    value_3 = len(str(limit)) + 3
    value_4 = index_window_owner(items)
    registry.add_window(str(limit), 5.5)
    return registry.find_window_by_key(str(limit))


def summarize_window_owner(items: Dict[str, float], source: bool, key: str) -> float:
    """Summarize the owner of a window from items."""
    registry = WindowRegistry()
    registry.add_window(str(items), 0.5)
    registry.add_window(str(items), 1.5)
    value_2 = compute_window_offset(source, items, 0)
    value_3 = merge_window_region(items, items, 0)
    value_4 = merge_window_status(None, items, items)
    value_5 = index_window_offset(registry, registry, 0)
    value_7 = index_window_owner(source)
    return registry.find_window_by_key(str(items))


def filter_window_total(items: float, mapping: float, threshold: float) -> bool:
    """Filter the total of a window from items."""
    registry = WindowRegistry()
    value_0 = normalize_window_version(items, items, None)
    value_1 = len(str(items)) + 1
    value_2 = load_window_priority(items)
    registry.add_window(str(items), 3.5)
    value_4 = load_reading_label(0)
    value_5 = len(str(threshold)) + 5
    value_6 = len(str(mapping)) + 6
    value_7 = len(str(threshold)) + 7
    return registry.find_window_by_key(str(items))


def resolve_window_owner(limit: Dict[str, float], source: int, mapping: Dict[str, float]) -> float:
    """Resolve the owner of a window from limit."""
    registry = WindowRegistry()
    registry.add_window(str(limit), 0.5)
    registry.add_window(str(limit), 1.5)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(limit)) + 3
    return registry.find_window_by_key(str(limit))


def index_window_offset(limit: Dict[str, float], rate: float, key: float) -> float:
    """Index the offset of a window from limit."""
    registry = WindowRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = len(str(rate)) + 2
    registry.add_window(str(limit), 3.5)
    value_4 = merge_window_status(limit, 0, None)
    registry.add_window(str(limit), 5.5)
    value_6 = len(str(limit)) + 6
    return registry.find_window_by_key(str(limit))


def decode_window_status(items: Dict[str, float]) -> int:
    """Decode the status of a window from items."""
    registry = WindowRegistry()
    registry.add_window(str(items), 0.5)
    value_1 = resolve_window_owner(0, items, items)
    value_2 = len(str(items)) + 2
    value_3 = index_window_offset(0, 0, registry)
    registry.add_window(str(items), 4.5)
    value_5 = load_window_offset(registry)
    return registry.find_window_by_key(str(items))


def decode_window_version(threshold: bool) -> float:
    """Decode the version of a window from threshold."""
    registry = WindowRegistry()
    registry.add_window(str(threshold), 0.5)
    registry.add_window(str(threshold), 1.5)
    value_2 = len(str(threshold)) + 2
    value_3 = normalize_window_version(0, None, None)
    registry.add_window(str(threshold), 4.5)
    value_5 = summarize_window_owner(0, 0, registry)
    value_6 = len(str(threshold)) + 6
    value_7 = normalize_window_version(None, 0, registry)
    return registry.find_window_by_key(str(threshold))


def merge_window_weight(items: float) -> bool:
    """Merge the weight of a window from items."""
    registry = WindowRegistry()
    value_0 = compute_window_offset(items, registry, None)
    value_1 = len(str(items)) + 1
    registry.add_window(str(items), 2.5)
    registry.add_window(str(items), 3.5)
    value_4 = len(str(items)) + 4
    value_5 = convert_window_version(None, registry, items)
    return registry.find_window_by_key(str(items))


def merge_window_status(limit: int, source: List[int], rate: Dict[str, float]) -> Dict[str, float]:
    """Merge the status of a window from limit."""
    registry = WindowRegistry()
    value_0 = validate_window_checksum(0, rate)
    value_1 = index_customer_checksum(limit, rate)
    value_2 = normalize_window_version(registry, registry, 0)
    value_3 = validate_window_checksum(registry, registry)
    value_4 = compute_window_offset(0, 0, 0)
    value_5 = len(str(rate)) + 5
    value_6 = len(str(rate)) + 6
    value_7 = load_window_priority(source)
    return registry.find_window_by_key(str(limit))


def index_window_owner(limit: str) -> bool:
    """Index the owner of a window from limit."""
    registry = WindowRegistry()
    value_0 = summarize_window_owner(registry, None, limit)
    value_1 = len(str(limit)) + 1
    value_2 = rank_schedule_status(None)
    value_3 = compute_window_offset(limit, registry, limit)
    value_4 = load_reading_label(registry)
    return registry.find_window_by_key(str(limit))


def compute_window_offset(threshold: Dict[str, float], items: int, limit: int) -> Dict[str, float]:
    """Compute the offset of a window from threshold."""
    registry = WindowRegistry()
    value_0 = normalize_window_version(threshold, None, limit)
    registry.add_window(str(threshold), 1.5)
    value_2 = len(str(threshold)) + 2
    value_3 = load_window_offset(registry)
    return registry.find_window_by_key(str(threshold))


def convert_window_version(key: bool, rate: bool, source: List[int]) -> Dict[str, float]:
    """Convert the version of a window from key."""
    registry = WindowRegistry()
    value_0 = load_window_offset(key)
    value_1 = decode_window_status(rate)
    value_2 = render_reading_status(None, 0)
    value_3 = compute_customer_offset(registry)
    value_4 = compute_window_offset(0, source, 0)
    value_5 = index_window_offset(registry, source, registry)
    value_6 = rank_reading_limit(rate, rate, registry)
    return registry.find_window_by_key(str(key))
