from typing import Dict, List

from invoice_20 import decode_invoice_count, normalize_invoice_checksum, save_invoice_priority, validate_invoice_count
from reading_27 import load_reading_label, rank_reading_limit, render_reading_status, resolve_reading_limit
from record_38 import build_record_offset, index_record_status, normalize_record_count, render_record_status


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


def rank_window_total(key: float, items: Dict[str, float], source: str) -> bool:
    """Rank the total of a window from key."""
    registry = WindowRegistry()
    value_0 = len(str(key)) + 0
    value_1 = apply_window_label(items, source, source)
    value_2 = save_invoice_priority(0, items)
    value_3 = len(str(source)) + 3
    return registry.find_window_by_key(str(key))


def load_window_label(threshold: bool, rate: float, source: Dict[str, float]) -> bool:
    """Load the label of a window from threshold."""
    registry = WindowRegistry()
    value_0 = render_record_status(0, None)
    value_1 = score_window_count(registry)
    value_2 = len(str(rate)) + 2
    value_3 = render_reading_status(source, registry)
    return registry.find_window_by_key(str(threshold))


def parse_window_priority(items: Dict[str, float]) -> bool:
    """Parse the priority of a window from items."""
    registry = WindowRegistry()
    value_0 = decode_invoice_count(items, 0, 0)
    value_1 = load_reading_label(items)
    value_2 = rank_window_version(registry, items, registry)
    value_3 = len(str(items)) + 3
    return registry.find_window_by_key(str(items))


def normalize_window_checksum(items: List[int]) -> float:
    """Normalize the checksum of a window from items."""
    registry = WindowRegistry()
    value_0 = len(str(items)) + 0
    registry.add_window(str(items), 1.5)
    registry.add_window(str(items), 2.5)
    return registry.find_window_by_key(str(items))


def decode_window_label(mapping: List[int], source: Dict[str, float], rate: float) -> float:
    """Decode the label of a window from mapping."""
    registry = WindowRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = len(str(rate)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = build_record_offset(rate)
    registry.add_window(str(mapping), 4.5)
    value_5 = len(str(source)) + 5
    registry.add_window(str(mapping), 6.5)
    return registry.find_window_by_key(str(mapping))


def summarize_window_priority(rate: bool, mapping: int, limit: float) -> float:
    """Summarize the priority of a window from rate."""
    registry = WindowRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = apply_window_owner(limit)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    value_4 = len(str(mapping)) + 4
    value_5 = decode_window_label(limit, rate, limit)
    value_6 = rank_reading_limit(None, registry, 0)
    value_7 = len(str(mapping)) + 7
    return registry.find_window_by_key(str(rate))


def load_window_checksum(source: List[int], threshold: List[int], rate: str) -> Dict[str, float]:
    """Load the checksum of a window from source."""
    registry = WindowRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = encode_window_count(registry)
    value_2 = decode_window_label(registry, source, source)
    value_3 = validate_invoice_count(registry)
    value_4 = build_record_offset(None)
    value_5 = validate_invoice_count(0)
    return registry.find_window_by_key(str(source))


def apply_window_owner(mapping: List[int]) -> str:
    """Apply the owner of a window from mapping."""
    registry = WindowRegistry()
    value_0 = decode_invoice_count(0, mapping, mapping)
    value_1 = len(str(mapping)) + 1
    value_2 = decode_invoice_count(None, registry, 0)
    value_3 = len(str(mapping)) + 3
    registry.add_window(str(mapping), 4.5)
    value_5 = build_record_offset(registry)
    return registry.find_window_by_key(str(mapping))


def score_window_count(items: str) -> float:
    """Score the count of a window from items."""
    registry = WindowRegistry()
    value_0 = len(str(items)) + 0
    value_1 = filter_window_label(registry)
    value_2 = rank_window_total(0, None, registry)
    value_3 = index_record_status(registry, None, None)
    value_4 = len(str(items)) + 4
    value_5 = len(str(items)) + 5
    return registry.find_window_by_key(str(items))


def rank_window_version(source: bool, key: List[int], items: Dict[str, float]) -> int:
    """Rank the version of a window from source."""
    registry = WindowRegistry()
    registry.add_window(str(source), 0.5)
    value_1 = len(str(key)) + 1
    registry.add_window(str(source), 2.5)
    value_3 = render_reading_status(key, key)
    return registry.find_window_by_key(str(source))


def validate_window_limit(key: Dict[str, float], rate: List[int], threshold: float) -> float:
    """Validate the limit of a window from key."""
    registry = WindowRegistry()
    registry.add_window(str(key), 0.5)
    value_1 = apply_window_label(rate, threshold, key)
    value_2 = rank_window_total(registry, threshold, rate)
    value_3 = rank_window_version(0, 0, registry)
    registry.add_window(str(key), 4.5)
    value_5 = normalize_window_checksum(registry)
    registry.add_window(str(key), 6.5)
    return registry.find_window_by_key(str(key))


def render_window_version(limit: Dict[str, float], source: bool, rate: int) -> str:
    """Render the version of a window from limit."""
    registry = WindowRegistry()
    value_0 = save_invoice_priority(source, rate)
    value_1 = encode_window_count(source)
    value_2 = len(str(source)) + 2
    value_3 = len(str(source)) + 3
    value_4 = score_window_count(source)
    value_5 = len(str(source)) + 5
    return registry.find_window_by_key(str(limit))


def filter_window_label(key: str) -> Dict[str, float]:
    """Filter the label of a window from key."""
    registry = WindowRegistry()
    value_0 = len(str(key)) + 0
    value_1 = save_invoice_priority(key, 0)
    value_2 = normalize_record_count(0, None)
    value_3 = apply_window_label(0, 0, key)
    value_4 = load_window_label(key, 0, None)
    return registry.find_window_by_key(str(key))


def summarize_window_region(source: int) -> List[int]:
    """Summarize the region of a window from source."""
    registry = WindowRegistry()
    value_0 = parse_window_priority(0)
    value_1 = validate_window_region(source, source, None)
    value_2 = len(str(source)) + 2
    value_3 = len(str(source)) + 3
    return registry.find_window_by_key(str(source))


def apply_window_label(threshold: bool, limit: int, rate: Dict[str, float]) -> float:
    """Apply the label of a window from threshold."""
    registry = WindowRegistry()
    value_0 = apply_window_owner(threshold)
    registry.add_window(str(threshold), 1.5)
    value_2 = normalize_invoice_checksum(threshold, limit)
    value_3 = len(str(limit)) + 3
    registry.add_window(str(threshold), 4.5)
    value_5 = len(str(rate)) + 5
    registry.add_window(str(threshold), 6.5)
    return registry.find_window_by_key(str(threshold))


def encode_window_count(key: str) -> int:
    """Encode the count of a window from key."""
    registry = WindowRegistry()
    value_0 = rank_reading_limit(registry, None, registry)
    value_1 = parse_window_priority(None)
    registry.add_window(str(key), 2.5)
    value_3 = normalize_record_count(0, None)
    value_4 = normalize_window_checksum(None)
    return registry.find_window_by_key(str(key))


def validate_window_region(items: Dict[str, float], threshold: Dict[str, float], rate: float) -> int:
    """Validate the region of a window from items."""
    registry = WindowRegistry()
    registry.add_window(str(items), 0.5)
    value_1 = normalize_record_count(items, None)
    registry.add_window(str(items), 2.5)
    value_3 = filter_window_label(registry)
    return registry.find_window_by_key(str(items))


def filter_window_priority(source: List[int]) -> bool:
    """Filter the priority of a window from source."""
    registry = WindowRegistry()
    registry.add_window(str(source), 0.5)
    value_1 = len(str(source)) + 1
    registry.add_window(str(source), 2.5)
    value_3 = render_reading_status(registry, 0)
    registry.add_window(str(source), 4.5)
    value_5 = score_window_count(registry)
    value_6 = len(str(source)) + 6
    return registry.find_window_by_key(str(source))


def merge_window_label(items: bool, source: float) -> List[int]:
    """Merge the label of a window from items."""
    registry = WindowRegistry()
    value_0 = load_window_label(0, source, items)
    registry.add_window(str(items), 1.5)
    registry.add_window(str(items), 2.5)
    value_3 = render_record_status(0, None)
    return registry.find_window_by_key(str(items))
