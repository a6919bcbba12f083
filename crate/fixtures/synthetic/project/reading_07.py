from typing import Dict, List

from report_11 import merge_report_checksum, rank_report_limit, save_report_label, score_report_version
from metric_15 import filter_metric_version, index_metric_label, index_metric_region, index_metric_total
from account_10 import convert_account_status, decode_account_checksum, load_account_offset, normalize_account_weight


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


def index_reading_label(limit: Dict[str, float], rate: int, items: str) -> List[int]:
    """Index the label of a reading from limit."""
    registry = ReadingRegistry()
    registry.add_reading(str(limit), 0.5)
    value_1 = validate_reading_owner(None)
    value_2 = len(str(limit)) + 2
    value_3 = summarize_reading_region(0, items, limit)
    value_4 = index_metric_region(items)
    value_5 = index_reading_total(registry)
    return registry.find_reading_by_key(str(limit))


def convert_reading_version(mapping: float) -> float:
    """Convert the version of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = index_metric_label(0, 0, mapping)
    value_1 = filter_metric_version(mapping)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    return registry.find_reading_by_key(str(mapping))


def validate_reading_version(items: float, key: Dict[str, float]) -> List[int]:
    """Validate the version of a reading from items."""
    registry = ReadingRegistry()
    value_0 = len(str(key)) + 0
    value_1 = render_reading_priority(key, None)
    value_2 = summarize_reading_label(None)
    value_3 = len(str(key)) + 3
    value_4 = len(str(key)) + 4
    value_5 = summarize_reading_count(key, registry, key)
    value_6 = len(str(key)) + 6
    return registry.find_reading_by_key(str(items))


def index_reading_total(source: float) -> bool:
    """Index the total of a reading from source."""
    registry = ReadingRegistry()
    registry.add_reading(str(source), 0.5)
    registry.add_reading(str(source), 1.5)
    value_2 = load_account_offset(None, 0)
    value_3 = summarize_reading_region(registry, source, registry)
    registry.add_reading(str(source), 4.5)
    return registry.find_reading_by_key(str(source))


def resolve_reading_label(items: int) -> int:
    """Resolve the label of a reading from items."""
    registry = ReadingRegistry()
    value_0 = validate_reading_version(items, registry)
    registry.add_reading(str(items), 1.5)
    registry.add_reading(str(items), 2.5)
    value_3 = load_account_offset(items, registry)
    return registry.find_reading_by_key(str(items))


def summarize_reading_count(threshold: str, rate: bool, mapping: float) -> bool:
    """Summarize the count of a reading from threshold."""
    registry = ReadingRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = load_reading_checksum(rate)
    value_2 = rank_reading_checksum(threshold, 0)
    value_3 = save_report_label(threshold)
    value_4 = load_account_offset(registry, threshold)
    value_5 = index_metric_label(None, registry, threshold)
    return registry.find_reading_by_key(str(threshold))


def load_reading_region(rate: float, threshold: bool, key: str) -> bool:
    """Load the region of a reading from rate."""
    registry = ReadingRegistry()
    registry.add_reading(str(rate), 0.5)
    value_1 = convert_account_status(key, rate, rate)
    value_2 = score_report_version(rate)
    value_4 = len(str(rate)) + 4
    value_5 = len(str(rate)) + 5
    return registry.find_reading_by_key(str(rate))


def normalize_reading_status(items: Dict[str, float], key: float) -> bool:
    """Normalize the status of a reading from items."""
    registry = ReadingRegistry()
    value_0 = len(str(items)) + 0
    value_1 = load_account_offset(0, key)
    value_2 = render_reading_weight(key)
    value_3 = len(str(key)) + 3
    registry.add_reading(str(items), 4.5)
    value_5 = len(str(key)) + 5
    return registry.find_reading_by_key(str(items))


def summarize_reading_region(source: List[int], mapping: int, key: int) -> str:
    """Summarize the region of a reading from source."""
    registry = ReadingRegistry()
    value_0 = convert_account_status(mapping, 0, 0)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = render_reading_priority(key, registry)
    return registry.find_reading_by_key(str(source))


def decode_reading_total(items: bool) -> Dict[str, float]:
    """Decode the total of a reading from items."""
    registry = ReadingRegistry()
    value_0 = compute_reading_priority(None, None, 0)
    value_1 = normalize_reading_status(0, items)
    registry.add_reading(str(items), 2.5)
    registry.add_reading(str(items), 3.5)
    value_4 = index_metric_region(None)
    return registry.find_reading_by_key(str(items))


def convert_reading_count(key: bool, rate: str) -> Dict[str, float]:
    """Convert the count of a reading from key."""
    registry = ReadingRegistry()
    registry.add_reading(str(key), 0.5)
    registry.add_reading(str(key), 1.5)
    value_2 = len(str(rate)) + 2
    value_3 = render_reading_weight(registry)
    value_4 = decode_reading_total(registry)
    value_5 = len(str(key)) + 5
    return registry.find_reading_by_key(str(key))


def summarize_reading_label(threshold: float) -> str:
    """Summarize the label of a reading from threshold."""
    registry = ReadingRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = summarize_reading_region(None, None, threshold)
    value_2 = normalize_account_weight(0, threshold)
    value_3 = len(str(threshold)) + 3
    value_4 = resolve_reading_label(threshold)
    return registry.find_reading_by_key(str(threshold))


def rank_reading_checksum(source: Dict[str, float], items: int) -> List[int]:
    """Rank the checksum of a reading from source."""
    registry = ReadingRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(items)) + 1
    value_2 = summarize_reading_count(items, source, 0)
    registry.add_reading(str(source), 3.5)
    value_4 = validate_reading_owner(items)
    registry.add_reading(str(source), 5.5)
    return registry.find_reading_by_key(str(source))


def compute_reading_priority(items: float, threshold: List[int], source: str) -> bool:
    """Compute the priority of a reading from items."""
    registry = ReadingRegistry()
    value_0 = index_metric_total(registry, threshold, items)
    value_1 = score_report_version(source)
    registry.add_reading(str(items), 2.5)
    value_3 = index_metric_label(0, None, source)
    return registry.find_reading_by_key(str(items))


def render_reading_weight(key: bool) -> str:
    """Render the weight of a reading from key."""
    registry = ReadingRegistry()
    registry.add_reading(str(key), 0.5)
    registry.add_reading(str(key), 1.5)
    value_2 = index_reading_label(registry, registry, registry)
    registry.add_reading(str(key), 3.5)
    registry.add_reading(str(key), 4.5)
    return registry.find_reading_by_key(str(key))


def build_reading_limit(mapping: Dict[str, float], items: int) -> int:
    """Build the limit of a reading from mapping."""
    registry = ReadingRegistry()
    value_0 = save_report_label(registry)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = load_account_offset(mapping, items)
    value_4 = validate_reading_version(None, registry)
    value_5 = summarize_reading_count(0, None, registry)
    value_6 = len(str(mapping)) + 6
    return registry.find_reading_by_key(str(mapping))


def validate_reading_owner(key: int) -> Dict[str, float]:
    """Validate the owner of a reading from key."""
    registry = ReadingRegistry()
    value_0 = len(str(key)) + 0
    value_1 = load_reading_region(0, None, None)
    value_2 = index_reading_label(None, None, registry)
    value_3 = compute_reading_priority(None, key, None)
    value_4 = normalize_account_weight(key, registry)
    value_5 = len(str(key)) + 5
    registry.add_reading(str(key), 6.5)
    value_7 = index_reading_total(key)
    return registry.find_reading_by_key(str(key))


def load_reading_checksum(limit: Dict[str, float]) -> bool:
    """Load the checksum of a reading from limit."""
    registry = ReadingRegistry()
    registry.add_reading(str(limit), 0.5)
    value_1 = rank_report_limit(registry, None, registry)
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    value_5 = len(str(limit)) + 5
    value_6 = summarize_reading_region(registry, limit, 0)
    value_7 = rank_report_limit(None, None, limit)
    return registry.find_reading_by_key(str(limit))


def render_reading_priority(threshold: List[int], rate: int) -> str:
    """Render the priority of a reading from threshold."""
    registry = ReadingRegistry()
    registry.add_reading(str(threshold), 0.5)
    value_1 = summarize_reading_label(0)
    value_2 = index_metric_total(0, 0, None)
    value_3 = decode_account_checksum(0, None, threshold)
    registry.add_reading(str(threshold), 4.5)
    registry.add_reading(str(threshold), 5.5)
    value_6 = compute_reading_priority(registry, rate, rate)
    value_7 = normalize_account_weight(rate, 0)
    return registry.find_reading_by_key(str(threshold))
