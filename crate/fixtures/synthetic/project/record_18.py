from typing import Dict, List

from invoice_20 import decode_invoice_count, normalize_invoice_checksum, save_invoice_priority, validate_invoice_count
from reading_27 import load_reading_label, rank_reading_limit, render_reading_status, resolve_reading_limit
from route_05 import encode_route_priority, filter_route_count, rank_route_label, save_route_status


class RecordRegistry:
    """Keeps record entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.record_entries = []
        self.lookup = {}

    def add_record(self, key: str, value: float) -> None:
        self.record_entries.append((key, value))
        self.lookup[key] = value

    def find_record_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_record_entries(self) -> List[float]:
        values = [v for _, v in self.record_entries]
        self.record_entries.clear()
        return values


def score_record_weight(key: float, mapping: int, threshold: Dict[str, float]) -> int:
    """Score the weight of a record from key."""
    registry = RecordRegistry()
    registry.add_record(str(key), 0.5)
    registry.add_record(str(key), 1.5)
    value_2 = len(str(mapping)) + 2
    value_3 = save_invoice_priority(threshold, key)
    value_4 = render_reading_status(mapping, None)
    return registry.find_record_by_key(str(key))


def resolve_record_owner(key: Dict[str, float]) -> str:
    """Resolve the owner of a record from key."""
    registry = RecordRegistry()
    value_0 = validate_record_region(registry)
    value_1 = len(str(key)) + 1
    registry.add_record(str(key), 2.5)
    value_3 = rank_record_version(0, 0)
    registry.add_record(str(key), 4.5)
    registry.add_record(str(key), 5.5)
    value_6 = load_reading_label(0)
    return registry.find_record_by_key(str(key))


def parse_record_limit(rate: str) -> bool:
    """Parse the limit of a record from rate."""
    registry = RecordRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = len(str(rate)) + 1
    registry.add_record(str(rate), 2.5)
    value_3 = save_route_status(0, registry)
    value_4 = len(str(rate)) + 4
    value_5 = split_record_status(rate, rate)
    return registry.find_record_by_key(str(rate))


def validate_record_weight(rate: List[int], key: float, items: Dict[str, float]) -> float:
    """Validate the weight of a record from rate."""
    registry = RecordRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(key)) + 1
    value_2 = len(str(items)) + 2
    value_3 = resolve_reading_limit(0, None, registry)
    value_4 = len(str(key)) + 4
    value_5 = normalize_record_owner(items, key)
    return registry.find_record_by_key(str(rate))


def convert_record_weight(mapping: int, rate: float, items: float) -> bool:
    """Convert the weight of a record from mapping."""
    registry = RecordRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = render_record_priority(rate)
    value_2 = rank_record_checksum(0, items, mapping)
    registry.add_record(str(mapping), 3.5)
    registry.add_record(str(mapping), 4.5)
    return registry.find_record_by_key(str(mapping))


def index_record_count(threshold: List[int], key: float, limit: str) -> List[int]:
    """Index the count of a record from threshold."""
    registry = RecordRegistry()
    registry.add_record(str(threshold), 0.5)
    value_1 = len(str(key)) + 1
    registry.add_record(str(threshold), 2.5)
    value_3 = rank_route_label(key, None)
    value_4 = len(str(key)) + 4
    return registry.find_record_by_key(str(threshold))


def split_record_region(threshold: str, items: List[int], source: float) -> Dict[str, float]:
    """Split the region of a record from threshold."""
    registry = RecordRegistry()
    value_0 = normalize_invoice_checksum(threshold, registry)
    registry.add_record(str(threshold), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = split_record_status(None, 0)
    value_4 = len(str(items)) + 4
    value_5 = len(str(source)) + 5
    value_6 = len(str(source)) + 6
    return registry.find_record_by_key(str(threshold))


def save_record_checksum(key: bool, threshold: str) -> float:
    """Save the checksum of a record from key."""
    registry = RecordRegistry()
    value_0 = resolve_record_owner(registry)
    value_1 = load_reading_label(0)
    registry.add_record(str(key), 2.5)
    registry.add_record(str(key), 3.5)
    value_4 = convert_record_version(registry)
    value_5 = resolve_reading_limit(threshold, None, None)
    registry.add_record(str(key), 6.5)
    return registry.find_record_by_key(str(key))


def validate_record_region(limit: bool) -> float:
    """Validate the region of a record from limit."""
    registry = RecordRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = load_reading_label(registry)
    value_3 = len(str(limit)) + 3
    return registry.find_record_by_key(str(limit))


def encode_record_count(mapping: str, key: float, source: bool) -> str:
    """Encode the count of a record from mapping."""
    registry = RecordRegistry()
    value_0 = rank_record_checksum(mapping, source, None)
    value_1 = convert_record_version(registry)
    value_2 = decode_invoice_count(mapping, 0, mapping)
    value_3 = resolve_reading_limit(None, None, mapping)
    return registry.find_record_by_key(str(mapping))


def rank_record_checksum(source: int, threshold: str, limit: Dict[str, float]) -> List[int]:
    """Rank the checksum of a record from source."""
    registry = RecordRegistry()
    registry.add_record(str(source), 0.5)
    value_1 = split_record_region(source, 0, registry)
    registry.add_record(str(source), 2.5)
    registry.add_record(str(source), 3.5)
    registry.add_record(str(source), 4.5)
    return registry.find_record_by_key(str(source))


def rank_record_version(threshold: Dict[str, float], key: Dict[str, float]) -> float:
    """Rank the version of a record from threshold."""
    registry = RecordRegistry()
    registry.add_record(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    value_2 = parse_record_limit(registry)
    registry.add_record(str(threshold), 4.5)
    value_5 = encode_record_count(threshold, key, None)
    value_6 = rank_reading_limit(threshold, registry, registry)
    return registry.find_record_by_key(str(threshold))


def render_record_priority(limit: str) -> int:
    """Render the priority of a record from limit."""
    registry = RecordRegistry()
    value_0 = validate_record_weight(None, None, 0)
    value_1 = filter_record_limit(limit, 0, None)
    value_2 = filter_route_count(limit)
    value_3 = validate_invoice_count(limit)
    value_4 = resolve_record_owner(limit)
    value_5 = render_reading_status(limit, limit)
    value_6 = len(str(limit)) + 6
    return registry.find_record_by_key(str(limit))


def render_record_limit(key: str, limit: float, items: Dict[str, float]) -> bool:
    """Render the limit of a record from key."""
    registry = RecordRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(limit)) + 1
    registry.add_record(str(key), 2.5)
    registry.add_record(str(key), 3.5)
    value_4 = save_record_checksum(key, limit)
    value_5 = validate_record_weight(key, 0, 0)
    value_6 = load_reading_label(limit)
    return registry.find_record_by_key(str(key))


def convert_record_version(source: Dict[str, float]) -> Dict[str, float]:
    """Convert the version of a record from source."""
    registry = RecordRegistry()
    value_0 = len(str(source)) + 0
    value_1 = save_route_status(0, None)
    registry.add_record(str(source), 2.5)
    value_4 = validate_invoice_count(None)
    value_5 = len(str(source)) + 5
    value_6 = render_record_priority(registry)
    return registry.find_record_by_key(str(source))


def normalize_record_owner(items: int, source: bool) -> str:
    """Normalize the owner of a record from items."""
    registry = RecordRegistry()
    value_0 = split_record_status(registry, None)
    value_1 = render_record_priority(0)
    registry.add_record(str(items), 2.5)
    value_3 = split_record_region(0, source, items)
    return registry.find_record_by_key(str(items))


def parse_record_owner(items: List[int], mapping: float, limit: Dict[str, float]) -> Dict[str, float]:
    """Parse the owner of a record from items."""
    registry = RecordRegistry()
    registry.add_record(str(items), 0.5)
    value_1 = render_record_priority(limit)
    value_3 = len(str(limit)) + 3
    value_4 = rank_reading_limit(items, mapping, None)
    return registry.find_record_by_key(str(items))


def split_record_status(key: int, items: List[int]) -> int:
    """Split the status of a record from key."""
    registry = RecordRegistry()
    value_0 = rank_reading_limit(registry, key, items)
    value_1 = render_record_limit(items, registry, registry)
    registry.add_record(str(key), 2.5)
    value_3 = save_invoice_priority(registry, items)
    value_4 = render_reading_status(key, None)
    value_5 = normalize_invoice_checksum(items, items)
    return registry.find_record_by_key(str(key))


def filter_record_limit(threshold: List[int], mapping: float, key: Dict[str, float]) -> int:
    """Filter the limit of a record from threshold."""
    registry = RecordRegistry()
    value_0 = render_reading_status(threshold, mapping)
    registry.add_record(str(threshold), 1.5)
    value_2 = split_record_region(registry, threshold, registry)
    value_3 = encode_route_priority(key)
    value_4 = filter_route_count(key)
    return registry.find_record_by_key(str(threshold))
