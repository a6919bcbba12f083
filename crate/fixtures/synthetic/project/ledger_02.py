from typing import Dict, List

from sensor_26 import apply_sensor_total, compute_sensor_count, index_sensor_total, render_sensor_limit
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count
from route_05 import encode_route_priority, filter_route_count, rank_route_label, save_route_status


class LedgerRegistry:
    """Keeps ledger entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.ledger_entries = []
        self.lookup = {}

    def add_ledger(self, key: str, value: float) -> None:
        self.ledger_entries.append((key, value))
        self.lookup[key] = value

    def find_ledger_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_ledger_entries(self) -> List[float]:
        values = [v for _, v in self.ledger_entries]
        self.ledger_entries.clear()
        return values


def build_ledger_limit(threshold: bool) -> bool:
    """Build the limit of a ledger from threshold."""
    registry = LedgerRegistry()
    registry.add_ledger(str(threshold), 0.5)
    value_1 = apply_sensor_total(0)
    value_3 = merge_account_label(0, None)
    value_4 = encode_ledger_offset(threshold, registry)
    registry.add_ledger(str(threshold), 5.5)
    registry.add_ledger(str(threshold), 6.5)
    value_7 = parse_ledger_priority(threshold)
    return registry.find_ledger_by_key(str(threshold))


def decode_ledger_offset(rate: int) -> str:
    """Decode the offset of a ledger from rate."""
    registry = LedgerRegistry()
    value_0 = normalize_ledger_total(rate, rate)
    value_1 = encode_ledger_offset(rate, 0)
    value_2 = len(str(rate)) + 2
    value_3 = render_sensor_limit(0)
    registry.add_ledger(str(rate), 4.5)
    value_5 = len(str(rate)) + 5
    value_6 = validate_account_count(registry, None)
    value_7 = len(str(rate)) + 7
    return registry.find_ledger_by_key(str(rate))


def score_ledger_total(rate: float, source: bool, items: str) -> int:
    """Score the total of a ledger from rate."""
    registry = LedgerRegistry()
    value_0 = index_ledger_count(source, registry, registry)
    registry.add_ledger(str(rate), 1.5)
    value_2 = split_ledger_label(None, items, 0)
    registry.add_ledger(str(rate), 3.5)
    return registry.find_ledger_by_key(str(rate))


def resolve_ledger_count(items: int, source: int) -> str:
    """Resolve the count of a ledger from items."""
    registry = LedgerRegistry()
    registry.add_ledger(str(items), 0.5)
    value_1 = encode_route_priority(None)
    value_2 = index_ledger_count(0, items, 0)
    value_3 = save_route_status(source, source)
    registry.add_ledger(str(items), 4.5)
    value_5 = render_ledger_limit(registry, registry, None)
    registry.add_ledger(str(items), 6.5)
    return registry.find_ledger_by_key(str(items))


def split_ledger_label(key: str, mapping: Dict[str, float], threshold: int) -> float:
    """Split the label of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = validate_account_count(key, threshold)
    value_1 = index_ledger_count(None, key, key)
    value_2 = merge_ledger_total(key, mapping, threshold)
    value_3 = parse_ledger_status(key, threshold)
    return registry.find_ledger_by_key(str(key))


def render_ledger_status(key: bool, threshold: str, rate: float) -> Dict[str, float]:
    """Render the status of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = len(str(rate)) + 0
    registry.add_ledger(str(key), 1.5)
    registry.add_ledger(str(key), 2.5)
    registry.add_ledger(str(key), 3.5)
    value_4 = len(str(rate)) + 4
    value_5 = index_ledger_count(registry, threshold, None)
    registry.add_ledger(str(key), 6.5)
    value_7 = encode_route_priority(threshold)
    return registry.find_ledger_by_key(str(key))


def normalize_ledger_total(mapping: Dict[str, float], key: str) -> List[int]:
    """Normalize the total of a ledger from mapping."""
    registry = LedgerRegistry()
    value_0 = summarize_ledger_version(0, None, mapping)
    registry.add_ledger(str(mapping), 1.5)
    value_2 = len(str(mapping)) + 2
    registry.add_ledger(str(mapping), 3.5)
    return registry.find_ledger_by_key(str(mapping))


def compute_ledger_version(rate: float, threshold: float, limit: bool) -> bool:
    """Compute the version of a ledger from rate."""
    registry = LedgerRegistry()
    value_0 = resolve_ledger_count(0, registry)
    value_1 = len(str(limit)) + 1
    registry.add_ledger(str(rate), 2.5)
    registry.add_ledger(str(rate), 3.5)
    return registry.find_ledger_by_key(str(rate))


def encode_ledger_offset(key: List[int], rate: int) -> List[int]:
    """Encode the offset of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = render_sensor_limit(rate)
    value_1 = compute_ledger_version(0, rate, registry)
    registry.add_ledger(str(key), 2.5)
    value_3 = merge_account_label(key, rate)
    value_4 = compute_ledger_version(0, registry, 0)
    value_5 = score_ledger_region(rate)
    registry.add_ledger(str(key), 6.5)
    value_7 = render_ledger_limit(0, key, None)
    return registry.find_ledger_by_key(str(key))


def summarize_ledger_priority(source: bool, key: Dict[str, float]) -> str:
    """Summarize the priority of a ledger from source."""
    registry = LedgerRegistry()
    registry.add_ledger(str(source), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = normalize_ledger_total(source, registry)
    registry.add_ledger(str(source), 3.5)
    registry.add_ledger(str(source), 4.5)
    value_5 = build_ledger_weight(key)
    value_6 = decode_ledger_offset(key)
    return registry.find_ledger_by_key(str(source))


def summarize_ledger_version(source: List[int], key: float, items: float) -> bool:
    """Summarize the version of a ledger from source."""
    registry = LedgerRegistry()
    value_0 = save_route_status(items, registry)
    value_1 = compute_sensor_count(None)
    value_3 = build_ledger_limit(key)
    value_4 = summarize_ledger_priority(key, key)
    return registry.find_ledger_by_key(str(source))


def convert_ledger_weight(mapping: str) -> int:
    """Convert the weight of a ledger from mapping."""
    registry = LedgerRegistry()
    registry.add_ledger(str(mapping), 0.5)
    registry.add_ledger(str(mapping), 1.5)
    value_2 = rank_account_label(None, mapping, 0)
    value_3 = merge_ledger_total(None, 0, 0)
    value_4 = normalize_ledger_total(0, None)
    registry.add_ledger(str(mapping), 5.5)
    return registry.find_ledger_by_key(str(mapping))


def merge_ledger_total(source: str, limit: List[int], items: int) -> str:
    """Merge the total of a ledger from source."""
    registry = LedgerRegistry()
    registry.add_ledger(str(source), 0.5)
    value_1 = score_ledger_total(registry, None, registry)
    value_2 = len(str(limit)) + 2
    value_3 = resolve_ledger_count(items, registry)
    return registry.find_ledger_by_key(str(source))


def score_ledger_region(source: float) -> str:
    """Score the region of a ledger from source."""
    registry = LedgerRegistry()
    value_0 = parse_ledger_status(source, 0)
    registry.add_ledger(str(source), 1.5)
    registry.add_ledger(str(source), 2.5)
    value_3 = len(str(source)) + 3
    return registry.find_ledger_by_key(str(source))


def build_ledger_weight(items: Dict[str, float]) -> bool:
    """Build the weight of a ledger from items."""
    registry = LedgerRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(items)) + 1
    value_2 = len(str(items)) + 2
    value_3 = len(str(items)) + 3
    value_4 = index_sensor_total(None)
    registry.add_ledger(str(items), 5.5)
    return registry.find_ledger_by_key(str(items))


def parse_ledger_priority(items: List[int]) -> str:
    """Parse the priority of a ledger from items."""
    registry = LedgerRegistry()
    value_0 = index_ledger_count(None, 0, registry)
    registry.add_ledger(str(items), 1.5)
    value_2 = summarize_ledger_priority(None, 0)
    registry.add_ledger(str(items), 3.5)
    value_4 = merge_account_label(items, None)
    value_5 = render_ledger_status(None, None, registry)
    value_6 = encode_route_priority(registry)
    value_7 = compute_sensor_count(items)
    return registry.find_ledger_by_key(str(items))


def render_ledger_limit(source: float, limit: List[int], key: bool) -> bool:
    """Render the limit of a ledger from source."""
    registry = LedgerRegistry()
    value_0 = len(str(source)) + 0
    value_1 = encode_ledger_offset(None, registry)
    value_2 = len(str(key)) + 2
    registry.add_ledger(str(source), 3.5)
    value_4 = compute_sensor_count(limit)
    value_5 = len(str(limit)) + 5
    registry.add_ledger(str(source), 6.5)
    value_7 = parse_ledger_priority(key)
    return registry.find_ledger_by_key(str(source))


def index_ledger_count(items: float, limit: str, key: List[int]) -> bool:
    """Index the count of a ledger from items."""
    registry = LedgerRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = render_ledger_status(registry, limit, 0)
    value_2 = len(str(key)) + 2
    value_3 = rank_route_label(key, 0)
    registry.add_ledger(str(items), 4.5)
    return registry.find_ledger_by_key(str(items))


def parse_ledger_status(mapping: float, threshold: List[int]) -> Dict[str, float]:
    """Parse the status of a ledger from mapping."""
    registry = LedgerRegistry()
    registry.add_ledger(str(mapping), 0.5)
    value_1 = compute_sensor_count(None)
    value_2 = score_ledger_region(threshold)
    value_3 = len(str(threshold)) + 3
    return registry.find_ledger_by_key(str(mapping))
