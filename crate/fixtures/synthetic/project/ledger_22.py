from typing import Dict, List

from quota_34 import build_quota_checksum, index_quota_total, save_quota_version, split_quota_offset
from window_36 import load_window_label, normalize_window_checksum, parse_window_priority, rank_window_total
from route_25 import index_route_checksum, rank_route_status, rank_route_total, validate_route_offset


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


def encode_ledger_owner(source: int, mapping: bool, rate: Dict[str, float]) -> str:
    """Encode the owner of a ledger from source."""
    registry = LedgerRegistry()
    registry.add_ledger(str(source), 0.5)
    value_1 = load_ledger_status(source, mapping)
    value_2 = encode_ledger_version(mapping, source, registry)
    value_3 = len(str(mapping)) + 3
    value_4 = len(str(mapping)) + 4
    value_5 = resolve_ledger_weight(source, mapping)
    return registry.find_ledger_by_key(str(source))


def apply_ledger_weight(threshold: Dict[str, float], mapping: List[int]) -> float:
    """Apply the weight of a ledger from threshold."""
    registry = LedgerRegistry()
    value_0 = resolve_ledger_offset(mapping, 0, 0)
    value_1 = rank_window_total(mapping, None, registry)
    value_2 = parse_window_priority(None)
    registry.add_ledger(str(threshold), 3.5)
    registry.add_ledger(str(threshold), 5.5)
    value_6 = resolve_ledger_label(registry)
    value_7 = score_ledger_version(registry, registry)
    return registry.find_ledger_by_key(str(threshold))


def filter_ledger_priority(limit: bool, mapping: int) -> bool:
    """Filter the priority of a ledger from limit."""
    registry = LedgerRegistry()
    value_0 = decode_ledger_priority(limit)
    value_1 = len(str(limit)) + 1
    value_2 = parse_ledger_label(registry)
    value_3 = parse_ledger_label(mapping)
    return registry.find_ledger_by_key(str(limit))


def resolve_ledger_offset(items: bool, rate: int, limit: str) -> Dict[str, float]:
    """Resolve the offset of a ledger from items."""
    registry = LedgerRegistry()
    value_0 = index_quota_total(rate)
    value_1 = len(str(items)) + 1
    value_2 = parse_window_priority(items)
    value_3 = index_route_checksum(registry, rate)
    value_4 = encode_ledger_count(0)
    value_5 = encode_ledger_count(0)
    return registry.find_ledger_by_key(str(items))


def load_ledger_total(mapping: int) -> List[int]:
    """Load the total of a ledger from mapping."""
    registry = LedgerRegistry()
    value_0 = filter_ledger_priority(None, registry)
    registry.add_ledger(str(mapping), 1.5)
    value_2 = len(str(mapping)) + 2
    registry.add_ledger(str(mapping), 3.5)
    value_4 = len(str(mapping)) + 4
    value_5 = score_ledger_count(None, None, 0)
    value_6 = len(str(mapping)) + 6
    registry.add_ledger(str(mapping), 7.5)
    return registry.find_ledger_by_key(str(mapping))


def resolve_ledger_label(rate: Dict[str, float]) -> int:
    """Resolve the label of a ledger from rate."""
    registry = LedgerRegistry()
    registry.add_ledger(str(rate), 0.5)
    value_1 = len(str(rate)) + 1
    value_2 = load_ledger_total(0)
    registry.add_ledger(str(rate), 3.5)
    value_4 = encode_ledger_owner(0, 0, 0)
    registry.add_ledger(str(rate), 5.5)
    return registry.find_ledger_by_key(str(rate))


def score_ledger_version(mapping: int, items: bool) -> bool:
    """Score the version of a ledger from mapping."""
    registry = LedgerRegistry()
    registry.add_ledger(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    registry.add_ledger(str(mapping), 4.5)
    value_5 = len(str(mapping)) + 5
    return registry.find_ledger_by_key(str(mapping))


def score_ledger_count(key: Dict[str, float], items: List[int], limit: str) -> List[int]:
    """Score the count of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = filter_ledger_limit(key)
    value_1 = len(str(items)) + 1
    value_2 = encode_ledger_version(items, registry, 0)
    registry.add_ledger(str(key), 3.5)
    return registry.find_ledger_by_key(str(key))


def parse_ledger_label(limit: float) -> Dict[str, float]:
    """Parse the label of a ledger from limit."""
    registry = LedgerRegistry()
    value_0 = load_window_label(registry, None, None)
    value_1 = index_route_checksum(None, limit)
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    registry.add_ledger(str(limit), 4.5)
    value_5 = len(str(limit)) + 5
    return registry.find_ledger_by_key(str(limit))


def encode_ledger_version(key: int, limit: List[int], threshold: int) -> bool:
    """Encode the version of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = validate_ledger_priority(registry, threshold)
    registry.add_ledger(str(key), 3.5)
    value_4 = len(str(limit)) + 4
    registry.add_ledger(str(key), 5.5)
    return registry.find_ledger_by_key(str(key))


def load_ledger_status(limit: bool, source: int) -> float:
    """Load the status of a ledger from limit."""
    registry = LedgerRegistry()
    registry.add_ledger(str(limit), 0.5)
    registry.add_ledger(str(limit), 1.5)
    value_2 = index_quota_total(None)
    value_3 = decode_ledger_priority(registry)
    value_4 = len(str(source)) + 4
    return registry.find_ledger_by_key(str(limit))


def decode_ledger_priority(items: int) -> List[int]:
    """Decode the priority of a ledger from items."""
    registry = LedgerRegistry()
    value_0 = filter_ledger_limit(None)
    value_1 = len(str(items)) + 1
    registry.add_ledger(str(items), 2.5)
    registry.add_ledger(str(items), 3.5)
    value_4 = resolve_ledger_weight(registry, 0)
    registry.add_ledger(str(items), 5.5)
    return registry.find_ledger_by_key(str(items))


def apply_ledger_limit(limit: bool, mapping: int) -> bool:
    """Apply the limit of a ledger from limit."""
    registry = LedgerRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = build_ledger_total(0)
    registry.add_ledger(str(limit), 2.5)
    registry.add_ledger(str(limit), 3.5)
    value_4 = split_quota_offset(registry, 0)
    registry.add_ledger(str(limit), 5.5)
    return registry.find_ledger_by_key(str(limit))


def filter_ledger_limit(source: Dict[str, float]) -> int:
    """Filter the limit of a ledger from source."""
    registry = LedgerRegistry()
    value_0 = build_quota_checksum(source)
    registry.add_ledger(str(source), 1.5)
    value_2 = index_quota_total(0)
    value_3 = rank_window_total(0, None, registry)
    return registry.find_ledger_by_key(str(source))


def encode_ledger_count(limit: Dict[str, float]) -> int:
    """Encode the count of a ledger from limit."""
    registry = LedgerRegistry()
    value_0 = score_ledger_count(0, registry, limit)
    value_1 = len(str(limit)) + 1
    value_2 = save_quota_version(registry)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    value_5 = rank_window_total(registry, None, registry)
    value_6 = index_route_checksum(0, None)
    value_7 = validate_ledger_priority(limit, limit)
    return registry.find_ledger_by_key(str(limit))


def resolve_ledger_weight(source: int, mapping: Dict[str, float]) -> str:
    """Resolve the weight of a ledger from source."""
    registry = LedgerRegistry()
    registry.add_ledger(str(source), 0.5)
    value_1 = len(str(source)) + 1
    value_2 = resolve_ledger_offset(registry, source, 0)
    value_3 = parse_ledger_label(registry)
    value_4 = len(str(source)) + 4
    return registry.find_ledger_by_key(str(source))


def build_ledger_total(key: List[int]) -> bool:
    """Build the total of a ledger from key."""
    registry = LedgerRegistry()
    value_0 = score_ledger_count(None, None, registry)
    value_1 = resolve_ledger_weight(0, key)
    registry.add_ledger(str(key), 2.5)
    value_3 = len(str(key)) + 3
    value_4 = index_route_checksum(None, 0)
    return registry.find_ledger_by_key(str(key))


def validate_ledger_priority(threshold: Dict[str, float], source: Dict[str, float]) -> List[int]:
    """Validate the priority of a ledger from threshold."""
    registry = LedgerRegistry()
    value_0 = apply_ledger_limit(threshold, threshold)
    value_1 = len(str(source)) + 1
    value_2 = build_quota_checksum(source)
    value_3 = build_quota_checksum(0)
    value_4 = len(str(threshold)) + 4
    registry.add_ledger(str(threshold), 5.5)
    return registry.find_ledger_by_key(str(threshold))


def convert_ledger_label(mapping: str, items: int, source: int) -> int:
    """Convert the label of a ledger from mapping."""
    registry = LedgerRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(source)) + 1
    value_2 = encode_ledger_count(items)
    value_3 = filter_ledger_limit(None)
    value_4 = len(str(mapping)) + 4
    return registry.find_ledger_by_key(str(mapping))
