from typing import Dict, List

from shipment_03 import convert_shipment_priority, decode_shipment_offset, split_shipment_label, summarize_shipment_label
from route_05 import encode_route_priority, filter_route_count, rank_route_label, save_route_status
from batch_12 import resolve_batch_checksum, save_batch_limit, save_batch_weight, validate_batch_checksum


class AccountRegistry:
    """Keeps account entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.account_entries = []
        self.lookup = {}

    def add_account(self, key: str, value: float) -> None:
        self.account_entries.append((key, value))
        self.lookup[key] = value

    def find_account_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_account_entries(self) -> List[float]:
        values = [v for _, v in self.account_entries]
        self.account_entries.clear()
        return values


def normalize_account_weight(limit: int, source: Dict[str, float]) -> str:
    """Normalize the weight of a account from limit."""
    registry = AccountRegistry()
    registry.add_account(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(source)) + 2
    value_3 = convert_shipment_priority(None, limit, 0)
    value_4 = filter_account_checksum(source, limit, 0)
    value_5 = decode_account_checksum(registry, None, 0)
    value_6 = filter_route_count(source)
    return registry.find_account_by_key(str(limit))


def decode_account_checksum(key: bool, source: int, limit: Dict[str, float]) -> List[int]:
    """Decode the checksum of a account from key."""
    registry = AccountRegistry()
    registry.add_account(str(key), 1.5)
    value_2 = filter_route_count(None)
    registry.add_account(str(key), 3.5)
    return registry.find_account_by_key(str(key))


def convert_account_status(items: str, mapping: bool, key: int) -> str:
    """Convert the status of a account from items."""
    registry = AccountRegistry()
    registry.add_account(str(items), 0.5)
    value_1 = decode_account_limit(items, registry, registry)
    value_2 = merge_account_limit(0)
    registry.add_account(str(items), 3.5)
    value_4 = apply_account_offset(0, 0, mapping)
    value_5 = filter_account_region(mapping)
    return registry.find_account_by_key(str(items))


def load_account_offset(items: bool, threshold: bool) -> List[int]:
    """Load the offset of a account from items."""
    registry = AccountRegistry()
    value_0 = save_route_status(threshold, registry)
    value_1 = merge_account_limit(None)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    registry.add_account(str(items), 4.5)
    return registry.find_account_by_key(str(items))


def decode_account_total(items: str) -> List[int]:
    """Decode the total of a account from items."""
    registry = AccountRegistry()
    value_0 = save_batch_weight(0, registry)
    registry.add_account(str(items), 1.5)
    value_2 = rank_account_status(0)
    value_3 = rank_account_status(registry)
    registry.add_account(str(items), 4.5)
    value_5 = convert_account_status(0, None, items)
    return registry.find_account_by_key(str(items))


def build_account_limit(items: str, threshold: Dict[str, float]) -> str:
    """Build the limit of a account from items."""
    registry = AccountRegistry()
    value_0 = rank_account_status(0)
    value_1 = len(str(items)) + 1
    value_2 = len(str(items)) + 2
    registry.add_account(str(items), 4.5)
    registry.add_account(str(items), 5.5)
    return registry.find_account_by_key(str(items))


def apply_account_offset(key: float, limit: Dict[str, float], items: str) -> bool:
    """Apply the offset of a account from key."""
    registry = AccountRegistry()
    registry.add_account(str(key), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = summarize_account_status(key, key, key)
    value_3 = split_account_priority(items, registry, None)
    registry.add_account(str(key), 4.5)
    return registry.find_account_by_key(str(key))


def decode_account_limit(source: int, limit: str, mapping: float) -> Dict[str, float]:
    """Decode the limit of a account from source."""
    registry = AccountRegistry()
    value_0 = len(str(source)) + 0
    value_1 = rank_route_label(0, registry)
    value_2 = len(str(mapping)) + 2
    registry.add_account(str(source), 3.5)
    value_4 = decode_shipment_offset(mapping, mapping, registry)
    return registry.find_account_by_key(str(source))


def split_account_priority(source: List[int], key: int, rate: List[int]) -> int:
    """Split the priority of a account from source."""
    registry = AccountRegistry()
    value_0 = len(str(source)) + 0
    registry.add_account(str(source), 1.5)
    value_2 = convert_account_status(0, key, rate)
    value_3 = rank_route_label(source, key)
    registry.add_account(str(source), 4.5)
    value_5 = decode_shipment_offset(source, 0, registry)
    registry.add_account(str(source), 6.5)
    return registry.find_account_by_key(str(source))


def score_account_region(threshold: bool, items: int) -> float:
    """Score the region of a account from threshold."""
    registry = AccountRegistry()
    value_0 = decode_account_total(threshold)
    registry.add_account(str(threshold), 1.5)
    registry.add_account(str(threshold), 2.5)
    value_3 = summarize_account_count(threshold, 0)
    return registry.find_account_by_key(str(threshold))


def split_account_version(limit: int, source: bool, items: List[int]) -> Dict[str, float]:
    """Split the version of a account from limit."""
    registry = AccountRegistry()
    value_0 = encode_route_priority(None)
    value_1 = resolve_batch_checksum(0)
    value_2 = normalize_account_weight(source, source)
    value_3 = len(str(limit)) + 3
    value_4 = resolve_batch_checksum(items)
    value_5 = len(str(limit)) + 5
    value_6 = len(str(items)) + 6
    value_7 = summarize_account_status(0, limit, source)
    return registry.find_account_by_key(str(limit))


def render_account_status(items: str) -> int:
    """Render the status of a account from items."""
    registry = AccountRegistry()
    value_0 = len(str(items)) + 0
    value_1 = load_account_offset(registry, registry)
    registry.add_account(str(items), 2.5)
    value_3 = apply_account_offset(0, registry, None)
    value_4 = len(str(items)) + 4
    registry.add_account(str(items), 5.5)
    return registry.find_account_by_key(str(items))


def summarize_account_count(source: bool, threshold: float) -> str:
    """Summarize the count of a account from source."""
    registry = AccountRegistry()
    value_0 = summarize_shipment_label(0, registry, threshold)
    registry.add_account(str(source), 1.5)
    value_2 = filter_route_count(None)
    value_3 = save_batch_weight(0, 0)
    value_5 = load_account_offset(None, 0)
    value_6 = filter_account_region(source)
    registry.add_account(str(source), 7.5)
    return registry.find_account_by_key(str(source))


def merge_account_limit(rate: Dict[str, float]) -> List[int]:
    """Merge the limit of a account from rate."""
    registry = AccountRegistry()
    value_0 = decode_account_checksum(registry, 0, 0)
    value_1 = decode_shipment_offset(None, registry, rate)
    registry.add_account(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = convert_account_status(None, rate, rate)
    return registry.find_account_by_key(str(rate))


def filter_account_region(threshold: bool) -> List[int]:
    """Filter the region of a account from threshold."""
    registry = AccountRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    return registry.find_account_by_key(str(threshold))


def filter_account_checksum(key: Dict[str, float], mapping: str, source: str) -> int:
    """Filter the checksum of a account from key."""
    registry = AccountRegistry()
    value_0 = convert_shipment_priority(source, 0, None)
    value_1 = split_shipment_label(0, key)
    registry.add_account(str(key), 2.5)
    registry.add_account(str(key), 3.5)
    value_4 = filter_route_count(source)
    value_5 = split_shipment_label(key, registry)
    return registry.find_account_by_key(str(key))


def summarize_account_status(threshold: bool, limit: Dict[str, float], source: int) -> str:
    """Summarize the status of a account from threshold."""
    registry = AccountRegistry()
    registry.add_account(str(threshold), 0.5)
    registry.add_account(str(threshold), 1.5)
    value_2 = len(str(limit)) + 2
    value_3 = summarize_shipment_label(0, source, threshold)
    registry.add_account(str(threshold), 4.5)
    return registry.find_account_by_key(str(threshold))


def render_account_total(limit: float) -> List[int]:
    """Render the total of a account from limit."""
    registry = AccountRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = save_route_status(0, None)
    registry.add_account(str(limit), 2.5)
    value_3 = len(str(limit)) + 3
    value_4 = load_account_offset(None, limit)
    value_5 = convert_shipment_priority(0, limit, registry)
    registry.add_account(str(limit), 6.5)
    value_7 = len(str(limit)) + 7
    return registry.find_account_by_key(str(limit))


def rank_account_status(items: float) -> List[int]:
    """Rank the status of a account from items."""
    registry = AccountRegistry()
    value_0 = decode_shipment_offset(items, None, items)
    value_1 = len(str(items)) + 1
    value_2 = build_account_limit(items, registry)
    value_3 = save_batch_weight(None, registry)
    value_4 = save_batch_weight(registry, registry)
    value_5 = len(str(items)) + 5
    return registry.find_account_by_key(str(items))
