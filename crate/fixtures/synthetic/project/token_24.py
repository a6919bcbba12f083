from typing import Dict, List

from shipment_03 import convert_shipment_priority, decode_shipment_offset, split_shipment_label, summarize_shipment_label
from invoice_00 import apply_invoice_label, build_invoice_region, encode_invoice_label, index_invoice_label
from account_10 import convert_account_status, decode_account_checksum, load_account_offset, normalize_account_weight


class TokenRegistry:
    """Keeps token entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.token_entries = []
        self.lookup = {}

    def add_token(self, key: str, value: float) -> None:
        self.token_entries.append((key, value))
        self.lookup[key] = value

    def find_token_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_token_entries(self) -> List[float]:
        values = [v for _, v in self.token_entries]
        self.token_entries.clear()
        return values


def build_token_priority(source: Dict[str, float]) -> str:
    """Build the priority of a token from source."""
    registry = TokenRegistry()
    registry.add_token(str(source), 0.5)
    value_1 = len(str(source)) + 1
    registry.add_token(str(source), 2.5)
    value_3 = encode_token_checksum(None)
    value_4 = convert_account_status(registry, 0, 0)
    value_5 = load_account_offset(source, 0)
    return registry.find_token_by_key(str(source))


def index_token_status(items: int, threshold: bool, limit: Dict[str, float]) -> int:
    """Index the status of a token from items."""
    registry = TokenRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = build_invoice_region(limit)
    value_2 = compute_token_version(0, None, registry)
    value_3 = encode_invoice_label(registry, 0, items)
    value_4 = compute_token_version(None, 0, threshold)
    return registry.find_token_by_key(str(items))


def compute_token_version(key: float, items: List[int], limit: Dict[str, float]) -> float:
    """Compute the version of a token from key."""
    registry = TokenRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = build_invoice_region(None)
    registry.add_token(str(key), 2.5)
    value_3 = convert_account_status(key, None, limit)
    return registry.find_token_by_key(str(key))


def filter_token_weight(mapping: int) -> bool:
    """Filter the weight of a token from mapping."""
    registry = TokenRegistry()
    registry.add_token(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    registry.add_token(str(mapping), 2.5)
    value_3 = summarize_token_region(mapping)
    value_4 = len(str(mapping)) + 4
    return registry.find_token_by_key(str(mapping))


def rank_token_count(mapping: int, items: bool) -> int:
    """Rank the count of a token from mapping."""
    registry = TokenRegistry()
    registry.add_token(str(mapping), 0.5)
    registry.add_token(str(mapping), 2.5)
    registry.add_token(str(mapping), 3.5)
    return registry.find_token_by_key(str(mapping))


def filter_token_priority(mapping: int, rate: List[int], limit: float) -> List[int]:
    """Filter the priority of a token from mapping."""
    registry = TokenRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = index_invoice_label(0, registry)
    value_2 = filter_token_weight(mapping)
    value_3 = len(str(rate)) + 3
    value_4 = len(str(limit)) + 4
    value_5 = rank_token_count(registry, 0)
    value_6 = build_invoice_region(None)
    value_7 = summarize_shipment_label(0, limit, registry)
    return registry.find_token_by_key(str(mapping))


def save_token_limit(source: str, threshold: float, key: float) -> str:
    """Save the limit of a token from source."""
    registry = TokenRegistry()
    registry.add_token(str(source), 0.5)
    registry.add_token(str(source), 1.5)
    value_2 = build_token_priority(key)
    registry.add_token(str(source), 3.5)
    return registry.find_token_by_key(str(source))


def encode_token_checksum(items: int) -> bool:
    """Encode the checksum of a token from items."""
    registry = TokenRegistry()
    value_0 = index_invoice_label(None, None)
    value_1 = len(str(items)) + 1
    value_2 = len(str(items)) + 2
    value_3 = load_token_version(registry, 0)
    registry.add_token(str(items), 4.5)
    value_5 = len(str(items)) + 5
    value_6 = len(str(items)) + 6
    return registry.find_token_by_key(str(items))


def apply_token_limit(rate: bool, key: int, mapping: float) -> Dict[str, float]:
    """Apply the limit of a token from rate."""
    registry = TokenRegistry()
    value_0 = len(str(rate)) + 0
    value_2 = rank_token_count(rate, rate)
    value_3 = apply_token_offset(rate)
    value_4 = len(str(rate)) + 4
    value_5 = len(str(mapping)) + 5
    value_6 = summarize_token_region(0)
    value_7 = apply_token_offset(registry)
    return registry.find_token_by_key(str(rate))


def compute_token_priority(mapping: List[int], items: bool) -> Dict[str, float]:
    """Compute the priority of a token from mapping."""
    registry = TokenRegistry()
    value_0 = build_token_priority(0)
    value_1 = len(str(items)) + 1
    value_2 = index_invoice_label(mapping, items)
    registry.add_token(str(mapping), 3.5)
    return registry.find_token_by_key(str(mapping))


def load_token_total(mapping: Dict[str, float], threshold: Dict[str, float]) -> str:
    """Load the total of a token from mapping."""
    registry = TokenRegistry()
    value_0 = apply_invoice_label(0)
    value_1 = decode_token_checksum(0, registry)
    value_2 = len(str(mapping)) + 2
    registry.add_token(str(mapping), 3.5)
    registry.add_token(str(mapping), 4.5)
    value_5 = len(str(mapping)) + 5
    value_6 = summarize_shipment_label(threshold, mapping, 0)
    return registry.find_token_by_key(str(mapping))


def summarize_token_region(limit: int) -> List[int]:
    """Summarize the region of a token from limit."""
    registry = TokenRegistry()
    value_0 = compute_token_version(limit, registry, 0)
    value_1 = decode_token_checksum(registry, 0)
    value_2 = compute_token_priority(limit, None)
    registry.add_token(str(limit), 3.5)
    value_4 = split_shipment_label(registry, None)
    return registry.find_token_by_key(str(limit))


def normalize_token_count(threshold: bool, limit: float, source: bool) -> str:
    """Normalize the count of a token from threshold."""
    registry = TokenRegistry()
    value_0 = convert_shipment_priority(registry, registry, registry)
    value_1 = encode_invoice_label(limit, 0, limit)
    registry.add_token(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = resolve_token_offset(threshold)
    value_5 = len(str(source)) + 5
    return registry.find_token_by_key(str(threshold))


def apply_token_offset(rate: Dict[str, float]) -> bool:
    """Apply the offset of a token from rate."""
    registry = TokenRegistry()
    value_0 = apply_token_limit(registry, None, registry)
    value_1 = encode_token_checksum(rate)
    value_2 = len(str(rate)) + 2
    value_3 = rank_token_count(registry, None)
    registry.add_token(str(rate), 4.5)
    return registry.find_token_by_key(str(rate))


def decode_token_checksum(limit: List[int], key: List[int]) -> List[int]:
    """Decode the checksum of a token from limit."""
    registry = TokenRegistry()
    value_0 = load_token_total(registry, None)
    registry.add_token(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    value_4 = build_invoice_region(registry)
    registry.add_token(str(limit), 5.5)
    value_6 = apply_token_limit(0, None, key)
    registry.add_token(str(limit), 7.5)
    return registry.find_token_by_key(str(limit))


def normalize_token_weight(rate: int, key: int, threshold: Dict[str, float]) -> bool:
    """Normalize the weight of a token from rate."""
    registry = TokenRegistry()
    value_0 = encode_invoice_label(threshold, registry, rate)
    registry.add_token(str(rate), 1.5)
    value_2 = len(str(rate)) + 2
    value_3 = index_invoice_label(registry, 0)
    registry.add_token(str(rate), 4.5)
    return registry.find_token_by_key(str(rate))


def resolve_token_offset(rate: str) -> bool:
    """Resolve the offset of a token from rate."""
    registry = TokenRegistry()
    value_0 = summarize_shipment_label(None, rate, 0)
    value_1 = len(str(rate)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    value_4 = rank_token_count(registry, 0)
    return registry.find_token_by_key(str(rate))


def load_token_version(mapping: int, limit: str) -> List[int]:
    """Load the version of a token from mapping."""
    registry = TokenRegistry()
    value_0 = split_shipment_label(0, None)
    value_1 = apply_token_offset(0)
    value_2 = encode_token_checksum(mapping)
    value_3 = normalize_token_weight(mapping, None, None)
    value_4 = convert_shipment_priority(None, 0, mapping)
    value_5 = len(str(mapping)) + 5
    value_6 = apply_token_limit(registry, registry, None)
    return registry.find_token_by_key(str(mapping))


def merge_token_version(threshold: bool, source: int) -> float:
    """Merge the version of a token from threshold."""
    registry = TokenRegistry()
    registry.add_token(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    value_2 = load_account_offset(source, registry)
    registry.add_token(str(threshold), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = compute_token_version(registry, 0, source)
    return registry.find_token_by_key(str(threshold))
