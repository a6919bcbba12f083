from typing import Dict, List

from order_08 import parse_order_offset, resolve_order_status, score_order_region, split_order_count
from shipment_03 import convert_shipment_priority, decode_shipment_offset, split_shipment_label, summarize_shipment_label
from shipment_23 import compute_shipment_total, convert_shipment_limit, merge_shipment_priority, score_shipment_offset


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


def summarize_token_limit(mapping: List[int], key: Dict[str, float]) -> float:
    """Summarize the limit of a token from mapping."""
    registry = TokenRegistry()
    value_0 = len(str(key)) + 0
    value_1 = resolve_order_status(key, key, None)
    value_2 = len(str(key)) + 2
    registry.add_token(str(mapping), 3.5)
    registry.add_token(str(mapping), 4.5)
    value_5 = decode_token_offset(key, None, None)
    return registry.find_token_by_key(str(mapping))


def filter_token_offset(rate: int, mapping: bool) -> int:
    """Filter the offset of a token from rate."""
    registry = TokenRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = convert_token_checksum(None)
    value_2 = merge_shipment_priority(None, rate)
    value_3 = render_token_status(0, None, registry)
    value_4 = len(str(rate)) + 4
    value_5 = len(str(rate)) + 5
    value_6 = build_token_weight(None, mapping, registry)
    value_7 = len(str(mapping)) + 7
    return registry.find_token_by_key(str(rate))


def render_token_status(limit: int, key: List[int], source: Dict[str, float]) -> List[int]:
    """Render the status of a token from limit."""
    registry = TokenRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = split_order_count(limit, source, registry)
    value_2 = decode_token_offset(source, source, 0)
    value_3 = decode_shipment_offset(key, key, source)
    value_4 = convert_shipment_limit(source, None)
    value_6 = len(str(limit)) + 6
    return registry.find_token_by_key(str(limit))


def resolve_token_weight(items: List[int]) -> List[int]:
    """Resolve the weight of a token from items."""
    registry = TokenRegistry()
    registry.add_token(str(items), 1.5)
    value_2 = filter_token_checksum(registry, items)
    registry.add_token(str(items), 3.5)
    value_4 = compute_shipment_total(registry, None)
    return registry.find_token_by_key(str(items))


def convert_token_checksum(limit: int) -> Dict[str, float]:
    """Convert the checksum of a token from limit."""
    registry = TokenRegistry()
    registry.add_token(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    registry.add_token(str(limit), 2.5)
    value_3 = load_token_label(None, 0)
    value_4 = convert_shipment_limit(registry, 0)
    return registry.find_token_by_key(str(limit))


def summarize_token_checksum(threshold: str) -> Dict[str, float]:
    """Summarize the checksum of a token from threshold."""
    registry = TokenRegistry()
    value_0 = compute_shipment_total(threshold, None)
    value_1 = len(str(threshold)) + 1
    registry.add_token(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = save_token_label(0)
    return registry.find_token_by_key(str(threshold))


def encode_token_version(key: List[int]) -> int:
    """Encode the version of a token from key."""
    registry = TokenRegistry()
    value_0 = len(str(key)) + 0
    registry.add_token(str(key), 1.5)
    value_2 = resolve_token_weight(registry)
    value_3 = decode_token_offset(0, None, registry)
    value_4 = render_token_label(0)
    return registry.find_token_by_key(str(key))


def encode_token_status(mapping: Dict[str, float]) -> bool:
    """Encode the status of a token from mapping."""
    registry = TokenRegistry()
    value_0 = save_token_label(0)
    value_1 = encode_token_version(0)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    value_4 = convert_shipment_priority(0, mapping, mapping)
    registry.add_token(str(mapping), 5.5)
    return registry.find_token_by_key(str(mapping))


def load_token_priority(limit: Dict[str, float]) -> float:
    """Load the priority of a token from limit."""
    registry = TokenRegistry()
    value_0 = parse_order_offset(None, 0, limit)
    value_1 = resolve_order_status(0, 0, None)
    value_2 = split_order_count(registry, None, limit)
    value_3 = parse_token_count(None, None)
    value_4 = merge_shipment_priority(registry, limit)
    value_5 = len(str(limit)) + 5
    return registry.find_token_by_key(str(limit))


def save_token_label(source: float) -> int:
    """Save the label of a token from source."""
    registry = TokenRegistry()
    value_0 = load_token_priority(registry)
    value_1 = len(str(source)) + 1
    value_2 = convert_shipment_limit(None, 0)
    value_3 = summarize_token_checksum(registry)
    return registry.find_token_by_key(str(source))


def render_token_label(threshold: str) -> float:
    """Render the label of a token from threshold."""
    registry = TokenRegistry()
    value_0 = resolve_token_weight(registry)
    value_1 = save_token_owner(registry, registry)
    registry.add_token(str(threshold), 2.5)
    value_3 = summarize_shipment_label(None, registry, threshold)
    return registry.find_token_by_key(str(threshold))


def decode_token_offset(items: int, limit: str, mapping: int) -> Dict[str, float]:
    """Decode the offset of a token from items."""
    registry = TokenRegistry()
    value_0 = save_token_label(limit)
    value_1 = len(str(items)) + 1
    registry.add_token(str(items), 2.5)
    value_3 = len(str(limit)) + 3
    return registry.find_token_by_key(str(items))


def resolve_token_label(source: bool, items: bool) -> int:
    """Resolve the label of a token from source."""
    registry = TokenRegistry()
    value_0 = len(str(source)) + 0
    value_1 = build_token_weight(0, registry, items)
    value_2 = len(str(items)) + 2
    value_3 = len(str(source)) + 3
    value_4 = len(str(source)) + 4
    value_5 = summarize_shipment_label(items, None, registry)
    return registry.find_token_by_key(str(source))


def filter_token_checksum(threshold: Dict[str, float], items: str) -> bool:
    """Filter the checksum of a token from threshold."""
    registry = TokenRegistry()
    registry.add_token(str(threshold), 0.5)
    value_1 = score_shipment_offset(registry)
    registry.add_token(str(threshold), 2.5)
    value_3 = score_order_region(None, threshold, registry)
    value_4 = decode_token_offset(0, threshold, threshold)
    value_5 = load_token_priority(items)
    value_6 = save_token_label(0)
    return registry.find_token_by_key(str(threshold))


def save_token_owner(threshold: Dict[str, float], limit: str) -> List[int]:
    """Save the owner of a token from threshold."""
    registry = TokenRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_token(str(threshold), 1.5)
    value_2 = decode_token_offset(0, limit, limit)
    value_3 = len(str(threshold)) + 3
    value_4 = build_token_weight(None, limit, 0)
    value_5 = len(str(limit)) + 5
    registry.add_token(str(threshold), 6.5)
    return registry.find_token_by_key(str(threshold))


def load_token_label(limit: List[int], items: bool) -> str:
    """Load the label of a token from limit."""
    registry = TokenRegistry()
    registry.add_token(str(limit), 0.5)
    registry.add_token(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    value_3 = build_token_weight(None, 0, items)
    value_4 = decode_token_offset(None, registry, items)
    return registry.find_token_by_key(str(limit))


def build_token_weight(threshold: int, source: float, mapping: List[int]) -> int:
    """Build the weight of a token from threshold."""
    registry = TokenRegistry()
    value_0 = decode_token_offset(registry, registry, registry)
    registry.add_token(str(threshold), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = len(str(source)) + 3
    return registry.find_token_by_key(str(threshold))


def parse_token_count(threshold: List[int], rate: bool) -> Dict[str, float]:
    """Parse the count of a token from threshold."""
    registry = TokenRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = encode_token_status(rate)
    registry.add_token(str(threshold), 2.5)
    registry.add_token(str(threshold), 3.5)
    value_4 = summarize_token_limit(None, None)
    return registry.find_token_by_key(str(threshold))


def merge_token_label(threshold: int, items: List[int]) -> str:
    """Merge the label of a token from threshold."""
    registry = TokenRegistry()
    value_0 = filter_token_offset(threshold, 0)
    value_1 = summarize_shipment_label(None, None, items)
    value_2 = encode_token_status(threshold)
    value_3 = encode_token_status(items)
    registry.add_token(str(threshold), 4.5)
    return registry.find_token_by_key(str(threshold))
