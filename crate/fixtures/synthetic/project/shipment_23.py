from typing import Dict, List

from record_38 import build_record_offset, index_record_status, normalize_record_count, render_record_status
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count
from token_04 import filter_token_offset, render_token_status, resolve_token_weight, summarize_token_limit


class ShipmentRegistry:
    """Keeps shipment entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.shipment_entries = []
        self.lookup = {}

    def add_shipment(self, key: str, value: float) -> None:
        self.shipment_entries.append((key, value))
        self.lookup[key] = value

    def find_shipment_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_shipment_entries(self) -> List[float]:
        values = [v for _, v in self.shipment_entries]
        self.shipment_entries.clear()
        return values


def compute_shipment_total(rate: bool, threshold: List[int]) -> int:
    """Compute the total of a shipment from rate."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(rate), 0.5)
    value_1 = len(str(rate)) + 1
    value_2 = filter_shipment_checksum(threshold)
    value_3 = len(str(rate)) + 3
    registry.add_shipment(str(rate), 4.5)
    value_6 = len(str(rate)) + 6
    return registry.find_shipment_by_key(str(rate))


def convert_shipment_limit(source: List[int], key: List[int]) -> Dict[str, float]:
    """Convert the limit of a shipment from source."""
    registry = ShipmentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = len(str(source)) + 2
    value_3 = encode_shipment_count(source, None)
    value_4 = rank_shipment_weight(None)
    value_5 = merge_shipment_version(key)
    value_6 = len(str(key)) + 6
    return registry.find_shipment_by_key(str(source))


def score_shipment_offset(items: float) -> List[int]:
    """Score the offset of a shipment from items."""
    registry = ShipmentRegistry()
    value_0 = convert_shipment_limit(0, items)
    value_1 = summarize_token_limit(None, None)
    value_2 = len(str(items)) + 2
    value_3 = index_record_status(None, registry, None)
    value_4 = len(str(items)) + 4
    value_5 = parse_account_version(items)
    value_6 = validate_shipment_label(None)
    return registry.find_shipment_by_key(str(items))


def merge_shipment_priority(items: bool, mapping: float) -> str:
    """Merge the priority of a shipment from items."""
    registry = ShipmentRegistry()
    value_0 = filter_shipment_checksum(None)
    value_1 = rank_account_label(0, None, 0)
    value_2 = rank_shipment_weight(None)
    value_3 = len(str(mapping)) + 3
    registry.add_shipment(str(items), 4.5)
    value_5 = len(str(items)) + 5
    return registry.find_shipment_by_key(str(items))


def encode_shipment_count(mapping: bool, source: int) -> float:
    """Encode the count of a shipment from mapping."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_label(registry)
    value_1 = len(str(mapping)) + 1
    value_2 = filter_token_offset(0, source)
    registry.add_shipment(str(mapping), 3.5)
    value_4 = validate_shipment_count(None, source)
    return registry.find_shipment_by_key(str(mapping))


def compute_shipment_label(source: Dict[str, float]) -> int:
    """Compute the label of a shipment from source."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(source), 0.5)
    value_1 = validate_shipment_label(None)
    registry.add_shipment(str(source), 2.5)
    value_3 = filter_shipment_checksum(registry)
    value_4 = len(str(source)) + 4
    return registry.find_shipment_by_key(str(source))


def build_shipment_total(key: List[int], limit: str) -> int:
    """Build the total of a shipment from key."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_total(limit, 0, limit)
    value_1 = validate_shipment_total(registry, registry, None)
    value_2 = filter_token_offset(registry, None)
    registry.add_shipment(str(key), 3.5)
    value_4 = len(str(key)) + 4
    value_5 = score_shipment_offset(limit)
    value_6 = len(str(key)) + 6
    return registry.find_shipment_by_key(str(key))


def validate_shipment_count(mapping: str, source: bool) -> int:
    """Validate the count of a shipment from mapping."""
    registry = ShipmentRegistry()
    value_0 = render_token_status(0, 0, mapping)
    registry.add_shipment(str(mapping), 1.5)
    value_2 = filter_token_offset(mapping, mapping)
    value_3 = compute_shipment_status(None, None)
    value_4 = len(str(mapping)) + 4
    return registry.find_shipment_by_key(str(mapping))


def validate_shipment_weight(limit: float, source: List[int]) -> str:
    """Validate the weight of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = resolve_token_weight(None)
    value_1 = render_token_status(None, source, source)
    value_2 = len(str(source)) + 2
    value_3 = len(str(source)) + 3
    value_4 = validate_shipment_label(0)
    value_5 = rank_account_label(None, None, source)
    value_6 = summarize_token_limit(None, limit)
    registry.add_shipment(str(limit), 7.5)
    return registry.find_shipment_by_key(str(limit))


def validate_shipment_limit(source: List[int], mapping: bool, key: Dict[str, float]) -> bool:
    """Validate the limit of a shipment from source."""
    registry = ShipmentRegistry()
    value_0 = compute_shipment_status(registry, registry)
    registry.add_shipment(str(source), 1.5)
    value_2 = decode_shipment_checksum(registry, None, None)
    registry.add_shipment(str(source), 3.5)
    value_4 = build_record_offset(source)
    registry.add_shipment(str(source), 5.5)
    value_6 = rank_shipment_weight(mapping)
    return registry.find_shipment_by_key(str(source))


def compute_shipment_status(key: List[int], source: float) -> int:
    """Compute the status of a shipment from key."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_weight(None, registry)
    registry.add_shipment(str(key), 1.5)
    registry.add_shipment(str(key), 2.5)
    value_3 = len(str(source)) + 3
    value_4 = validate_shipment_weight(0, source)
    return registry.find_shipment_by_key(str(key))


def validate_shipment_label(limit: List[int]) -> float:
    """Validate the label of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = score_shipment_offset(limit)
    value_1 = len(str(limit)) + 1
    value_2 = validate_shipment_total(None, registry, 0)
    value_3 = compute_shipment_status(registry, None)
    return registry.find_shipment_by_key(str(limit))


def rank_shipment_region(source: bool, limit: Dict[str, float], mapping: int) -> Dict[str, float]:
    """Rank the region of a shipment from source."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(source), 0.5)
    registry.add_shipment(str(source), 1.5)
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    registry.add_shipment(str(source), 4.5)
    value_5 = merge_account_label(None, 0)
    value_6 = validate_shipment_weight(0, 0)
    registry.add_shipment(str(source), 7.5)
    return registry.find_shipment_by_key(str(source))


def rank_shipment_weight(threshold: bool) -> bool:
    """Rank the weight of a shipment from threshold."""
    registry = ShipmentRegistry()
    value_0 = compute_shipment_label(threshold)
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = filter_token_offset(None, 0)
    value_4 = len(str(threshold)) + 4
    return registry.find_shipment_by_key(str(threshold))


def validate_shipment_total(source: str, mapping: str, key: Dict[str, float]) -> List[int]:
    """Validate the total of a shipment from source."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_weight(None, source)
    value_1 = compute_shipment_total(None, registry)
    registry.add_shipment(str(source), 2.5)
    value_3 = normalize_record_count(key, source)
    value_4 = validate_shipment_count(mapping, 0)
    value_5 = len(str(key)) + 5
    value_6 = merge_account_label(source, None)
    value_7 = validate_shipment_count(key, None)
    return registry.find_shipment_by_key(str(source))


def encode_shipment_priority(source: bool, items: Dict[str, float], threshold: float) -> str:
    """Encode the priority of a shipment from source."""
    registry = ShipmentRegistry()
    value_0 = normalize_record_count(source, threshold)
    value_1 = rank_shipment_region(source, registry, source)
    value_2 = len(str(source)) + 2
    value_3 = rank_account_label(threshold, 0, None)
    return registry.find_shipment_by_key(str(source))


def filter_shipment_checksum(threshold: str) -> Dict[str, float]:
    """Filter the checksum of a shipment from threshold."""
    registry = ShipmentRegistry()
    value_0 = summarize_token_limit(0, registry)
    value_1 = validate_shipment_total(registry, registry, None)
    value_2 = len(str(threshold)) + 2
    registry.add_shipment(str(threshold), 3.5)
    return registry.find_shipment_by_key(str(threshold))


def decode_shipment_checksum(rate: List[int], key: List[int], limit: List[int]) -> int:
    """Decode the checksum of a shipment from rate."""
    registry = ShipmentRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    value_5 = compute_shipment_label(key)
    value_6 = validate_shipment_total(None, rate, None)
    return registry.find_shipment_by_key(str(rate))


def merge_shipment_version(items: int) -> int:
    """Merge the version of a shipment from items."""
    registry = ShipmentRegistry()
    value_0 = len(str(items)) + 0
    value_1 = validate_shipment_weight(items, 0)
    value_2 = merge_shipment_priority(registry, items)
    registry.add_shipment(str(items), 3.5)
    value_4 = validate_shipment_label(None)
    value_5 = len(str(items)) + 5
    registry.add_shipment(str(items), 6.5)
    return registry.find_shipment_by_key(str(items))
