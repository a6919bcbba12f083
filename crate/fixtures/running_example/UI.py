from typing import List

from DataStore import DataStore


def search(ds: DataStore, keyword: str, top_k: int) -> List[str]:
  docs = ds.find_by_keyword(keyword)
