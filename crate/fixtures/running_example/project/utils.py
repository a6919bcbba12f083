def relevance(document: str, keyword: str) -> float:
  """Score how relevant a document is to a keyword."""
  return document.count(keyword) / len(document)
