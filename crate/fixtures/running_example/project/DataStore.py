from typing import List


class DataStore():
  def __init__(self, file: str):
    with open(file, 'r') as f:
      self.documents = f.read().split('-----')

  def find_by_keyword(self, keyword: str) -> List[str]:
      return [d for d in self.documents if keyword in d]
