# filename: app/structure/disjoint_set.py
from typing import Dict, List


class DisjointSetForest:
    """
    Partition of {0, .., size-1} under merges, with union by size and path
    compression.

    Examples:
        >>> forest = DisjointSetForest(3)  # {{0}, {1}, {2}}
        >>> forest.union(0, 2)
        True
        >>> forest.same_component(0, 2), forest.same_component(0, 1)
        (True, False)
        >>> forest.union(2, 0)
        False
        >>> forest.component_count
        2
    """

    def __init__(self, size: int):
        assert size >= 0
        self.parent: List[int] = list(range(size))
        self.size: List[int] = [1] * size
        self.component_count = size

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merges the components of x and y; returns False if they were already one."""
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.size[x_root] < self.size[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        self.size[x_root] += self.size[y_root]
        self.component_count -= 1
        return True

    def same_component(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def component_size(self, x: int) -> int:
        return self.size[self.find(x)]

    def components(self) -> List[List[int]]:
        """All components, each sorted, ordered by their smallest element."""
        groups: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda group: group[0])
