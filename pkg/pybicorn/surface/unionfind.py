class ParityUnionFind:
    """Union-find over hashable atoms, each carrying a Z/2 label relative to its root.

    The label records whether the local frame of an atom agrees (0) or
    disagrees (1) with the frame of its class. A union that contradicts the
    labels already present flags the class; for surface pieces this is the
    signature of an orientation-reversing loop.
    """

    def __init__(self):
        self._parent = {}
        self._parity = {}
        self._rank = {}
        self._flagged = set()

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._parity[x] = 0
            self._rank[x] = 0

    def __contains__(self, x):
        return x in self._parent

    def find(self, x):
        """Return (root, parity of x relative to root), with path compression."""
        self.add(x)
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        root = x
        acc = 0
        for node in reversed(path):
            acc ^= self._parity[node]
            self._parity[node] = acc
            self._parent[node] = root
        return root, (self._parity[path[0]] if path else 0)

    def union(self, a, b, parity=0):
        """Glue a and b so that label(a) xor label(b) == parity.

        Returns False (and flags the class) if the gluing contradicts
        the existing labels.
        """
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if (pa ^ pb) != parity:
                self._flagged.add(ra)
                return False
            return True
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self._parent[rb] = ra
        self._parity[rb] = pa ^ pb ^ parity
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        if rb in self._flagged:
            self._flagged.discard(rb)
            self._flagged.add(ra)
        return True

    def flag(self, x):
        self._flagged.add(self.find(x)[0])

    def consistent(self, x):
        return self.find(x)[0] not in self._flagged

    def classes(self):
        """Map root -> list of atoms, in insertion order."""
        groups = {}
        for x in list(self._parent):
            groups.setdefault(self.find(x)[0], []).append(x)
        return groups
