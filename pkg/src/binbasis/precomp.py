"""Per-vertex bases, prefix sums, and stored shift maps for reduction trees.

Each vertex v of a reduction tree carries its own basis beta_v: the root
keeps the input basis, an alpha child takes the length-d prefix, and a delta
child takes the image of the suffix under q -> q^(2^d) - q.  The map
phi_v(u, lam) transports an evaluation shift lam down to leaf u of v's
subtree.  Transforms only ever need phi at the prefix sums sigma_{v,i} of
the suffix basis, so those n(n-1)/2 values are computed once and stored.
"""

from binbasis.basisgen import alpha_of, delta_of, is_independent
from binbasis.redtree import validate


def compute_vertex_bases(field, tree, beta):
    """Basis at every vertex, as a tuple indexed by preorder vertex id."""
    if not validate(field, tree, beta):
        raise ValueError("basis does not satisfy the tree's splitting conditions")
    bases = [None] * len(tree.size)
    bases[0] = tuple(beta)
    for v in tree.vertices():
        if tree.is_leaf(v):
            continue
        d = tree.d_of(v)
        bases[tree.alpha[v]] = alpha_of(bases[v], d)
        bases[tree.delta[v]] = delta_of(field, bases[v], d)
    for b in bases:
        if not is_independent(b):
            raise ValueError("vertex basis lost independence")
    return tuple(bases)


def phi(field, tree, bases, v, u, lam):
    """Shift lam at vertex v transported to leaf u of v's subtree.

    u is a global leaf index.  At a leaf the value is lam/beta_{v,0}; alpha
    children inherit lam unchanged, delta children map it through
    q -> q^(2^d) - q with q = lam/beta_{v,0}.
    """
    lo = tree.leaf_start[v]
    if not lo <= u < lo + tree.size[v]:
        raise ValueError(f"leaf {u} is not under vertex {v}")
    while not tree.is_leaf(v):
        a = tree.alpha[v]
        if u < tree.leaf_start[a] + tree.size[a]:
            v = a
        else:
            q = field.mul(lam, field.inv(bases[v][0]))
            lam = field.pow2k(q, tree.d_of(v)) ^ q
            v = tree.delta[v]
    return field.mul(lam, field.inv(bases[v][0]))


class PrecompTable:
    """Immutable per-tree tables consumed by the basis transforms.

    Attributes, all indexed by preorder vertex id:
      bases      basis beta_v at each vertex
      head       beta_{v,0}
      head_inv   1/beta_{v,0}
      sigma      sigma_{v,i} = beta_{v,d} + ... + beta_{v,d+i}, () at leaves
      phi_alpha  phi_alpha[v][r][i] = phi_v(leaf r of the alpha child, sigma_{v,i})
    """

    __slots__ = ("field", "tree", "beta", "bases", "head", "head_inv",
                 "sigma", "phi_alpha")

    def __init__(self, field, tree, beta, bases, sigma, phi_alpha):
        self.field = field
        self.tree = tree
        self.beta = tuple(beta)
        self.bases = bases
        self.head = tuple(b[0] for b in bases)
        self.head_inv = tuple(field.inv(h) for h in self.head)
        self.sigma = sigma
        self.phi_alpha = phi_alpha

    def delta_head(self, v):
        """beta_{v_delta,0} for an internal vertex v."""
        return self.head[self.tree.delta[v]]

    def delta_head_inv(self, v):
        return self.head_inv[self.tree.delta[v]]

    def phi_entry_count(self):
        return sum(len(rows) * len(rows[0]) if rows else 0
                   for rows in self.phi_alpha)


def build_tables(field, tree, beta):
    """Precompute every table the transforms read; O(n^3) field operations."""
    bases = compute_vertex_bases(field, tree, beta)
    sigma = []
    phi_alpha = []
    for v in tree.vertices():
        if tree.is_leaf(v):
            sigma.append(())
            phi_alpha.append(())
            continue
        bv = bases[v]
        d = tree.d_of(v)
        sums = []
        acc = 0
        for b in bv[d:]:
            acc ^= b
            sums.append(acc)
        sigma.append(tuple(sums))
        a = tree.alpha[v]
        lo = tree.leaf_start[a]
        phi_alpha.append(tuple(
            tuple(phi(field, tree, bases, v, lo + r, s) for s in sums)
            for r in range(tree.size[a])))
    return PrecompTable(field, tree, beta, bases, tuple(sigma), tuple(phi_alpha))


def initial_phi_vector(field, tree, bases, lam):
    """(phi_root(u, lam)) over all leaves u; the zero vector when lam is 0."""
    n = tree.size[0]
    if lam == 0:
        return [0] * n
    return [phi(field, tree, bases, 0, u, lam) for u in range(n)]
