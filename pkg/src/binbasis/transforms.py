"""In-place basis conversions over a reduction tree, with exact op counts.

The four named bases of the length-ell polynomial space are monomial, Newton,
Lagrange (values at the first ell points of lam + span(beta)), and the graded
basis X_i built from products of the Newton polynomials at power-of-two
indices.  Each conversion walks the reduction tree, viewing the coefficient
vector as a 2^(n_v - d_v) x 2^d_v matrix at vertex v and recursing on full
rows and strided columns.  Every field addition and multiplication performed
on buffer data, or on the shift vector mu, increments the buffer's counter;
everything precomputed is excluded.

CountModel replays the recursions on lengths alone: all counts are
data-independent once the table fixes which scaling guards fire, so sweeps
over every ell are cheap even where execution would not be.
"""

from binbasis.precomp import build_tables, initial_phi_vector

BASIS_KINDS = ("monomial", "newton", "lagrange", "lch")


class OpCounter:
    """Running totals of counted field operations."""

    __slots__ = ("additions", "multiplications", "twist_multiplications")

    def __init__(self):
        self.additions = 0
        self.multiplications = 0
        self.twist_multiplications = 0

    def totals(self):
        return (self.additions, self.multiplications, self.twist_multiplications)

    def __repr__(self):
        return (f"OpCounter(additions={self.additions}, "
                f"multiplications={self.multiplications}, "
                f"twist_multiplications={self.twist_multiplications})")


class CoeffBuffer:
    """Mutable coefficient storage plus the counter charged for it."""

    __slots__ = ("data", "counter")

    def __init__(self, data, counter=None):
        self.data = list(data)
        self.counter = counter if counter is not None else OpCounter()

    def view(self, length=None):
        if length is None:
            length = len(self.data)
        return StridedView(self, 0, 1, length)


class StridedView:
    """Bounds-checked strided window over a CoeffBuffer."""

    __slots__ = ("buffer", "offset", "stride", "length")

    def __init__(self, buffer, offset, stride, length):
        if offset < 0 or stride < 1 or length < 1:
            raise ValueError("bad view geometry")
        if offset + stride * (length - 1) >= len(buffer.data):
            raise ValueError("view exceeds buffer")
        self.buffer = buffer
        self.offset = offset
        self.stride = stride
        self.length = length

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        if not 0 <= i < self.length:
            raise IndexError(f"view index {i} out of range")
        return self.buffer.data[self.offset + self.stride * i]

    def __setitem__(self, i, value):
        if not 0 <= i < self.length:
            raise IndexError(f"view index {i} out of range")
        self.buffer.data[self.offset + self.stride * i] = value

    def sub(self, start, stride_mult, length):
        """View of every stride_mult-th entry, beginning at index start."""
        if start < 0 or stride_mult < 1 or length < 1:
            raise ValueError("bad subview geometry")
        if start + stride_mult * (length - 1) >= self.length:
            raise ValueError("subview exceeds parent view")
        return StridedView(self.buffer, self.offset + self.stride * start,
                           self.stride * stride_mult, length)


def ruler_delta(i):
    """Index of the lowest zero bit of i."""
    if i < 0:
        raise ValueError("ruler sequence is defined for nonnegative indices")
    return ((i + 1) & ~i).bit_length() - 1


def _clog2(x):
    return (x - 1).bit_length()


def _check_args(tree, v, phi_vec, ell, view, full_view):
    nv = tree.n_of(v)
    if not 1 <= ell <= (1 << nv):
        raise ValueError(f"ell {ell} out of range at a {nv}-dim vertex")
    want = (1 << nv) if full_view else ell
    if len(view) != want:
        raise ValueError(f"view length {len(view)}, expected {want}")
    if phi_vec is not None and len(phi_vec) != nv:
        raise ValueError(f"phi vector length {len(phi_vec)}, expected {nv}")


def _split_ceil(ell, width):
    # l1 = ceil(ell/width) - 1, so the last row has 1..width entries.
    l1 = -(-ell // width) - 1
    return l1, ell - width * l1


def n2x(v, phi_vec, ell, view, table):
    """Rewrite shifted-Newton coefficients as graded coefficients, in place."""
    tree = table.tree
    _check_args(tree, v, phi_vec, ell, view, False)
    if tree.is_leaf(v):
        if ell == 2:
            ctr = view.buffer.counter
            view[0] ^= table.field.mul(phi_vec[0], view[1])
            ctr.multiplications += 1
            ctr.additions += 1
        return
    d = tree.d_of(v)
    w = 1 << d
    l1, l2 = _split_ceil(ell, w)
    l2p = min(w, ell)
    va, vd = tree.alpha[v], tree.delta[v]
    mu = list(phi_vec[:d])
    nu = phi_vec[d:]
    shifts = table.phi_alpha[v]
    ctr = view.buffer.counter
    for i in range(l1):
        n2x(va, mu, w, view.sub(w * i, 1, w), table)
        k = ruler_delta(i)
        for r in range(d):
            mu[r] ^= shifts[r][k]
        ctr.additions += d
    n2x(va, mu, l2, view.sub(w * l1, 1, l2), table)
    for j in range(l2):
        n2x(vd, nu, l1 + 1, view.sub(j, w, l1 + 1), table)
    for j in range(l2, l2p):
        n2x(vd, nu, l1, view.sub(j, w, l1), table)


def x2n(v, phi_vec, ell, view, table):
    """Inverse of n2x: columns first, then rows in the same shift order."""
    tree = table.tree
    _check_args(tree, v, phi_vec, ell, view, False)
    if tree.is_leaf(v):
        if ell == 2:
            ctr = view.buffer.counter
            view[0] ^= table.field.mul(phi_vec[0], view[1])
            ctr.multiplications += 1
            ctr.additions += 1
        return
    d = tree.d_of(v)
    w = 1 << d
    l1, l2 = _split_ceil(ell, w)
    l2p = min(w, ell)
    va, vd = tree.alpha[v], tree.delta[v]
    mu = list(phi_vec[:d])
    nu = phi_vec[d:]
    shifts = table.phi_alpha[v]
    ctr = view.buffer.counter
    for j in range(l2):
        x2n(vd, nu, l1 + 1, view.sub(j, w, l1 + 1), table)
    for j in range(l2, l2p):
        x2n(vd, nu, l1, view.sub(j, w, l1), table)
    for i in range(l1):
        x2n(va, mu, w, view.sub(w * i, 1, w), table)
        k = ruler_delta(i)
        for r in range(d):
            mu[r] ^= shifts[r][k]
        ctr.additions += d
    x2n(va, mu, l2, view.sub(w * l1, 1, l2), table)


def l2x(v, phi_vec, c, ell, b, view, table):
    """Lagrange values (and a known coefficient tail) to graded coefficients.

    The view spans the full 2^n_v scratch; entries 0..c-1 hold values f_i,
    entries c..ell-1 hold coefficients h_i.  Afterwards entries 0..c-1 hold
    h_i, and entry c holds the value f_c when b is 1.
    """
    tree = table.tree
    nv = tree.n_of(v)
    if not 0 <= c <= ell:
        raise ValueError(f"c {c} out of range for ell {ell}")
    if b not in (0, 1) or not 1 <= b + c <= (1 << nv):
        raise ValueError(f"b {b} out of range for c {c}")
    _check_args(tree, v, phi_vec, ell, view, True)
    field = table.field
    ctr = view.buffer.counter
    if tree.is_leaf(v):
        ph = phi_vec[0]
        if c == 2:
            view[1] ^= view[0]
            view[0] ^= field.mul(ph, view[1])
            ctr.additions += 2
            ctr.multiplications += 1
        elif c == 1 and ell == 2 and b == 1:
            known = field.mul(ph, view[1])
            ctr.multiplications += 1
            view[1] ^= view[0]
            view[0] ^= known
            ctr.additions += 2
        elif (c == 1 and ell == 2) or (c == 0 and ell == 2):
            view[0] ^= field.mul(ph, view[1])
            ctr.additions += 1
            ctr.multiplications += 1
        elif c == 1 and ell == 1 and b == 1:
            view[1] = view[0]
        return
    d = tree.d_of(v)
    w = 1 << d
    c1, c2 = divmod(c, w)
    l1, l2 = divmod(ell, w)
    l2p = min(w, ell)
    bp = min(b + c2, 1)
    s = min(c2, l2)
    t = max(c2, l2)
    va, vd = tree.alpha[v], tree.delta[v]
    mu = list(phi_vec[:d])
    nu = phi_vec[d:]
    shifts = table.phi_alpha[v]
    height = 1 << (nv - d)
    for i in range(c1 + bp - 1):
        l2x(va, mu, w, w, 0, view.sub(w * i, 1, w), table)
        k = ruler_delta(i)
        for r in range(d):
            mu[r] ^= shifts[r][k]
        ctr.additions += d
    if bp == 0:
        l2x(va, mu, w, w, 0, view.sub(w * (c1 - 1), 1, w), table)
    for j in range(c2, t):
        l2x(vd, nu, c1, l1 + 1, bp, view.sub(j, w, height), table)
    for j in range(t, l2p):
        l2x(vd, nu, c1, l1, bp, view.sub(j, w, height), table)
    if bp == 1:
        l2x(va, mu, c2, l2p, b, view.sub(w * c1, 1, w), table)
    for j in range(s):
        l2x(vd, nu, c1 + 1, l1 + 1, 0, view.sub(j, w, height), table)
    for j in range(s, c2):
        l2x(vd, nu, c1 + 1, l1, 0, view.sub(j, w, height), table)


def x2l(v, phi_vec, c, ell, view, table):
    """Graded coefficients to the first c Lagrange values, in place.

    The view spans the full 2^n_v scratch; entries 0..ell-1 hold h_i, and
    afterwards entries 0..c-1 hold the values f_i.  c may exceed ell.
    """
    tree = table.tree
    nv = tree.n_of(v)
    if not 1 <= c <= (1 << nv):
        raise ValueError(f"c {c} out of range at a {nv}-dim vertex")
    _check_args(tree, v, phi_vec, ell, view, True)
    field = table.field
    ctr = view.buffer.counter
    if tree.is_leaf(v):
        ph = phi_vec[0]
        if c == 2 and ell == 2:
            view[0] ^= field.mul(ph, view[1])
            view[1] ^= view[0]
            ctr.additions += 2
            ctr.multiplications += 1
        elif c == 1 and ell == 2:
            view[0] ^= field.mul(ph, view[1])
            ctr.additions += 1
            ctr.multiplications += 1
        elif c == 2 and ell == 1:
            view[1] = view[0]
        return
    d = tree.d_of(v)
    w = 1 << d
    c1, c2 = _split_ceil(c, w)
    l1, l2 = divmod(ell, w)
    l2p = min(w, ell)
    va, vd = tree.alpha[v], tree.delta[v]
    mu = list(phi_vec[:d])
    nu = phi_vec[d:]
    shifts = table.phi_alpha[v]
    height = 1 << (nv - d)
    for j in range(l2):
        x2l(vd, nu, c1 + 1, l1 + 1, view.sub(j, w, height), table)
    for j in range(l2, l2p):
        x2l(vd, nu, c1 + 1, l1, view.sub(j, w, height), table)
    for i in range(c1):
        x2l(va, mu, w, l2p, view.sub(w * i, 1, w), table)
        k = ruler_delta(i)
        for r in range(d):
            mu[r] ^= shifts[r][k]
        ctr.additions += d
    x2l(va, mu, c2, l2p, view.sub(w * c1, 1, w), table)


def taylor_expand(t, ell, view):
    """Coefficients of the expansion at x^t - x, in place.

    Both loop directions run high to low: within a block the target range
    overlaps the source range shifted by half a block, and the tail of the
    source must be consumed before it is overwritten.
    """
    if t < 2:
        raise ValueError("expansion point requires t >= 2")
    if len(view) != ell:
        raise ValueError(f"view length {len(view)}, expected {ell}")
    ctr = view.buffer.counter
    for k in range(_clog2(-(-ell // t)) - 1, -1, -1):
        blk = t << k
        l1 = ell // (2 * blk)
        l2 = ell - 2 * blk * l1
        half = 1 << k
        for i in range(l1):
            base = 2 * blk * i
            for j in range(blk - 1, -1, -1):
                view[base + half + j] ^= view[base + blk + j]
            ctr.additions += blk
        base = 2 * blk * l1
        for j in range(l2 - blk - 1, -1, -1):
            view[base + half + j] ^= view[base + blk + j]
            ctr.additions += 1


def taylor_inverse(t, ell, view):
    """Inverse of taylor_expand: same updates, both loop orders reversed."""
    if t < 2:
        raise ValueError("expansion point requires t >= 2")
    if len(view) != ell:
        raise ValueError(f"view length {len(view)}, expected {ell}")
    ctr = view.buffer.counter
    for k in range(_clog2(-(-ell // t))):
        blk = t << k
        l1 = ell // (2 * blk)
        l2 = ell - 2 * blk * l1
        half = 1 << k
        for i in range(l1):
            base = 2 * blk * i
            for j in range(blk):
                view[base + half + j] ^= view[base + blk + j]
            ctr.additions += blk
        base = 2 * blk * l1
        for j in range(l2 - blk):
            view[base + half + j] ^= view[base + blk + j]
            ctr.additions += 1


def x2m(v, ell, view, table):
    """Twisted graded coefficients to monomial coefficients, in place."""
    tree = table.tree
    _check_args(tree, v, None, ell, view, False)
    if ell <= 2:
        return
    d = tree.d_of(v)
    w = 1 << d
    l1, l2 = _split_ceil(ell, w)
    l2p = min(w, ell)
    va, vd = tree.alpha[v], tree.delta[v]
    for i in range(l1):
        x2m(va, w, view.sub(w * i, 1, w), table)
    x2m(va, l2, view.sub(w * l1, 1, l2), table)
    for j in range(l2):
        x2m(vd, l1 + 1, view.sub(j, w, l1 + 1), table)
    for j in range(l2, l2p):
        x2m(vd, l1, view.sub(j, w, l1), table)
    if l1 != 0 and table.delta_head(v) != 1:
        field = table.field
        ctr = view.buffer.counter
        step = table.delta_head_inv(v)
        acc = step
        for i in range(1, l1):
            base = w * i
            for j in range(w):
                view[base + j] = field.mul(acc, view[base + j])
            ctr.multiplications += w
            acc = field.mul(acc, step)
            ctr.multiplications += 1
        base = w * l1
        for j in range(l2):
            view[base + j] = field.mul(acc, view[base + j])
        ctr.multiplications += l2
    taylor_inverse(w, ell, view)


def m2x(v, ell, view, table):
    """Inverse of x2m: expand, scale blocks up, then columns and rows."""
    tree = table.tree
    _check_args(tree, v, None, ell, view, False)
    if ell <= 2:
        return
    d = tree.d_of(v)
    w = 1 << d
    l1, l2 = _split_ceil(ell, w)
    l2p = min(w, ell)
    va, vd = tree.alpha[v], tree.delta[v]
    taylor_expand(w, ell, view)
    if l1 != 0 and table.delta_head(v) != 1:
        field = table.field
        ctr = view.buffer.counter
        step = table.delta_head(v)
        acc = step
        for i in range(1, l1):
            base = w * i
            for j in range(w):
                view[base + j] = field.mul(acc, view[base + j])
            ctr.multiplications += w
            acc = field.mul(step, acc)
            ctr.multiplications += 1
        base = w * l1
        for j in range(l2):
            view[base + j] = field.mul(acc, view[base + j])
        ctr.multiplications += l2
    for j in range(l2):
        m2x(vd, l1 + 1, view.sub(j, w, l1 + 1), table)
    for j in range(l2, l2p):
        m2x(vd, l1, view.sub(j, w, l1), table)
    for i in range(l1):
        m2x(va, w, view.sub(w * i, 1, w), table)
    m2x(va, l2, view.sub(w * l1, 1, l2), table)


def scale_by_powers(field, view, w):
    """a_i <- w^i a_i with one running power; the substitution x -> wx.

    Multiplications land in the twist counter: this is the move that turns
    the twisted graded basis into the plain one, priced separately.
    """
    if w == 0:
        raise ValueError("scale factor must be nonzero")
    ell = len(view)
    if w == 1 or ell < 2:
        return
    ctr = view.buffer.counter
    view[1] = field.mul(w, view[1])
    ctr.twist_multiplications += 1
    acc = w
    for i in range(2, ell):
        acc = field.mul(acc, w)
        view[i] = field.mul(acc, view[i])
        ctr.twist_multiplications += 2


def convert(field, kind_from, kind_to, beta, tree, lam, ell, coeffs, table=None):
    """Convert between two named bases; returns (coefficients, OpCounter).

    All pairs route through the graded basis.  The substitution needed by
    the monomial legs is counted in twist_multiplications; lam is ignored
    by those legs, which carry no evaluation shift.
    """
    for kind in (kind_from, kind_to):
        if kind not in BASIS_KINDS:
            raise ValueError(f"unknown basis kind {kind!r}")
    if table is None:
        table = build_tables(field, tree, beta)
    n = tree.size[0]
    if not 1 <= ell <= (1 << n):
        raise ValueError(f"ell {ell} out of range for dimension {n}")
    coeffs = list(coeffs)
    if len(coeffs) != ell:
        raise ValueError(f"expected {ell} coefficients, got {len(coeffs)}")
    counter = OpCounter()
    if kind_from == kind_to:
        return coeffs, counter
    phi_vec = None
    if kind_from != "monomial" or kind_to != "monomial":
        phi_vec = initial_phi_vector(field, tree, table.bases, lam)

    if kind_from == "lch":
        work = coeffs
    elif kind_from == "newton":
        buf = CoeffBuffer(coeffs, counter)
        n2x(0, phi_vec, ell, buf.view(), table)
        work = buf.data
    elif kind_from == "lagrange":
        buf = CoeffBuffer(coeffs + [0] * ((1 << n) - ell), counter)
        l2x(0, phi_vec, ell, ell, 0, buf.view(), table)
        work = buf.data[:ell]
    else:
        buf = CoeffBuffer(coeffs, counter)
        scale_by_powers(field, buf.view(), beta[0])
        m2x(0, ell, buf.view(), table)
        work = buf.data

    if kind_to == "lch":
        return work, counter
    if kind_to == "newton":
        buf = CoeffBuffer(work, counter)
        x2n(0, phi_vec, ell, buf.view(), table)
        return buf.data, counter
    if kind_to == "lagrange":
        buf = CoeffBuffer(work + [0] * ((1 << n) - ell), counter)
        x2l(0, phi_vec, ell, ell, buf.view(), table)
        return buf.data[:ell], counter
    buf = CoeffBuffer(work, counter)
    x2m(0, ell, buf.view(), table)
    scale_by_powers(field, buf.view(), field.inv(beta[0]))
    return buf.data, counter


class CountModel:
    """Exact operation counts replayed on lengths alone.

    Counts are data-independent: the recursion shape depends only on the
    vertex and length parameters, and the scaling guards only on stored
    table heads.  Memoization makes whole-range ell sweeps cheap where
    executing the transforms would not be.
    """

    def __init__(self, table):
        self.table = table
        self.tree = table.tree
        self._nx = {}
        self._l2x = {}
        self._x2l = {}
        self._xm = {}

    def nx(self, v, ell):
        """(additions, multiplications) of n2x and of x2n."""
        key = (v, ell)
        hit = self._nx.get(key)
        if hit is not None:
            return hit
        tree = self.tree
        if tree.is_leaf(v):
            hit = (1, 1) if ell == 2 else (0, 0)
        else:
            d = tree.d_of(v)
            w = 1 << d
            l1, l2 = _split_ceil(ell, w)
            l2p = min(w, ell)
            va, vd = tree.alpha[v], tree.delta[v]
            a = m = 0
            if l1:
                ra, rm = self.nx(va, w)
                a += l1 * (ra + d)
                m += l1 * rm
            ra, rm = self.nx(va, l2)
            a += ra
            m += rm
            if l2:
                ca, cm = self.nx(vd, l1 + 1)
                a += l2 * ca
                m += l2 * cm
            if l2p > l2:
                ca, cm = self.nx(vd, l1)
                a += (l2p - l2) * ca
                m += (l2p - l2) * cm
            hit = (a, m)
        self._nx[key] = hit
        return hit

    def l2x(self, v, c, ell, b):
        key = (v, c, ell, b)
        hit = self._l2x.get(key)
        if hit is not None:
            return hit
        tree = self.tree
        if tree.is_leaf(v):
            if c == 2 or (c == 1 and ell == 2 and b == 1):
                hit = (2, 1)
            elif ell == 2 and (c == 1 or c == 0):
                hit = (1, 1)
            else:
                hit = (0, 0)
        else:
            d = tree.d_of(v)
            w = 1 << d
            c1, c2 = divmod(c, w)
            l1, l2 = divmod(ell, w)
            l2p = min(w, ell)
            bp = min(b + c2, 1)
            s = min(c2, l2)
            t = max(c2, l2)
            va, vd = tree.alpha[v], tree.delta[v]
            a = m = 0
            rows = c1 + bp - 1
            if rows > 0:
                ra, rm = self.l2x(va, w, w, 0)
                a += rows * (ra + d)
                m += rows * rm
            if bp == 0:
                ra, rm = self.l2x(va, w, w, 0)
                a += ra
                m += rm
            if t > c2:
                ca, cm = self.l2x(vd, c1, l1 + 1, bp)
                a += (t - c2) * ca
                m += (t - c2) * cm
            if l2p > t:
                ca, cm = self.l2x(vd, c1, l1, bp)
                a += (l2p - t) * ca
                m += (l2p - t) * cm
            if bp == 1:
                ra, rm = self.l2x(va, c2, l2p, b)
                a += ra
                m += rm
            if s > 0:
                ca, cm = self.l2x(vd, c1 + 1, l1 + 1, 0)
                a += s * ca
                m += s * cm
            if c2 > s:
                ca, cm = self.l2x(vd, c1 + 1, l1, 0)
                a += (c2 - s) * ca
                m += (c2 - s) * cm
            hit = (a, m)
        self._l2x[key] = hit
        return hit

    def x2l(self, v, c, ell):
        key = (v, c, ell)
        hit = self._x2l.get(key)
        if hit is not None:
            return hit
        tree = self.tree
        if tree.is_leaf(v):
            if c == 2 and ell == 2:
                hit = (2, 1)
            elif c == 1 and ell == 2:
                hit = (1, 1)
            else:
                hit = (0, 0)
        else:
            d = tree.d_of(v)
            w = 1 << d
            c1, c2 = _split_ceil(c, w)
            l1, l2 = divmod(ell, w)
            l2p = min(w, ell)
            va, vd = tree.alpha[v], tree.delta[v]
            a = m = 0
            if l2:
                ca, cm = self.x2l(vd, c1 + 1, l1 + 1)
                a += l2 * ca
                m += l2 * cm
            if l2p > l2:
                ca, cm = self.x2l(vd, c1 + 1, l1)
                a += (l2p - l2) * ca
                m += (l2p - l2) * cm
            if c1:
                ra, rm = self.x2l(va, w, l2p)
                a += c1 * (ra + d)
                m += c1 * rm
            ra, rm = self.x2l(va, c2, l2p)
            a += ra
            m += rm
            hit = (a, m)
        self._x2l[key] = hit
        return hit

    def taylor(self, t, ell):
        """Additions of taylor_expand and of taylor_inverse."""
        adds = 0
        for k in range(_clog2(-(-ell // t))):
            blk = t << k
            l1 = ell // (2 * blk)
            l2 = ell - 2 * blk * l1
            adds += blk * l1 + max(l2 - blk, 0)
        return adds

    def xm(self, v, ell):
        """(additions, multiplications) of x2m and of m2x."""
        key = (v, ell)
        hit = self._xm.get(key)
        if hit is not None:
            return hit
        if ell <= 2:
            hit = (0, 0)
        else:
            tree = self.tree
            d = tree.d_of(v)
            w = 1 << d
            l1, l2 = _split_ceil(ell, w)
            l2p = min(w, ell)
            va, vd = tree.alpha[v], tree.delta[v]
            a = m = 0
            if l1:
                ra, rm = self.xm(va, w)
                a += l1 * ra
                m += l1 * rm
            ra, rm = self.xm(va, l2)
            a += ra
            m += rm
            if l2:
                ca, cm = self.xm(vd, l1 + 1)
                a += l2 * ca
                m += l2 * cm
            if l2p > l2:
                ca, cm = self.xm(vd, l1)
                a += (l2p - l2) * ca
                m += (l2p - l2) * cm
            if l1 != 0 and self.table.delta_head(v) != 1:
                m += (l1 - 1) * (w + 1) + l2
            a += self.taylor(w, ell)
            hit = (a, m)
        self._xm[key] = hit
        return hit

    def twist(self, ell):
        """Multiplications of the x -> beta_0 x substitution."""
        if self.table.beta[0] == 1 or ell < 2:
            return 0
        return 2 * ell - 3

    def convert(self, kind_from, kind_to, ell):
        """(additions, multiplications, twist_multiplications) of convert()."""
        for kind in (kind_from, kind_to):
            if kind not in BASIS_KINDS:
                raise ValueError(f"unknown basis kind {kind!r}")
        n = self.tree.size[0]
        if not 1 <= ell <= (1 << n):
            raise ValueError(f"ell {ell} out of range for dimension {n}")
        if kind_from == kind_to:
            return (0, 0, 0)
        a = m = tw = 0
        for kind, into in ((kind_from, False), (kind_to, True)):
            if kind == "lch":
                continue
            if kind == "newton":
                da, dm = self.nx(0, ell)
            elif kind == "lagrange":
                da, dm = self.l2x(0, ell, ell, 0) if not into else self.x2l(0, ell, ell)
            else:
                da, dm = self.xm(0, ell)
                tw += self.twist(ell)
            a += da
            m += dm
        return (a, m, tw)
