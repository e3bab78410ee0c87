"""The spinor module over the gauge-invariant core, symbolically.

Elements are vectors of 2^[k/2] algebra elements with the core-valued
inner product (x|y) = sum_j Phi(x_j* y_j), rank-one operators
Theta_{x,y} z = x (y|z), the graded Dirac action D x = sum_n gamma(in) x_n,
and the finite-sum trace functional evaluated on rank-one operators:

    trace(Theta_{x,y}) = sum over pairs (alpha, beta) with s(alpha) = s(beta)
    and d(alpha) ^ d(beta) = 0 of (1/#{paths of degree d(beta) out of
    s(alpha)}) <s_a s_b*, Theta_{x,y} s_a s_b*>,

which on finite acyclic graphs is a finite sum equal to tau_g(y* x).
"""

from dataclasses import dataclass
from fractions import Fraction

from . import degrees as dg
from .algebra import AlgebraElement, tau_g
from .cliffords import clifford_multiplier_exact
from .errors import GraphMismatch, NotFinitelySummable
from .gaussian import QQi, ZERO


@dataclass(eq=False)
class ModuleElement:
    graph: object
    components: tuple  # 2^[k/2] AlgebraElements

    @staticmethod
    def zero(graph, spinor_dim):
        return ModuleElement(graph, tuple(AlgebraElement.zero(graph)
                                          for _ in range(spinor_dim)))

    @staticmethod
    def embed(graph, a, spinor_dim, slot=0):
        comps = [AlgebraElement.zero(graph) for _ in range(spinor_dim)]
        comps[slot] = a
        return ModuleElement(graph, tuple(comps))

    @property
    def spinor_dim(self):
        return len(self.components)

    def _check(self, other):
        if self.graph is not other.graph or self.spinor_dim != other.spinor_dim:
            raise GraphMismatch("module elements are incompatible")

    def __add__(self, other):
        self._check(other)
        return ModuleElement(self.graph, tuple(a + b for a, b in
                                               zip(self.components, other.components)))

    def __sub__(self, other):
        self._check(other)
        return ModuleElement(self.graph, tuple(a - b for a, b in
                                               zip(self.components, other.components)))

    def scale(self, c):
        return ModuleElement(self.graph, tuple(a.scale(c) for a in self.components))

    def right_mult(self, f):
        """Right action of the core (componentwise right multiplication)."""
        return ModuleElement(self.graph, tuple(a * f for a in self.components))

    def left_mult(self, a):
        return ModuleElement(self.graph, tuple(a * x for x in self.components))

    def is_zero(self):
        return all(a.is_zero() for a in self.components)

    def graded_part(self, n):
        return ModuleElement(self.graph,
                             tuple(a.graded_part(n) for a in self.components))

    def grades(self):
        out = set()
        for a in self.components:
            out.update(a.grades())
        return sorted(out)


def inner_product_core(x, y):
    """(x|y) = sum_j Phi(x_j* y_j); conjugate linear in the first slot."""
    x._check(y)
    out = AlgebraElement.zero(x.graph)
    for a, b in zip(x.components, y.components):
        out = out + (a.adjoint() * b).gauge_expectation()
    return out


def theta_apply(x, y, z):
    """Rank-one module operator: Theta_{x,y} z = x (y|z)."""
    return x.right_mult(inner_product_core(y, z))


def dirac_apply(x, rep):
    """D x = sum_n gamma(in) x_n: each grade-n part is hit by the exact
    Clifford multiplier for the vector in."""
    if rep.dim != x.spinor_dim:
        raise GraphMismatch("spinor dimension does not match the Clifford rep")
    out = ModuleElement.zero(x.graph, x.spinor_dim)
    for n in x.grades():
        mat = clifford_multiplier_exact(rep, n)
        xn = x.graded_part(n)
        comps = list(out.components)
        for a in range(x.spinor_dim):
            acc = comps[a]
            for b in range(x.spinor_dim):
                c = mat[a][b]
                if c:
                    acc = acc + xn.components[b].scale(c)
            comps[a] = acc
        out = ModuleElement(x.graph, tuple(comps))
    return out


# --- the finite-rank block identity -------------------------------------------


def finite_rank_block_apply(graph, v, n1, n2, a):
    """Apply T_{v,n1,n2} = sum over alpha in vLambda^{n1}, beta in
    Lambda^{-n2} s(alpha) of (1/#Lambda^{-n2}s(beta)) Theta_{u,u} with
    u = s_alpha s_beta*, at the algebra level (the module action is the
    diagonal extension).  For admissible splits n = n1 + n2 (n1 >= 0 >= n2)
    this reproduces p_v Phi_n."""
    if not dg.is_nonneg(n1) or not dg.is_nonneg(dg.neg(n2)):
        raise ValueError("need n1 >= 0 and n2 <= 0")
    out = AlgebraElement.zero(graph)
    for alpha in graph.paths_with_range(v, n1):
        betas = graph.paths_with_source(alpha.source, dg.neg(n2))
        if not betas:
            continue
        weight = QQi(Fraction(1, len(betas)))
        for beta in betas:
            u = AlgebraElement.generator(graph, alpha, beta)
            # Theta_{u,u} a = u Phi(u* a)
            out = out + (u * (u.adjoint() * a).gauge_expectation()).scale(weight)
    return out


def projected_graded_part(graph, v, n, a):
    """p_v Phi_n(a): the comparison side of the finite-rank identity."""
    return AlgebraElement.vertex_projection(graph, v) * a.graded_part(n)


def safe_split(graph, n, cap=None, max_pad=6, min_pad=0):
    """An admissible split n = n1 + n2 (n1 >= 0 >= n2) for which the
    finite-rank identity T_{v,n1,n2} = p_v Phi_n holds on all generators up
    to the degree cap.

    The identity can fail on truncations: the reconstruction needs, for each
    generator s_mu s_nu* carrying grade n, (a) that the defect sets
    s(mu)Lambda^{<=J-d(mu)} (J = n1 v d(mu)) contain no early-maximal paths,
    and (b) that every degree-n1 path into r(mu) admits a degree(-n2)
    continuation out of its source.  Graphs without sinks or sources accept
    the minimal split n1 = n v 0; otherwise the split is padded until both
    conditions hold for every generator with content."""
    k = graph.k
    cap = cap or (2,) * k

    contents = []  # (r(mu), s(mu), d(mu)) for generators of grade n
    for d_mu in dg.box(cap):
        d_nu = dg.sub(d_mu, n)
        if not dg.is_nonneg(d_nu) or not dg.leq(d_nu, cap):
            continue
        for v in graph.vertices:
            for mu in graph.paths_with_range(v, d_mu):
                if graph.paths_with_source(mu.source, d_nu):
                    contents.append((v, mu.source, d_mu))
    if not contents:
        return dg.pos_part(n), dg.neg_part(n)  # both sides vanish identically

    for pad in range(min_pad, max_pad + 1):
        n1 = dg.add(dg.pos_part(n), (pad,) * k)
        n2 = dg.sub(n, n1)
        ok = True
        for v, w, d_mu in contents:
            m = dg.sub(dg.join(n1, d_mu), d_mu)
            if any(p.degree != m for p in graph.lambda_le(w, m)):
                ok = False
                break
            if any(not graph.paths_with_source(alpha.source, dg.neg(n2))
                   for alpha in graph.paths_with_range(v, n1)):
                ok = False
                break
        if ok:
            return n1, n2
    raise ValueError(f"no safe split of {n} within pad {max_pad}")


# --- the trace on rank-one operators ---------------------------------------------


def enumerate_all_paths(graph, degree_bound=None):
    """Every path of the graph, grouped by source vertex.  Requires an
    acyclic skeleton unless a componentwise degree bound is supplied."""
    if degree_bound is None:
        if graph.has_cycle():
            raise NotFinitelySummable(
                "cyclic graph: pass an explicit truncation bound")
        degrees = graph.nonempty_degrees()
    else:
        degrees = graph.nonempty_degrees(bound=degree_bound)
    by_source = {v: [] for v in graph.vertices}
    for d in degrees:
        for v in graph.vertices:
            for p in graph.paths_with_range(v, d):
                by_source[p.source].append(p)
    return by_source


def min_source_pairs(graph, degree_bound=None):
    """Pairs (alpha, beta) with s(alpha) = s(beta) and
    d(alpha) ^ d(beta) = 0 (the index set of the trace net)."""
    zero = dg.zero(graph.k)
    by_source = enumerate_all_paths(graph, degree_bound)
    for v, paths in by_source.items():
        for alpha in paths:
            for beta in paths:
                if dg.meet(alpha.degree, beta.degree) == zero:
                    yield alpha, beta


def tau_tilde_rank_one(x, y, trace, degree_bound=None, check=True):
    """Evaluate the trace functional on Theta_{x,y} as the finite sum of the
    vector states over minimal source pairs; equals tau_g(y* x) and raises
    ArithmeticError if the two exact values ever disagree."""
    x._check(y)
    graph = x.graph
    total = ZERO
    for alpha, beta in min_source_pairs(graph, degree_bound):
        weight = QQi(Fraction(
            1, len(graph.paths_with_source(alpha.source, beta.degree))))
        u = AlgebraElement.generator(graph, alpha, beta)
        u_star = u.adjoint()
        for xj, yj in zip(x.components, y.components):
            val = tau_g(u_star * (xj * (yj.adjoint() * u).gauge_expectation()),
                        trace)
            total = total + weight * val
    if check and degree_bound is None:
        direct = ZERO
        for xj, yj in zip(x.components, y.components):
            direct = direct + tau_g(yj.adjoint() * xj, trace)
        if total != direct:
            raise ArithmeticError(
                f"rank-one trace identity violated: {total} != {direct}")
    return total
