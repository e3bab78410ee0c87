"""Exact symbolic arithmetic in the dense *-subalgebra spanned by the
s_mu s_nu* over a finite k-graph.

Elements are finite linear combinations of generators s_mu s_nu* with
s(mu) = s(nu), coefficients in the Gaussian rationals.  Products use the
common-minimal-extension formula

    s_nu* s_alpha = sum over { (sigma, rho) : nu sigma = alpha rho,
                               d(nu sigma) = d(nu) v d(alpha) }  of  s_sigma s_rho*,

and equality is decided by rewriting both sides to a common level with the
defect relation s_mu s_nu* = sum over lambda in s(mu)Lambda^{<=c} of
s_{mu lambda} s_{nu lambda}*, then comparing coefficient maps: at a common
level the pairs act as matrix units, so the comparison is sound and exact.
"""

from dataclasses import dataclass, field

from . import degrees as dg
from .errors import GraphMismatch, NotAGraphTrace
from .gaussian import ONE, QQi, ZERO, as_qqi


@dataclass(eq=False)
class AlgebraElement:
    graph: object
    terms: dict = field(default_factory=dict)  # (mu: Path, nu: Path) -> QQi

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    # --- constructors ---------------------------------------------------------

    @staticmethod
    def zero(graph):
        return AlgebraElement(graph, {})

    @staticmethod
    def generator(graph, mu, nu, coeff=ONE):
        if mu.source != nu.source:
            raise GraphMismatch(f"s({mu!r}) != s({nu!r}); not a spanning generator")
        return AlgebraElement(graph, {(mu, nu): as_qqi(coeff)})

    @staticmethod
    def vertex_projection(graph, v):
        p = graph.vertex_path(v)
        return AlgebraElement(graph, {(p, p): ONE})

    @staticmethod
    def isometry(graph, path):
        """s_path = s_path s_{s(path)}*."""
        return AlgebraElement.generator(graph, path, graph.vertex_path(path.source))

    @staticmethod
    def coisometry(graph, path):
        """s_path*."""
        return AlgebraElement.generator(graph, graph.vertex_path(path.source), path)

    # --- linear structure -------------------------------------------------------

    def _check(self, other):
        if self.graph is not other.graph:
            raise GraphMismatch("elements live over different graphs")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, ZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return AlgebraElement(self.graph, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.graph, {k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = as_qqi(c)
        if not c:
            return AlgebraElement.zero(self.graph)
        return AlgebraElement(self.graph, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, AlgebraElement):
            return NotImplemented
        return self.scale(c)

    def adjoint(self):
        return AlgebraElement(self.graph, {
            (nu, mu): c.conjugate() for (mu, nu), c in self.terms.items()
        })

    # --- multiplication -----------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        g = self.graph
        out = {}
        for (mu, nu), c1 in self.terms.items():
            for (al, be), c2 in other.terms.items():
                c = c1 * c2
                for sigma, rho in _common_extensions(g, nu, al):
                    key = (g.compose(mu, sigma), g.compose(be, rho))
                    s = out.get(key, ZERO) + c
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return AlgebraElement(g, out)

    # --- canonicalisation and equality ---------------------------------------------

    def graded_part(self, n):
        """Component of grade n = d(mu) - d(nu) (the n-th spectral subspace
        of the gauge action); the gauge-invariant part is graded_part(0)."""
        return AlgebraElement(self.graph, {
            (mu, nu): c for (mu, nu), c in self.terms.items()
            if dg.sub(mu.degree, nu.degree) == n
        })

    def gauge_expectation(self):
        """Keep exactly the terms with d(mu) = d(nu)."""
        return self.graded_part(dg.zero(self.graph.k))

    def grades(self):
        return sorted({dg.sub(mu.degree, nu.degree) for mu, nu in self.terms})

    def diagonal_expectation(self):
        """Keep exactly the terms with mu = nu (well defined: the defect
        relation rewrites diagonal terms to diagonal terms and off-diagonal
        to off-diagonal)."""
        return AlgebraElement(self.graph, {
            (mu, nu): c for (mu, nu), c in self.terms.items() if mu == nu
        })

    def ck4_expand(self, level):
        """Rewrite every term s_mu s_nu* as the sum of s_{mu lam} s_{nu lam}*
        over lam in s(mu)Lambda^{<= level}; value preserving."""
        g = self.graph
        out = {}
        for (mu, nu), c in self.terms.items():
            for lam in g.lambda_le(mu.source, level):
                key = (g.compose(mu, lam), g.compose(nu, lam))
                s = out.get(key, ZERO) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return AlgebraElement(g, out)

    def canonical_terms(self, mu_target=None):
        """Coefficient map after expanding, grade by grade, every term to the
        componentwise-max mu-side degree (so all pairs lie in a common
        Lambda^{<=M} x Lambda^{<=M-n}, where they act as matrix units)."""
        g = self.graph
        zero = dg.zero(g.k)
        by_grade = {}
        for (mu, nu), c in self.terms.items():
            by_grade.setdefault(dg.sub(mu.degree, nu.degree), []).append(((mu, nu), c))
        out = {}
        for grade, items in by_grade.items():
            m1 = zero
            for (mu, _), _c in items:
                m1 = dg.join(m1, mu.degree)
            if mu_target is not None:
                m1 = dg.join(m1, mu_target.get(grade, zero))
            for (mu, nu), c in items:
                for lam in g.lambda_le(mu.source, dg.sub(m1, mu.degree)):
                    key = (g.compose(mu, lam), g.compose(nu, lam))
                    s = out.get(key, ZERO) + c
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    def equals(self, other):
        """Exact equality in the algebra (not of representations)."""
        self._check(other)
        zero = dg.zero(self.graph.k)
        targets = {}
        for elt in (self, other):
            for (mu, nu) in elt.terms:
                grade = dg.sub(mu.degree, nu.degree)
                targets[grade] = dg.join(targets.get(grade, zero), mu.degree)
        return self.canonical_terms(targets) == other.canonical_terms(targets)

    def is_zero(self):
        return not self.canonical_terms()

    # --- misc -----------------------------------------------------------------------

    def local_unit(self):
        """Sum of the distinct range projections p_{r(mu)} + ... acting as a
        unit on this element from the left."""
        verts = {mu.range for mu, _ in self.terms}
        out = AlgebraElement.zero(self.graph)
        for v in sorted(verts):
            out = out + AlgebraElement.vertex_projection(self.graph, v)
        return out

    def to_json(self):
        items = []
        for (mu, nu), c in sorted(self.terms.items(),
                                  key=lambda kv: (kv[0][0].edges, kv[0][1].edges)):
            entry = {"mu": list(mu.edges), "nu": list(nu.edges),
                     "re": str(c.re), "im": str(c.im)}
            if mu.is_vertex and nu.is_vertex:
                entry["vertex"] = mu.range  # both legs degenerate; record the base
            items.append(entry)
        return items

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (mu, nu), c in list(self.terms.items())[:6]:
            bits.append(f"{c!r}*s[{'.'.join(mu.edges) or mu.range}]"
                        f"s[{'.'.join(nu.edges) or nu.range}]*")
        more = "" if len(self.terms) <= 6 else f" (+{len(self.terms) - 6} terms)"
        return " + ".join(bits) + more


def element_from_json(graph, items):
    """Inverse of AlgebraElement.to_json."""
    from .errors import KGraphError

    out = AlgebraElement.zero(graph)
    for entry in items:
        mu_ids, nu_ids = entry["mu"], entry["nu"]
        if not mu_ids and not nu_ids:
            v = entry.get("vertex")
            if v is None:
                raise KGraphError("'vertex' key required when both edge lists are empty")
            mu = nu = graph.vertex_path(v)
        elif not mu_ids:
            nu = path_from_edge_ids(graph, nu_ids)
            mu = graph.vertex_path(nu.source)
        elif not nu_ids:
            mu = path_from_edge_ids(graph, mu_ids)
            nu = graph.vertex_path(mu.source)
        else:
            mu = path_from_edge_ids(graph, mu_ids)
            nu = path_from_edge_ids(graph, nu_ids)
        c = QQi(entry["re"], entry["im"])
        out = out + AlgebraElement.generator(graph, mu, nu, c)
    return out


def path_from_edge_ids(graph, ids):
    path = graph.edge_path(ids[0])
    for eid in ids[1:]:
        path = graph.compose(path, graph.edge_path(eid))
    return path


def _common_extensions(graph, nu, alpha):
    """Pairs (sigma, rho) with nu sigma = alpha rho of degree d(nu) v d(alpha);
    the expansion of s_nu* s_alpha.  Memoised per graph."""
    if nu.range != alpha.range:
        return ()
    cache = getattr(graph, "_ce_cache", None)
    if cache is None:
        cache = graph._ce_cache = {}
    key = (nu, alpha)
    hit = cache.get(key)
    if hit is not None:
        return hit
    top = dg.join(nu.degree, alpha.degree)
    zero = dg.zero(graph.k)
    out = []
    for lam in graph.paths_with_range(nu.range, top):
        if graph.factor(lam, zero, nu.degree) != nu:
            continue
        if graph.factor(lam, zero, alpha.degree) != alpha:
            continue
        out.append((graph.factor(lam, nu.degree, top),
                    graph.factor(lam, alpha.degree, top)))
    out = tuple(out)
    cache[key] = out
    return out


def have_common_extension(graph, mu, nu):
    """Whether the range projections of mu and nu fail to be orthogonal."""
    from .errors import RangeMismatch

    if mu.range != nu.range:
        raise RangeMismatch(f"r({mu!r}) != r({nu!r})")
    return bool(_common_extensions(graph, mu, nu))


# --- functionals -------------------------------------------------------------------


def tau_g(element, trace):
    """The gauge-invariant functional attached to a graph trace g:
    s_mu s_nu* maps to delta_{mu,nu} g(s(mu)), extended linearly.  Well
    defined precisely because g satisfies the graph-trace equation."""
    if trace.graph is not element.graph:
        raise GraphMismatch("trace and element live over different graphs")
    if not trace.verified:
        raise NotAGraphTrace("vertex weighting failed verification")
    total = ZERO
    for (mu, nu), c in element.terms.items():
        if mu == nu:
            total = total + c * QQi(trace.values[mu.source])
    return total
