"""Finite-dimensional faithful representation of the algebra of an acyclic
graph, via the GNS construction for a faithful graph trace.

For a finite acyclic graph the algebra is finite dimensional and the pairs
(alpha, beta) with alpha in Lambda^{<=M1}, beta in Lambda^{<=M1-n},
common source and grade n form an orthogonal basis of the grade-n component
under <a, b> = tau(b* a): distinct maximal paths have orthogonal range
projections, so the Gram matrix is diagonal with entries g(s(beta)).

This gives exact matrices for left multiplication, hence operator norms
(the GNS representation of a faithful trace on a finite-dimensional algebra
is faithful, so the spectral norm is the C*-norm).  The main use is
checking norm identities for Dirac commutators: the gauge Dirac scales the
grade-n subspace by gamma(in), so

    || [D, s_alpha s_beta*] ||   =  |d(alpha) - d(beta)| * ||s_alpha s_beta*||
    || [|D|, s_alpha s_beta*] || <= |d(alpha) - d(beta)| * ||s_alpha s_beta*||

with |D| acting as |n| on grade n.
"""

import math

import numpy as np

from . import degrees as dg
from .algebra import AlgebraElement
from .errors import NotFinitelySummable


class GNSRepresentation:
    def __init__(self, graph, trace):
        if graph.has_cycle():
            raise NotFinitelySummable("the GNS space is infinite dimensional "
                                      "on cyclic graphs")
        if not trace.faithful:
            raise ValueError("a faithful graph trace is required")
        self.graph = graph
        self.trace = trace
        degrees = graph.nonempty_degrees()
        self.top = degrees[-1]
        for d in degrees:
            self.top = dg.join(self.top, d)
        self.basis = []          # (alpha, beta) pairs
        self.index = {}
        self.norms = []          # GNS norms sqrt(g(s(beta)))
        self._build_basis()

    def _maximal_paths(self, cap):
        out = []
        for v in self.graph.vertices:
            out.extend(self.graph.lambda_le(v, cap))
        return out

    def _build_basis(self):
        grades = set()
        for d1 in self.graph.nonempty_degrees():
            for d2 in self.graph.nonempty_degrees():
                grades.add(dg.sub(d1, d2))
        for n in sorted(grades):
            m2 = dg.sub(self.top, n)
            if not dg.is_nonneg(m2):
                continue
            alphas = self._maximal_paths(self.top)
            betas = {}
            for beta in self._maximal_paths(m2):
                betas.setdefault(beta.source, []).append(beta)
            for alpha in alphas:
                for beta in betas.get(alpha.source, []):
                    if dg.sub(alpha.degree, beta.degree) != n:
                        continue
                    self.index[(alpha, beta)] = len(self.basis)
                    self.basis.append((alpha, beta))
                    self.norms.append(
                        math.sqrt(float(self.trace.values[beta.source])))

    @property
    def dim(self):
        return len(self.basis)

    def _coefficients(self, element):
        """Exact coordinates of an element in the orthogonal basis, computed
        by inner products against the basis vectors."""
        out = {}
        for (mu, nu), c in element.terms.items():
            # expand the term so both legs are maximal at the top caps
            cap = dg.sub(self.top, mu.degree)
            for lam in self.graph.lambda_le(mu.source, cap):
                key = (self.graph.compose(mu, lam), self.graph.compose(nu, lam))
                idx = self.index.get(key)
                assert idx is not None, f"expansion left the basis: {key}"
                out[idx] = out.get(idx, 0) + complex(c)
                if out[idx] == 0:
                    del out[idx]
        return out

    def matrix(self, element):
        """Left-multiplication matrix in the orthonormalised basis."""
        mat = np.zeros((self.dim, self.dim), dtype=complex)
        for j, (alpha, beta) in enumerate(self.basis):
            u = AlgebraElement.generator(self.graph, alpha, beta)
            for i, c in self._coefficients(element * u).items():
                mat[i, j] = c * self.norms[i] / self.norms[j]
        return mat

    def operator_norm(self, element):
        return float(np.linalg.norm(self.matrix(element), 2))

    def grade_weights(self, f):
        """Diagonal of the operator sending the grade-n basis vector to
        f(n) times itself (e.g. f = |n| for the absolute Dirac)."""
        return np.array([f(dg.sub(a.degree, b.degree)) for a, b in self.basis])

    def absolute_dirac_commutator_norm(self, element):
        """|| [|D|, a] || with |D| acting as |n| on grade n."""
        mat = self.matrix(element)
        weights = self.grade_weights(lambda n: math.sqrt(sum(x * x for x in n)))
        comm = weights[:, None] * mat - mat * weights[None, :]
        return float(np.linalg.norm(comm, 2))


def check_commutator_norms(graph, trace, cap=None, atol=1e-9):
    """Verify, on every generator up to the cap, that the generator has
    norm one and the absolute-Dirac commutator norm is bounded by the
    total grade |d(alpha) - d(beta)| (with equality for the full Dirac,
    which acts as the Clifford multiplier gamma(i grade) on the commutant
    side).  Returns the number of generators checked."""
    rep = GNSRepresentation(graph, trace)
    cap = cap or (1,) * graph.k
    checked = 0
    for v in graph.vertices:
        for d in dg.box(cap):
            for alpha in graph.paths_with_range(v, d):
                for d2 in dg.box(cap):
                    for beta in graph.paths_with_source(alpha.source, d2):
                        a = AlgebraElement.generator(graph, alpha, beta)
                        norm = rep.operator_norm(a)
                        assert abs(norm - 1.0) < atol, (alpha, beta, norm)
                        grade = dg.sub(alpha.degree, beta.degree)
                        bound = math.sqrt(sum(x * x for x in grade))
                        got = rep.absolute_dirac_commutator_norm(a)
                        assert got <= bound + atol, (alpha, beta, got, bound)
                        checked += 1
    return checked
