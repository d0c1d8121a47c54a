"""Multilinear identity discovery for mutations of perm algebras.

The multilinear magmatic space of degree n has n! * Catalan(n-1) basis
monomials (tree shape times variable permutation).  Expanding each through
the mutation product gives a linear map into the free perm algebra whose
left kernel is exactly the space of multilinear identities of that degree.
T-ideal consequences of known identities are generated degree by degree:
bracket with a fresh variable on either side, substitute a bracket with a
fresh variable into each slot, then close under variable permutations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import Matrix, SpanReducer, kernel_basis
from .mutation import expand, tree_shapes, _tree_term
from .perm import mono_key
from .terms import Template, TermPoly, term_vars

DEFAULT_DEGREE_LIMIT = 6


def _xnames(n):
    return [f"x{i}" for i in range(1, n + 1)]


def magmatic_basis(n, kind="b", limit=DEFAULT_DEGREE_LIMIT):
    """Ordered multilinear magmatic monomials of degree n (as terms).

    Shapes are enumerated with the smaller left factor first and variable
    permutations lexicographically; for n = 3 this reproduces the order
    a(bc), a(cb), ..., (cb)a used in the degree-3 rank computation.
    """
    if not 1 <= n <= limit:
        raise ValueError(f"degree {n} outside limit {limit}")
    names = _xnames(n)
    out = []
    for shape in tree_shapes(n):
        for perm in itertools.permutations(names):
            out.append(_tree_term(shape, list(perm), kind))
    return out


def expansion_matrix(n, limit=DEFAULT_DEGREE_LIMIT):
    """Rows: magmatic monomials; columns: perm monomials (global order)."""
    basis = magmatic_basis(n, limit=limit)
    expansions = [expand(TermPoly.term(t)) for t in basis]
    monos = sorted({m for e in expansions for m in e.terms}, key=mono_key)
    idx = {m: i for i, m in enumerate(monos)}
    rows = [{idx[m]: c for m, c in e.terms.items()} for e in expansions]
    return Matrix(rows, len(monos), labels=monos)


def vec_to_poly(vec, basis):
    return TermPoly({basis[i]: c for i, c in vec.items()})


def poly_to_vec(poly, index):
    """Vector of a multilinear polynomial over a magmatic monomial index."""
    out = {}
    for t, c in poly.terms.items():
        i = index.get(t)
        if i is None:
            raise ValueError(f"term outside the magmatic basis: {t}")
        out[i] = c
    return out


def identity_kernel(n, limit=DEFAULT_DEGREE_LIMIT):
    """Basis of all multilinear degree-n identities, as bracket polynomials.

    These are the vectors over the magmatic basis annihilated by the
    expansion map, i.e. the kernel of the transposed expansion matrix.
    """
    basis = magmatic_basis(n, limit=limit)
    mat = expansion_matrix(n, limit=limit).transpose()
    return [vec_to_poly(v, basis) for v in kernel_basis(mat)]


def _canonical_degree(template_or_poly):
    if isinstance(template_or_poly, Template):
        return template_or_poly.arity
    return len(template_or_poly.variables())


def _as_poly_at_x(item, n):
    if isinstance(item, Template):
        return item.instantiate(_xnames(item.arity))
    poly = item
    names = sorted(poly.variables())
    return poly.rename(dict(zip(names, _xnames(len(names)))))


def _lift_once(poly, d, kind):
    """All one-step T-ideal liftings of a multilinear degree-d polynomial."""
    node = (lambda a, b: TermPoly({(kind, ta, tb): ca * cb
                                   for ta, ca in a.terms.items()
                                   for tb, cb in b.terms.items()}))
    new = TermPoly.var(f"x{d + 1}")
    out = [node(poly, new), node(new, poly)]
    for i in range(1, d + 1):
        xi = TermPoly.var(f"x{i}")
        out.append(substitute_var(poly, f"x{i}", node(xi, new)))
        out.append(substitute_var(poly, f"x{i}", node(new, xi)))
    return out


def substitute_var(poly, name, repl):
    from .terms import substitute
    return substitute(poly, {name: repl})


class _DegreeSpace:
    """Magmatic index plus precomputed permutation actions at one degree."""

    def __init__(self, n, kind, limit):
        self.n = n
        self.basis = magmatic_basis(n, kind=kind, limit=limit)
        self.index = {t: i for i, t in enumerate(self.basis)}
        names = _xnames(n)
        self.transposition_maps = []
        for k in range(n - 1):
            mapping = {names[k]: names[k + 1], names[k + 1]: names[k]}
            perm = [0] * len(self.basis)
            for i, t in enumerate(self.basis):
                from .terms import rename_leaves
                perm[i] = self.index[rename_leaves(t, mapping)]
            self.transposition_maps.append(perm)

    def permuted(self, vec, perm):
        return {perm[i]: c for i, c in vec.items()}


def consequence_span(identities, n, kind="b", limit=DEFAULT_DEGREE_LIMIT,
                     cap=None, stop=None):
    """Span of all multilinear degree-n T-ideal consequences.

    ``identities`` is a list of Templates or multilinear TermPolys.  The
    result is a list of sparse vectors over the degree-n magmatic basis
    (use ``magmatic_basis(n, kind)`` for the column meaning).  ``cap``
    stops growth once the dimension is known to be reached (callers must
    justify the bound); ``stop`` is an optional callback on the reducer
    for early termination (e.g. membership queries).
    """
    if not 1 <= n <= limit:
        raise ValueError(f"degree {n} outside limit {limit}")
    items = [(_canonical_degree(it), _as_poly_at_x(it, n)) for it in identities]
    if any(d > n for d, _ in items):
        raise ValueError("identity degree exceeds target degree")
    dmin = min((d for d, _ in items), default=n)

    prev_polys = []
    reducer = None
    for d in range(dmin, n + 1):
        space = _DegreeSpace(d, kind, limit)
        reducer = SpanReducer()
        done = False
        ticks = [0]

        def saturated(force=False):
            if cap is not None and d == n and reducer.dim >= cap:
                return True
            if stop is not None and d == n:
                ticks[0] += 1
                if force or ticks[0] % 32 == 0:
                    return stop(reducer, space)
            return False

        gens = [p for deg, p in items if deg == d]
        for poly in prev_polys:
            gens.extend(_lift_once(poly, d - 1, kind))
        for poly in gens:
            if done:
                break
            vec = poly_to_vec(poly, space.index)
            reducer.insert(vec)
            done = saturated()
        # close under variable permutations (adjacent transpositions)
        while not done:
            grew = False
            for vec in list(reducer.pivot_rows.values()):
                if done:
                    break
                for perm in space.transposition_maps:
                    if reducer.insert(space.permuted(dict(vec), perm)):
                        grew = True
                        if saturated():
                            done = True
                            break
            if not grew:
                break
        if not done and saturated(force=True):
            done = True
        if d < n:
            prev_polys = [vec_to_poly(v, space.basis)
                          for v in reducer.rows()]
    return reducer.rows() if reducer is not None else []


def _kernel_dim(n, limit):
    mat = expansion_matrix(n, limit=limit)
    from .linalg import rref
    _, rank = rref(mat)
    return mat.nrows - rank, mat


def new_identities(known, n, limit=DEFAULT_DEGREE_LIMIT):
    """Compare the full identity space at degree n with the consequences
    of ``known``.

    Returns {kernel_dim, consequence_dim, new_dim, representatives}.
    ``new_dim`` counts how many additional generating identities are
    needed to close the kernel at this degree: one degree-n identity
    contributes its whole orbit under variable permutations, so the
    number of generators is smaller than the dimension gap in general.
    The generators are chosen greedily (largest orbit contribution first,
    candidates drawn from the kernel basis reduced modulo the current
    span), which is deterministic; ``representatives`` lists them.
    Raises ValueError (with a witness) if some known candidate is not an
    identity of mutations of perm algebras.
    """
    for it in known:
        poly = _as_poly_at_x(it, n)
        val = expand(poly)
        if val:
            name = it.name if isinstance(it, Template) else str(it)
            raise ValueError(f"not an identity: {name}; expansion {val}")

    kdim, mat = _kernel_dim(n, limit)
    # consequences of vanishing identities always lie in the kernel, so
    # the kernel dimension is a sound growth cap
    cons = consequence_span(known, n, kind="b", limit=limit, cap=kdim)
    cdim = len(cons)

    basis = magmatic_basis(n, limit=limit)
    index = {t: i for i, t in enumerate(basis)}
    names = _xnames(n)
    perms = list(itertools.permutations(names))

    def orbit(vec):
        poly = vec_to_poly({k: Fraction(c) for k, c in vec.items()}, basis)
        return [poly_to_vec(poly.rename(dict(zip(names, pp))), index)
                for pp in perms]

    rep_vecs = []
    if cdim < kdim:
        red = SpanReducer()
        for v in cons:
            red.insert(v)
        kb = kernel_basis(mat.transpose())
        # the consequence span is permutation-closed, and stays so after
        # each orbit insertion, so residues generate the same extensions
        # as the vectors they came from
        while red.dim < kdim:
            best = None
            for v in kb:
                residue = red.residue(v)
                if not residue:
                    continue
                trial = SpanReducer()
                trial.pivot_rows = dict(red.pivot_rows)
                for ov in orbit(residue):
                    trial.insert(ov)
                gain = trial.dim - red.dim
                if best is None or gain > best[0]:
                    best = (gain, residue)
            rep_vecs.append(best[1])
            for ov in orbit(best[1]):
                red.insert(ov)
    representatives = [vec_to_poly({k: Fraction(c) for k, c in v.items()},
                                   basis) for v in rep_vecs]
    return {"kernel_dim": kdim, "consequence_dim": cdim,
            "new_dim": len(rep_vecs), "representatives": representatives}


def tideal_membership(target, defining, kind="m", limit=DEFAULT_DEGREE_LIMIT):
    """Does ``target`` follow from ``defining`` as a multilinear T-ideal
    consequence at its own degree?

    ``target`` must be multilinear; its variables are canonicalized to
    x1..xn in sorted order.  ``defining`` are templates/polynomials over
    the same product kind ('m' for ordinary-product varieties such as
    bicommutative algebras).
    """
    names = sorted(target.variables())
    for t in target.terms:
        if any(c != 1 for c in term_vars(t).values()):
            raise ValueError("target is not multilinear; polarize it first")
    n = len(names)
    canon = target.rename(dict(zip(names, _xnames(n))))
    for t in canon.terms:
        if _kind_of(t) not in (None, kind):
            raise ValueError("mixed node kinds between target and variety")

    found = [False]
    vec_holder = {}

    def stop(reducer, space):
        if "vec" not in vec_holder:
            vec_holder["vec"] = poly_to_vec(canon, space.index)
        if reducer.contains(vec_holder["vec"]):
            found[0] = True
            return True
        return False

    consequence_span(defining, n, kind=kind, limit=limit, stop=stop)
    return found[0]


def _kind_of(t):
    if t[0] == "v":
        return None
    k1 = t[0]
    for child in (t[1], t[2]):
        k2 = _kind_of(child)
        if k2 is not None and k2 != k1:
            raise ValueError("mixed node kinds inside one term")
    return k1
