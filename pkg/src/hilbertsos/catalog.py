"""Named psd forms, their zero sets, and exact certifying identities.

Parametric families can be generated for rational parameter values or
symbolically, with each parameter appended as an extra polynomial variable
after the form variables.  Families that only involve even powers of t
also accept ``t2`` (the value of t squared) so irrational t can be used.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping

from .polycore import (
    Poly,
    QuadForm,
    compose,
    default_names,
    evaluate,
    homogenize,
    parse_rational,
    poly_sqrt,
    quadform_definiteness,
    to_text,
    variables,
)


class UnknownFormError(KeyError):
    pass


class ParameterError(ValueError):
    pass


class CatalogCorruptionError(AssertionError):
    pass


class Params:
    """Parameter access for builders, numeric or symbolic."""

    def __init__(self, values: Mapping[str, object], symbolic: bool):
        self.values = dict(values)
        self.symbolic = symbolic

    def __getitem__(self, name: str):
        if name not in self.values:
            raise ParameterError(f"parameter {name} is required here (t2 alone does not fix its sign)")
        return self.values[name]

    def sq(self, name: str):
        if name + "2" in self.values:
            return self.values[name + "2"]
        v = self[name]
        return v * v


Builder = Callable[[tuple, Params], tuple]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    arity: int
    degree: int
    params: tuple[str, ...]
    param_doc: str
    builder: Builder
    zeros: Callable[[Params], list] | None = None
    even_params: tuple[str, ...] = ()
    structural: tuple[str, ...] = ()
    note: str = ""

    def _check(self, values: Mapping[str, object]) -> dict:
        allowed = set(self.params) | {p + "2" for p in self.even_params}
        extra = set(values) - allowed
        if extra:
            raise ParameterError(f"{self.name}: unknown parameter(s) {sorted(extra)}")
        for p in self.params:
            if p not in values and not (p in self.even_params and p + "2" in values):
                raise ParameterError(f"{self.name}: missing parameter {p}")
        out = {}
        for k, v in values.items():
            out[k] = v if isinstance(v, Poly) else parse_rational(v)
        for p in self.structural:
            if out[p].denominator != 1:
                raise ParameterError(f"{self.name}: {p} must be an integer")
            out[p] = int(out[p])
        return out

    def generate(self, **values) -> Poly:
        vals = self._check(values)
        num, den = self.builder(variables(self.arity), Params(vals, False))
        if den == 0:
            raise ParameterError(f"{self.name}: parameters hit a pole")
        return num / den

    def symbolic(self, **structural) -> tuple[Poly, Poly]:
        """(cleared form, clearing factor) with free parameters as trailing variables."""
        free = [p for p in self.params if p not in self.structural]
        n = self.arity + len(free)
        vs = variables(n)
        vals = {p: vs[self.arity + i] for i, p in enumerate(free)}
        for p in self.structural:
            if p not in structural:
                raise ParameterError(f"{self.name}: structural parameter {p} needed")
            vals[p] = int(structural[p])
        num, den = self.builder(vs[:self.arity], Params(vals, True))
        if not isinstance(den, Poly):
            den = Poly.const(den, n)
        return num, den

    def variable_names(self) -> tuple[str, ...]:
        free = [p for p in self.params if p not in self.structural]
        return default_names(self.arity) + tuple(free)

    def known_zeros(self, **values) -> list[tuple[Fraction, ...]]:
        if self.zeros is None:
            return []
        vals = self._check(values)
        return [tuple(Fraction(c) for c in p) for p in self.zeros(Params(vals, False))]


_REGISTRY: dict[str, CatalogEntry] = {}
_ALIASES = {"M": "motzkin", "R": "robinson", "S": "choi_lam_S", "Q": "choi_lam_Q", "R~": "robinson_quaternary"}


def _register(entry: CatalogEntry) -> None:
    _REGISTRY[entry.name] = entry


def entry(name: str) -> CatalogEntry:
    key = _ALIASES.get(name, name)
    if key not in _REGISTRY:
        raise UnknownFormError(name)
    return _REGISTRY[key]


def names() -> list[str]:
    return sorted(_REGISTRY)


def form(name: str, **params) -> Poly:
    return entry(name).generate(**params)


# ---------------------------------------------------------------------------
# building blocks


def _pm(base):
    """Expand a point with symbolic +-: base entries are ints or ('pm', v)."""
    choices = [[c] if not isinstance(c, tuple) else [c[1], -c[1]] for c in base]
    return [tuple(p) for p in product(*choices)]


def _PM(v):
    return ("pm", v)


def robinson_R(x, y, z):
    return (x**6 + y**6 + z**6 - x**4 * y**2 - x**2 * y**4 - x**4 * z**2 - y**4 * z**2
            - x**2 * z**4 - y**2 * z**4 + 3 * x**2 * y**2 * z**2)


def robinson_cubics(x, y, z):
    return x**3 - x * z**2, y**3 - y * z**2


def seven_point_cubics(x, y, z):
    """Basis of cubics through the seven points (1,0,0),...,(1,-1,-1)."""
    return x * (y**2 - z**2), y * (z**2 - x**2), z * (x**2 - y**2)


def seven_point_sextic(x, y, z):
    return (x**2 - y**2) * (x**2 - z**2) * (y**2 - z**2)


ROBINSON_POINTS = _pm((_PM(1), 0, 1)) + _pm((0, _PM(1), 1)) + _pm((_PM(1), _PM(1), 1))
SEVEN_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]
BINARY_CUBE_POINTS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
QUATERNARY_POINTS = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1),
                     (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1)]


def _const(builder):
    return lambda xs, p: (builder(*xs), 1)


_register(CatalogEntry(
    "motzkin", 3, 6, (), "",
    _const(lambda x, y, z: x**4 * y**2 + x**2 * y**4 + z**6 - 3 * x**2 * y**2 * z**2),
    lambda p: _pm((1, _PM(1), _PM(1))) + [(1, 0, 0), (0, 1, 0)],
))

_register(CatalogEntry(
    "robinson", 3, 6, (), "",
    _const(robinson_R),
    lambda p: ROBINSON_POINTS + _pm((1, _PM(1), 0)),
))

_register(CatalogEntry(
    "robinson_quaternary", 4, 4, (), "",
    _const(lambda x, y, z, w: x**2 * (x - w)**2 + y**2 * (y - w)**2 + z**2 * (z - w)**2
           + 2 * x * y * z * (x + y + z - 2 * w)),
    lambda p: [(0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1)],
))

_register(CatalogEntry(
    "choi_lam_S", 3, 6, (), "",
    _const(lambda x, y, z: x**4 * y**2 + y**4 * z**2 + z**4 * x**2 - 3 * x**2 * y**2 * z**2),
    lambda p: SEVEN_POINTS,
))

_register(CatalogEntry(
    "choi_lam_Q", 4, 4, (), "",
    _const(lambda x, y, z, w: x**2 * y**2 + x**2 * z**2 + y**2 * z**2 + w**4 - 4 * w * x * y * z),
    lambda p: QUATERNARY_POINTS,
))


def quad_Q(u1, u2, u3):
    return 5 * u1**2 + 5 * u2**2 + 5 * u3**2 - 6 * u1 * u2 - 6 * u1 * u3 - 6 * u2 * u3


def quartic_P(v1, v2, v3):
    return (v1**4 + v2**4 + v3**4 - 2 * v1**2 * v2**2 - 2 * v1**2 * v3**2 - 2 * v2**2 * v3**2)


_register(CatalogEntry(
    "T_sextic", 3, 6, (), "indefinite quadratic form evaluated on the seven-point cubics",
    _const(lambda x, y, z: quad_Q(*seven_point_cubics(x, y, z))),
    lambda p: SEVEN_POINTS,
))


def _p_c(xs, p):
    F = seven_point_cubics(*xs)
    return sum((f * f for f in F), 0 * xs[0]) + p["c"] * seven_point_sextic(*xs), 1


_register(CatalogEntry("P_c", 3, 6, ("c",), "c real; psd for small c", _p_c, lambda p: SEVEN_POINTS))


def _phi(xs, p):
    F1, F2 = robinson_cubics(*xs)
    return (p["c1"] * F1 * F1 + 2 * p["c2"] * F1 * F2 + p["c3"] * F2 * F2 + p["c4"] * robinson_R(*xs)), 1


_register(CatalogEntry("Phi", 3, 6, ("c1", "c2", "c3", "c4"), "four real coefficients", _phi,
                       lambda p: ROBINSON_POINTS))


def _r_t(xs, p):
    # cleared by 3 t^4
    s = p.sq("t")
    F1, F2 = robinson_cubics(*xs)
    return ((s * s + 2 * s - 3) * s * s * F1 * F1 + (1 + 2 * s - 3 * s * s) * F2 * F2
            + 3 * s * s * robinson_R(*xs)), 3 * s * s


_register(CatalogEntry(
    "R_t", 3, 6, ("t",), "t > 0", _r_t,
    lambda p: ROBINSON_POINTS + _pm((1, _PM(p["t"]), 0)),
    even_params=("t",),
))


def _p_t_parts(x, y, z, s):
    a = x**2 + (s - 1) * y**2 - s * z**2
    b = (s - 1) * x**2 + y**2 - s * z**2
    return x * a, y * b, a * b * (-x**2 - y**2 + s * z**2)


def _p_t(xs, p):
    F1, F2, G = _p_t_parts(*xs, p.sq("t"))
    return F1 * F1 + F2 * F2 + G, 1


_register(CatalogEntry(
    "P_t", 3, 6, ("t",), "0 < t < sqrt 2", _p_t,
    lambda p: _pm((_PM(1), _PM(1), 1)) + _pm((_PM(p["t"]), 0, 1)) + _pm((0, _PM(p["t"]), 1)) + _pm((1, _PM(1), 0)),
    even_params=("t",),
))


def binary_cube_cubics(x, y, z):
    return x * y * (x - y), y * z * (y - z), z * x * (z - x)


def binary_cube_sextic(x, y, z):
    return x * y * z * (x - y) * (y - z) * (z - x)


def _u_c(xs, p):
    F = binary_cube_cubics(*xs)
    return sum((f * f for f in F), 0 * xs[0]) + p["c"] * binary_cube_sextic(*xs), 1


_register(CatalogEntry("U_c", 3, 6, ("c",), "psd iff |c| <= 4 sqrt(sqrt 2 - 1)", _u_c,
                       lambda p: BINARY_CUBE_POINTS))


def _m_t(xs, p):
    x, y, z = xs
    s = p.sq("t")
    return ((1 - 2 * s) * (x**4 * y**2 + x**2 * y**4) + s * s * (x**4 * z**2 + y**4 * z**2)
            - (3 - 8 * s + 2 * s * s) * x**2 * y**2 * z**2 - 2 * s * (x**2 + y**2) * z**4 + z**6), 1


_register(CatalogEntry(
    "M_t", 3, 6, ("t",), "psd iff t^2 <= 1/2", _m_t,
    lambda p: [(1, 0, 0), (0, 1, 0)] + _pm((1, 0, _PM(p["t"]))) + _pm((0, 1, _PM(p["t"])))
    + _pm((1, _PM(1), _PM(1))),
    even_params=("t",),
))


def _s_t(xs, p):
    x, y, z = xs
    s = p.sq("t")
    return (s * s * (x**6 + y**6 + z**6) + (1 - 2 * s**3) * (x**4 * y**2 + y**4 * z**2 + z**4 * x**2)
            + (s**4 - 2 * s) * (x**2 * y**4 + y**2 * z**4 + z**2 * x**4)
            - 3 * (1 - 2 * s + s**2 - 2 * s**3 + s**4) * x**2 * y**2 * z**2), 1


_register(CatalogEntry(
    "S_t", 3, 6, ("t",), "t >= 0", _s_t,
    lambda p: _pm((_PM(p["t"]), 1, 0)) + _pm((0, _PM(p["t"]), 1)) + _pm((1, 0, _PM(p["t"])))
    + _pm((1, _PM(1), _PM(1))),
    even_params=("t",),
))

_register(CatalogEntry(
    "octic_T", 3, 8, (), "",
    _const(lambda x, y, z: x**4 * y**4 + x**2 * z**6 + y**2 * z**6 - 3 * x**2 * y**2 * z**4),
    lambda p: [(0, 0, 1), (1, 0, 0), (0, 1, 0)] + _pm((1, _PM(1), _PM(1))),
    note="stored and zero-checked only",
))


def _falling_form(v, z, m):
    out = 1
    for j in range(m):
        out = out * (v - j * z)
    return out


_register(CatalogEntry(
    "octic_U", 3, 8, (), "",
    _const(lambda x, y, z: _falling_form(x, z, 4)**2 + _falling_form(y, z, 4)**2),
    lambda p: [(i, j, 1) for i in range(4) for j in range(4)],
    note="stored and zero-checked only",
))


def _gondola(xs, p):
    from . import interp
    d = p["d"]
    inst = interp.gondola(d)
    num = homogenize(inst.f, 2 * d)
    g = homogenize(inst.g, 2 * d)
    x, y, z = xs
    return compose(num + p["c"] * g, [x, y, z]), 1


def _gondola_zeros(p):
    from . import interp
    return [(i, j, 1) for i, j in interp.gondola_points(p["d"])]


_register(CatalogEntry("gondola", 3, 0, ("d", "c"), "integer d >= 3, c > 0 small", _gondola,
                       _gondola_zeros, structural=("d",)))


# ---------------------------------------------------------------------------
# zero verification


@dataclass(frozen=True)
class ZeroCheck:
    point: tuple[Fraction, ...]
    value: Fraction
    singular: bool


def known_zeros(name: str, **params) -> list[ZeroCheck]:
    """Listed zeros of a catalog form, each checked for value and gradient zero."""
    e = entry(name)
    F = e.generate(**params)
    grads = F.gradient()
    out = []
    for pt in e.known_zeros(**params):
        v = evaluate(F, pt)
        sing = v == 0 and all(evaluate(g, pt) == 0 for g in grads)
        if not sing:
            raise CatalogCorruptionError(f"{name}{params}: {pt} is not a singular zero")
        out.append(ZeroCheck(pt, v, sing))
    return out


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class Identity:
    """lhs == rhs as polynomials in ``names``; lhs is multiplier * target for sos identities."""

    name: str
    description: str
    names: tuple[str, ...]
    lhs: Poly
    rhs: Poly
    multiplier: Poly | None = None
    target: Poly | None = None
    squares: tuple[tuple[Poly, Poly], ...] = ()

    @property
    def is_sos_identity(self) -> bool:
        return self.target is not None


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    passed: bool
    residual: Poly
    names: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {"name": self.name, "kind": "exact", "passed": self.passed,
                "residual": to_text(self.residual, self.names or None)}


def _sos(name, description, names, multiplier, target, squares) -> Identity:
    rhs = sum((w * h * h for w, h in squares), 0 * target)
    return Identity(name, description, names, multiplier * target, rhs, multiplier, target,
                    tuple(squares))


def _id_rtilde():
    x, y, z, w = variables(4)
    Rt = entry("robinson_quaternary").generate()
    lhs = compose(Rt, [x - w, y - w, z - w, x + y + z - w])
    return Identity("rtilde_to_choi_lam_q", "quaternary Robinson quartic under a linear change equals 2Q",
                    ("x", "y", "z", "w"), lhs, 2 * form("choi_lam_Q"))


def _id_range_quartic():
    x, y, z = variables(3)
    G = seven_point_sextic(x, y, z)
    return Identity("range_quartic_of_cubics", "quartic P evaluated on the seven-point cubics is a square",
                    ("x", "y", "z"), quartic_P(*seven_point_cubics(x, y, z)), G * G)


def _id_partial_quadratic():
    u1, u2, u3 = variables(3)
    q = 5 * u1**2 + 5 * u2**2 + 5 * u3**2 - 6 * u1 * u2 - 6 * u1 * u3
    squares = [(Fraction(5), u1 - Fraction(3, 5) * u2 - Fraction(3, 5) * u3),
               (Fraction(16, 5), u2 - Fraction(9, 16) * u3),
               (Fraction(35, 16), u3)]
    return _sos("partial_quadratic_psd", "the quadratic without its u2*u3 term as a weighted sum of squares",
                ("u1", "u2", "u3"), Poly.const(1, 3), q, squares)


def _id_quadratic_slice():
    v2, v3, t = variables(3)
    return Identity("quadratic_on_range_boundary", "Q(v2+v3+t, v2, v3) expansion", ("v2", "v3", "t"),
                    quad_Q(v2 + v3 + t, v2, v3), 4 * (v2 - v3)**2 + t * (4 * v2 + 4 * v3 + 5 * t))


def _sym(terms_fn, x, y, z, perms):
    return sum((terms_fn(*[(x, y, z)[i] for i in p]) for p in perms), 0 * x)


_ALL6 = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]


def _id_t_expansion():
    x, y, z = variables(3)
    s6_x4y2 = _sym(lambda a, b, c: a**4 * b**2, x, y, z, _ALL6)
    s3_x4yz = x**4 * y * z + y**4 * x * z + z**4 * x * y
    s3_x3y3 = x**3 * y**3 + x**3 * z**3 + y**3 * z**3
    s6_x3y2z = _sym(lambda a, b, c: a**3 * b**2 * c, x, y, z, _ALL6)
    rhs = 5 * s6_x4y2 + 6 * s3_x4yz + 6 * s3_x3y3 - 6 * s6_x3y2z - 30 * x**2 * y**2 * z**2
    return Identity("t_sextic_expansion", "monomial expansion of T", ("x", "y", "z"), form("T_sextic"), rhs)


def _id_t_sos():
    x, y, z = variables(3)
    mult = 2 * (x**2 + y**2 + z**2 - x * y - x * z - y * z)
    squares = [(1, (x - y)**2 * (x * y + 3 * x * z + 3 * y * z + z**2)),
               (1, (x - z)**2 * (x * z + 3 * x * y + 3 * y * z + y**2)),
               (1, (y - z)**2 * (y * z + 3 * x * y + 3 * x * z + x**2))]
    return _sos("t_sextic_multiplier_sos", "T times a psd quadratic is a sum of three squares",
                ("x", "y", "z"), mult, form("T_sextic"), squares)


def _id_phi_t():
    x, y, t = variables(3)
    lhs = t**4 * (2 * t**2 + t**4) * x**6 - 3 * t**4 * x**4 * y**2 - 3 * t**4 * x**2 * y**4 + (1 + 2 * t**2) * y**6
    rhs = (t**2 * x**2 - y**2)**2 * ((t**4 + 2 * t**2) * x**2 + (2 * t**2 + 1) * y**2)
    return Identity("binary_sextic_phi_t_factorization", "3t^4 Phi_t factors with double zeros at (1, +-t)",
                    ("x", "y", "t"), lhs, rhs)


def _id_r_t():
    num, _ = entry("R_t").symbolic()
    x, y, z, t = variables(4)
    mult = (2 * t**4 + t**2) * x**2 + (t**2 + 2) * y**2
    squares = [(3 * t**6 * (1 + 2 * t**2), x * z * (x**2 - z**2)),
               (3 * t**4 * (2 + t**2), y * z * (y**2 - z**2)),
               (t**2 * (t**2 - 1)**2, x * y * (t**2 * x**2 - y**2 + (1 - t**2) * z**2)),
               ((2 + t**2) * (1 + 2 * t**2), t**4 * x**4 - y**4 - t**4 * x**2 * z**2 + y**2 * z**2)]
    return _sos("r_t_multiplier_sos", "a psd quadratic times 3t^4 R_t as weighted squares",
                ("x", "y", "z", "t"), mult, num, squares)


def _id_p_t():
    num, _ = entry("P_t").symbolic()
    x, y, z, t = variables(4)
    s = t * t
    squares = [(2 - s, (x**2 - y**2) * (x**2 + y**2 - s * z**2)),
               (s, x * z * (x**2 + (s - 1) * y**2 - s * z**2)),
               (s, y * z * ((s - 1) * x**2 + y**2 - s * z**2))]
    return _sos("p_t_multiplier_sos", "(x^2+y^2) P_t as weighted squares", ("x", "y", "z", "t"),
                x**2 + y**2, num, squares)


def _id_p_t_expansion():
    num, _ = entry("P_t").symbolic()
    x, y, z, t = variables(4)
    s = t * t
    rhs = ((2 - s) * (x**6 - x**4 * y**2 - x**2 * y**4 + y**6) + (2 * s**2 - 3 * s) * (x**4 + y**4) * z**2
           + (6 * s - 4 * s**2 + s**3) * x**2 * y**2 * z**2 - s**3 * (x**2 * z**4 + y**2 * z**4 - z**6))
    return Identity("p_t_expansion", "P_t expanded in monomials", ("x", "y", "z", "t"), num, rhs)


def _id_uvw():
    x, y, z = variables(3)
    # xyz (u + v + w + uvw) with u = (x-y)/z, v = (y-z)/x, w = (z-x)/y
    lhs = x * y * (x - y) + y * z * (y - z) + z * x * (z - x) + (x - y) * (y - z) * (z - x)
    return Identity("uvw_relation", "u + v + w + uvw vanishes after clearing xyz", ("x", "y", "z"),
                    lhs, Poly(3))


def _id_qc_slice():
    u, c = variables(2)
    # (1+u^2)^2 * Q_c(u, u, -2u/(1+u^2))
    lhs = 2 * u**2 * (1 + u**2)**2 + 4 * u**2 - 2 * c * u**3 * (1 + u**2)
    rhs = 2 * u**2 * (u**4 + 2 * u**2 + 3 - c * u * (1 + u**2))
    return Identity("q_c_on_symmetric_slice", "Q_c restricted to u = v, cleared by (1+u^2)^2", ("u", "c"),
                    lhs, rhs)


def _id_m_t():
    num, _ = entry("M_t").symbolic()
    x, y, z, t = variables(4)
    s = t * t
    squares = [(1 - 2 * s, x * y * (x**2 + y**2 - 2 * z**2)),
               (1, y * z * (s * (x**2 - y**2) - (x**2 - z**2))),
               (1, x * z * (s * (y**2 - x**2) - (y**2 - z**2)))]
    return _sos("m_t_multiplier_sos", "(x^2+y^2) M_t as weighted squares", ("x", "y", "z", "t"),
                x**2 + y**2, num, squares)


def _id_s_t():
    num, _ = entry("S_t").symbolic()
    x, y, z, t = variables(4)
    s = t * t
    squares = [(1, s * x**4 + x**2 * y**2 - s * s * x**2 * y**2 - s * y**4 - x**2 * z**2 + s * s * y**2 * z**2),
               (1, y * z * (y**2 - x**2 + s * (x**2 - z**2))),
               (s * s, x * z * (y**2 - z**2 + s * (x**2 - y**2))),
               ((s - 1)**2, x * y * ((z**2 - x**2) + s * (y**2 - z**2)))]
    return _sos("s_t_multiplier_sos", "(x^2+y^2) S_t as weighted squares", ("x", "y", "z", "t"),
                x**2 + y**2, num, squares)


def multiplier_lambdas(r, s, t):
    return t * t, s * s, r * r, r * r, (t * t - r * r - s * s) / 2, s * s


def _id_diag_multiplier():
    x, y, z, r, s, t = variables(6)
    l1, l2, l3, l4, l5, l6 = multiplier_lambdas(r, s, t)
    R = robinson_R(x, y, z)
    a = (x**2 - z**2) * (x**2 - y**2 + z**2)
    b = (y**2 - z**2) * (-x**2 + y**2 + z**2)
    rhs = (l1 * x**2 * y**2 * (x**2 - y**2)**2 + l2 * x**2 * z**2 * (x**2 - z**2)**2
           + l3 * y**2 * z**2 * (y**2 - z**2)**2 + l4 * a * a + 2 * l5 * a * b + l6 * b * b)
    return Identity("robinson_diagonal_multiplier_sos",
                    "(r^2x^2+s^2y^2+t^2z^2) R as a quadratic form in six sextic-root cubics",
                    ("x", "y", "z", "r", "s", "t"), (r**2 * x**2 + s**2 * y**2 + t**2 * z**2) * R, rhs)


def _id_heron():
    r, s, t = variables(3)
    l1, l2, l3, l4, l5, l6 = multiplier_lambdas(r, s, t)
    return Identity("multiplier_discriminant_heron", "l4 l6 - l5^2 equals the Heron product",
                    ("r", "s", "t"), l4 * l6 - l5 * l5,
                    Fraction(1, 4) * (r + s - t) * (r + t - s) * (s + t - r) * (r + s + t))


def boundary_decomposition(v: Fraction, c1: Fraction = Fraction(0)) -> Identity:
    """Phi[c1, -sigma, c3, 1] = R_v + mu (v^3 F1 - F2)^2 at a rational critical point v."""
    v, c1 = Fraction(v), Fraction(c1)
    c3 = (1 - v**-2 + 3 * (1 + c1) * v**-4) / (3 * v**2) - 1
    sigma = ((1 + c3) * v**3 - v - 1 / v + (1 + c1) / v**3) / 2
    mu = (3 * (1 + c3) * v**4 - (2 * v**2 + 1)) / (3 * v**4)
    x, y, z = variables(3)
    F1, F2 = robinson_cubics(x, y, z)
    lhs = form("Phi", c1=c1, c2=-sigma, c3=c3, c4=1)
    rhs = form("R_t", t=v) + mu * (v**3 * F1 - F2)**2
    return Identity(f"sigma_boundary_decomposition[v={v}]",
                    "extremal c2 gives R_v plus a square", ("x", "y", "z"), lhs, rhs)


IDENTITY_BUILDERS: dict[str, Callable[[], Identity]] = {
    "rtilde_to_choi_lam_q": _id_rtilde,
    "range_quartic_of_cubics": _id_range_quartic,
    "partial_quadratic_psd": _id_partial_quadratic,
    "quadratic_on_range_boundary": _id_quadratic_slice,
    "t_sextic_expansion": _id_t_expansion,
    "t_sextic_multiplier_sos": _id_t_sos,
    "binary_sextic_phi_t_factorization": _id_phi_t,
    "r_t_multiplier_sos": _id_r_t,
    "p_t_expansion": _id_p_t_expansion,
    "p_t_multiplier_sos": _id_p_t,
    "uvw_relation": _id_uvw,
    "q_c_on_symmetric_slice": _id_qc_slice,
    "m_t_multiplier_sos": _id_m_t,
    "s_t_multiplier_sos": _id_s_t,
    "robinson_diagonal_multiplier_sos": _id_diag_multiplier,
    "multiplier_discriminant_heron": _id_heron,
}
for _v in (Fraction(1, 2), Fraction(2), Fraction(3)):
    IDENTITY_BUILDERS[f"sigma_boundary_decomposition[v={_v}]"] = (lambda v=_v: boundary_decomposition(v))


def identity(name: str) -> Identity:
    if name not in IDENTITY_BUILDERS:
        raise UnknownFormError(name)
    return IDENTITY_BUILDERS[name]()


def identity_names() -> list[str]:
    return list(IDENTITY_BUILDERS)


def verify_identity(name: str) -> IdentityCheck:
    ident = identity(name)
    res = ident.lhs - ident.rhs
    return IdentityCheck(name, res.is_zero(), res, ident.names)


def verify_all_identities() -> list[IdentityCheck]:
    return [verify_identity(n) for n in IDENTITY_BUILDERS]


# ---------------------------------------------------------------------------
# relations between catalog members


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"name": self.name, "kind": "exact", "passed": self.passed, "detail": self.detail}


def _rel(name: str, fn) -> RelationCheck:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed relation, not an abort
        return RelationCheck(name, False, f"{type(exc).__name__}: {exc}")
    return RelationCheck(name, bool(ok), detail)


def _m_half_square():
    p = form("M_t", t2=Fraction(1, 2))
    h = poly_sqrt(p)
    if h is None:
        return False, "no exact square root"
    x, y, z = variables(3)
    target = Fraction(1, 2) * z * (x**2 + y**2 - 2 * z**2)
    return h == target or h == -target, f"root {to_text(h)}"


def _r_reciprocal():
    num, _ = entry("R_t").symbolic()
    rev = num.reverse_in(3, 8)
    swapped = num.permute((1, 0, 2, 3))
    return rev == swapped, "t^8 N(1/t) = N(y, x, z) for the cleared numerator N = 3t^4 R_t"


def _s_reciprocal():
    num, _ = entry("S_t").symbolic()
    return num.reverse_in(3, 8) == num.permute((0, 2, 1, 3)), "t^8 S_{1/t}(x,y,z) = S_t(x,z,y)"


def _t_slice():
    (t,) = variables(1)
    T = form("T_sextic")
    return compose(T, [1 + t, 1 - t, Poly.const(-1, 1)]) == 48 * t**4 + 4 * t**6, "T(1+t,1-t,-1)"


def verify_relations() -> list[RelationCheck]:
    R = form("robinson")
    S = form("choi_lam_S")
    checks = [
        ("M_0 = M", lambda: (form("M_t", t=0) == form("motzkin"), "")),
        ("R_1 = R", lambda: (form("R_t", t=1) == R, "")),
        ("S_0 = S", lambda: (form("S_t", t=0) == S, "")),
        ("S_1 = R", lambda: (form("S_t", t=1) == R, "")),
        ("P_1 = 2S", lambda: (form("P_c", c=1) == 2 * S, "")),
        ("R_{1/t}(x,y,z) = R_t(y,x,z)", _r_reciprocal),
        ("t^8 S_{1/t} = S_t(x,z,y)", _s_reciprocal),
        ("M_t is a square at t^2 = 1/2", _m_half_square),
        ("T(1+t,1-t,-1) = 48t^4 + 4t^6", _t_slice),
        ("P(F1,F2,F3) = G^2", lambda: (verify_identity("range_quartic_of_cubics").passed, "")),
        ("Q(v2+v3+t,v2,v3) = 4(v2-v3)^2 + t(4v2+4v3+5t)",
         lambda: (verify_identity("quadratic_on_range_boundary").passed, "")),
        ("u + v + w + uvw = 0", lambda: (verify_identity("uvw_relation").passed, "")),
        ("Q is not psd", lambda: (quadform_definiteness(QuadForm.from_poly(quad_Q(*variables(3)))) == "indefinite", "")),
    ]
    return [_rel(n, f) for n, f in checks]


ZERO_CHECKS: list[tuple[str, dict]] = [
    ("motzkin", {}), ("robinson", {}), ("robinson_quaternary", {}), ("choi_lam_S", {}), ("choi_lam_Q", {}),
    ("T_sextic", {}), ("P_c", {"c": 1}), ("Phi", {"c1": 1, "c2": 2, "c3": 3, "c4": 4}),
    ("R_t", {"t": Fraction(1, 2)}), ("R_t", {"t": 2}), ("R_t", {"t": 3}),
    ("P_t", {"t": 1}), ("P_t", {"t": Fraction(1, 2)}), ("U_c", {"c": 0}), ("U_c", {"c": 2}),
    ("M_t", {"t": Fraction(1, 2)}), ("M_t", {"t": 2}), ("S_t", {"t": 2}), ("S_t", {"t": Fraction(1, 3)}),
    ("octic_T", {}), ("octic_U", {}), ("gondola", {"d": 3, "c": 1}), ("gondola", {"d": 4, "c": Fraction(1, 2)}),
]


def verify_zero_catalog() -> list[RelationCheck]:
    out = []
    for name, params in ZERO_CHECKS:
        label = f"zeros of {name}" + (f" {params}" if params else "")
        try:
            n = len(known_zeros(name, **params))
            out.append(RelationCheck(label, True, f"{n} singular zeros"))
        except CatalogCorruptionError as exc:
            out.append(RelationCheck(label, False, str(exc)))
    return out
