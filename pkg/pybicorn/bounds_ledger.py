import ast
import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple, Union

Number = Union[int, Fraction]

# =====================================================================================================
# Exact arithmetic
# =====================================================================================================

def _num(x):
    if isinstance(x, bool):
        return x
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x

def ceil_log(x, base=2):
    """⌈log_base(x)⌉ for a positive rational x, by exact comparison with powers of base."""
    x, base = Fraction(x), int(base)
    if x <= 0:
        raise ValueError(f"Logarithm of a non-positive number {x}")
    if base < 2:
        raise ValueError(f"Logarithm base must be >= 2, got {base}")
    n = 0
    if x >= 1:
        while Fraction(base)**n < x:
            n += 1
    else:
        while Fraction(base)**(n - 1) >= x:
            n -= 1
    return n

def ceil_log2(x):
    return ceil_log(x, 2)

def solve_self_bound(a, c, s, o, window=64, limit=10**6):
    """Largest k >= 1 with k <= s·⌈log2(a·k + c)⌉ + o.

    The search stops once k > s·(log2(a·k + c) + 1) + o, which rules k out
    for any ceiling, has held for `window` consecutive values of k; that
    test is done exactly as 2^(k - o - s) > (a·k + c)^s.

    Returns
    -------
    int
        0 if no k satisfies the inequality

    Raises
    ------
    ValueError
        For a < 1 or s < 1, or if the search passes `limit`
    """
    if a < 1 or s < 1:
        raise ValueError(f"solve_self_bound needs a >= 1 and s >= 1, got a = {a}, s = {s}")
    best, run, k = 0, 0, 0
    while run < window:
        k += 1
        if k > limit:
            raise ValueError(f"k <= {s}⌈log2({a}k + {c})⌉ + {o} has no finite maximum below {limit}")
        arg = a*k + c
        if arg <= 0:
            run = 0
            continue
        if k <= s*ceil_log2(arg) + o:
            best = k
        if Fraction(2)**(k - o - s) > Fraction(arg)**s:
            run += 1
        else:
            run = 0
    return best

# =====================================================================================================
# Expressions
# A step expression is integer arithmetic (+ - * / ** and comparisons) over
# literals, earlier step labels, parameters and the results of other
# entries, with the functions below. It is evaluated in rationals.
# =====================================================================================================

FUNCTIONS = ("ceil_log2", "ceil_log", "solve_self_bound", "ceil", "max", "min")

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_CMPOPS = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge,
           ast.Eq: operator.eq, ast.NotEq: operator.ne}

def _function(name):
    # looked up at call time, so the ledger follows the module's functions
    if name == "ceil":
        return math.ceil
    if name in ("max", "min"):
        return max if name == "max" else min
    return globals()[name]

def _eval(node, lookup):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ValueError(f"Only integer literals are allowed, got {node.value!r}")
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        return lookup(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, lookup)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](Fraction(_eval(node.left, lookup)), Fraction(_eval(node.right, lookup)))
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
        base, exp = Fraction(_eval(node.left, lookup)), _eval(node.right, lookup)
        if Fraction(exp).denominator != 1:
            raise ValueError("Exponents must be integers")
        return base**int(exp)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, lookup)
        for op, right in zip(node.ops, node.comparators):
            right = _eval(right, lookup)
            if type(op) not in _CMPOPS:
                raise ValueError(f"Unsupported comparison {type(op).__name__}")
            if not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in FUNCTIONS and not node.keywords:
        args = [_num(_eval(a, lookup)) for a in node.args]
        return Fraction(_function(node.func.id)(*args))
    raise ValueError(f"Unsupported expression {ast.dump(node)}")

def evaluate(expression, lookup):
    """Exact value of an expression; names are resolved by `lookup`."""
    try:
        tree = ast.parse(expression, mode="eval")
    except SyntaxError as err:
        raise ValueError(f"Malformed expression {expression!r}: {err.msg}") from None
    return _num(_eval(tree.body, lookup))

# =====================================================================================================
# Ledger entries
# =====================================================================================================

@dataclass(frozen=True)
class LedgerStep:
    label: str
    expression: str
    value: Number
    anchor: str = ""

    def to_dict(self):
        return {"label": self.label, "expression": self.expression, "value": str(self.value), "anchor": self.anchor}

@dataclass(frozen=True)
class LedgerEntry:
    name: str
    steps: Tuple[LedgerStep, ...]
    result: Number
    params: Dict[str, int] = field(default_factory=dict)
    flags: Tuple[str, ...] = ()
    depends: Dict[str, Number] = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "result": str(self.result), "params": dict(self.params),
                "chain": [s.to_dict() for s in self.steps], "flags": list(self.flags),
                "depends": {k: str(v) for k, v in self.depends.items()}}

@dataclass(frozen=True)
class Chain:
    """Steps (label, expression, anchor) of one constant; the last step is the result.

    requires are (condition, message) pairs checked before the steps; flags
    are (condition or None, message) pairs, messages formatted with the
    step values.
    """
    steps: Tuple[Tuple[str, str, str], ...]
    params: Dict[str, int] = field(default_factory=dict)
    requires: Tuple[Tuple[str, str], ...] = ()
    flags: Tuple[Tuple[object, str], ...] = ()

# Anchors quote the statement each step reproduces.
ENTRIES = {
    "bicorn_neighborhood": Chain((
        ("first_written", "solve_self_bound(4, -2, 1, 0)", "“k ≤ ⌈log₂(4k − 2)⌉” (case as written)"),
        ("first_restored", "solve_self_bound(4, -2, 2, -1)", "“k ≤ ⌈log₂(4k − 2)⌉” read with 2n − 1"),
        ("second_written", "solve_self_bound(6, 0, 1, 0)", "“≤ ⌈log₂(6k)⌉” (case as written)"),
        ("second_restored", "solve_self_bound(6, 0, 2, -1)", "“≤ ⌈log₂(6k)⌉” read with 2n − 1"),
        ("neither", "solve_self_bound(8, 2, 2, -1)", "“k ≤ 2⌈log₂(8k+2)⌉ − 1”, “we can deduce k ≤ 13”"),
        ("radius", "max(first_written, first_restored, second_written, second_restored, neither)",
         "“contained in the 13-neighborhood”")),
        flags=((None, "both endpoints near: as written gives {first_written}, with 2⌈·⌉-1 gives {first_restored}"),
               (None, "one endpoint near: as written gives {second_written}, with 2⌈·⌉-1 gives {second_restored}"))),
    "hyperbolicity": Chain((
        ("neighborhood", "bicorn_neighborhood", "“contained in the 13-neighborhood”"),
        ("center", "neighborhood + 2", "“η is a 15-center”"))),
    "hausdorff_geodesic_to_bicorn": Chain((
        ("gap", "bicorn_neighborhood + bicorn_neighborhood + 2", "“≤ 28/2 + 12 = 26”"),
        ("half", "gap / 2", "“≤ 28/2 + 12 = 26”"),
        ("distance", "half + 12", "“≤ 28/2 + 12 = 26”")),
        flags=((None, "the +12 term is taken as stated"),)),
    "hausdorff_via_augmented": Chain((
        ("augmented", "17", "“the Hausdorff distance in G_2(F) is bounded by 17”"),
        ("distance", "2 * augmented", "“bounded by 34”")),
        flags=((None, "the augmented Hausdorff distance 17 is taken as stated"),)),
    "dist_bc_bound": Chain((
        ("n", "ceil_log2(m)", "“2n − 1 = 2⌈log₂(m)⌉ − 1”"),
        ("distance", "2 * n - 1", "“d_F(b, x_l) ≤ 2n − 1”")),
        params={"m": 8}, requires=(("m >= 2", "dist_bc_bound needs a path of length m >= 2, got {m}"),)),
    "dist_bc_aug_bound": Chain((
        ("n", "ceil_log2(m)", "“n + 1 = ⌈log₂(m)⌉ + 1”"),
        ("distance", "n + 1", "“d_G(b, x_l) ≤ n + 1”")),
        params={"m": 8}, requires=(("m >= 2", "dist_bc_aug_bound needs a path of length m >= 2, got {m}"),)),
    "small_intersection_distance": Chain((
        ("reduced", "2", "“d_F(α, γ) + d_F(γ, β) ≤ 2 + 2 ≤ 4”"),
        ("distance", "reduced + 2", "“d_F(α,β) ≤ 4”"))),
    "bgit_far_away": Chain((
        ("margin", "18 - bicorn_neighborhood", "“each (γ₁, γ₂)-bicorn curve b is at least 5 away from β”"),
        ("crossings", "2 ** 3 + 1", "“i(α, β) ≤ 8. Then d_F(α, β) ≤ 4”, “we have that i(β, b) ≥ 9”"),
        ("on_arc", "ceil(crossings / 2)", "“either the γ₁-arc or γ₂-arc of each (γ₁, γ₂)-bicorn curve intersects β at least thrice”"),
        ("distance", "1 + 2", "“d_{F′}(c, c_{K+1}) ≤ d_{F′}(c, c_K) + d_{F′}(c_K, c_{K+1}) ≤ 1 + 2”")),
        requires=(("18 - bicorn_neighborhood > small_intersection_distance",
                   "the margin does not exceed the small-intersection distance"),)),
    "bgit_nonannular_cases": Chain((
        ("ends", "18 + 18", "“d_F(g₁, g₂) = 36”"),
        ("middle", "ends - 8 * 2", "“the head and bottom subpaths of P of length 8”"),
        ("far", "3 + middle + 3", "“3 + (36 − 8 × 2) + 3 = 26”"),
        ("both_far", "3 + far + 3", "“3+26 +3 = 32”"),
        ("mixed", "3 + 3 + 10 + 10 + 3", "“3 + 3 + 10 + 10 + 3 ≤ 29”"),
        ("near", "3 + 10 + 10 + 3", "“3 + 10 + 10 + 3 = 26”"),
        ("diameter", "max(both_far, mixed, near)", "“3+26 +3 = 32”"))),
    "webb_transfer": Chain((
        ("path", "L", "“d_Z(a_i, a_{i+1}) = 1”"),
        ("distance", "path + 4", "“L + 4”")),
        params={"L": 4}),
    "annular_step": Chain((
        ("path", "4", "“the sequence γ₁, b₁, η, b₂, γ₂”, “a path of length ≤ 4”"),
        ("distance", "path + 4", "“at most 8 away”"))),
    "bgit_annular": Chain((
        ("near", "hausdorff_via_augmented", "“bounded by 34”"),
        ("diameter", "annular_step + 18 + 18 + annular_step", "“8 + 18 + 18 + 8 = 52”"))),
    "retraction_bound": Chain((
        ("diameter", "bgit_nonannular_cases", "“3+26 +3 = 32”"),
        ("bound", "2 * diameter", "“64 is an upper bound”"))),
    "aug_bicorn_neighborhood": Chain((
        ("t", "solve_self_bound(8, 0, 1, 1)", "“t ≤ ⌈log₂(8t)⌉ + 1”, “This implies t ≤ 7”"),
        ("long", "ceil_log2(8 * t) + 1", "“t ≤ ⌈log₂(8t)⌉ + 1”"),
        ("short", "ceil_log2(t) + 4", "“= ⌈log₂(t)⌉ + 4”"),
        ("radius", "t", "“contained in the 7-neighborhood”")),
        requires=(("ceil_log2(8 * solve_self_bound(8, 0, 1, 1)) + 1 == ceil_log2(solve_self_bound(8, 0, 1, 1)) + 4",
                   "⌈log₂(8t)⌉ + 1 and ⌈log₂ t⌉ + 4 disagree"),)),
    "aug_hyperbolicity": Chain((
        ("neighborhood", "aug_bicorn_neighborhood", "“contained in the 7-neighborhood”"),
        ("center", "neighborhood + 1", "“Δ has an 8-center”"))),
    "aug_geodesic_to_bicorn": Chain((
        ("path", "aug_bicorn_neighborhood + 1 + aug_bicorn_neighborhood", "“bounded above by 7 + 1 + 7 = 15”"),
        ("distance", "path - 1", "“at most 14 away”"))),
    "log3_at_4": Chain((
        ("argument", "9 * 4 / 4", "“when i(α, β) = 4”"),
        ("exponent", "ceil_log(argument, 3)", "“2 log₃ 9 = 4”"),
        ("bound", "2 * exponent", "“our upper bound is equal to 2 log₃(9/4 · i(α, β)) = 2 log₃ 9 = 4”")),),
    "log3_base_margin": Chain((
        ("at_2", "81 * 2 ** 2 - 16 * 3 ** 2", "“i(α, β) < 2 log₃(9/4 · i(α, β))” at i = 2"),
        ("at_3", "81 * 3 ** 2 - 16 * 3 ** 3", "“i(α, β) < 2 log₃(9/4 · i(α, β))” at i = 3"),
        ("margin", "min(at_2, at_3)", "“Case 2 ≤ i(α, β) ≤ 3”"))),
    "short_geodesic_margin": Chain((
        ("threshold", "(10 + t) - t", "“d_F(g, β) ≥ 10 + t”, “every vertex of G is at least 10 away from β”"),
        ("radius", "2 * ceil_log2(t) - 1", "“2n − 1 = 2⌈log₂(m)⌉ − 1” with m = t"),
        ("margin", "threshold - radius", "“each (h₁, h₂)-bicorn curve in B is at least 5 away from β”")),
        params={"t": 8}, requires=(("4 <= t <= 8", "short geodesic length must lie in 4..8, got {t}"),),
        flags=(("margin < 5", "margin {margin} below 5"),)),
    "nonorientable_genus3": Chain((
        ("chi", "2 - 3", "“a closed non-orientable surface of genus 3 (i.e. χ(F) = −1)”"),
        ("excluded", "chi", "“i(α, β) ≤ 2 ⇒ d_F(α, β) ≤ 2, which does not hold”")),
        flags=(("chi > -2", "χ = {chi} lies outside χ <= -2"),)),
}

class _Scope:
    """Name resolution for one entry: parameters, earlier steps, then other entries."""
    def __init__(self, name, params, results, fresh):
        self.name = name
        self.values = {k: _num(v) for k, v in params.items()}
        self.results = results
        self.fresh = fresh
        self.depends = {}

    def __call__(self, key):
        if key in self.values:
            return Fraction(self.values[key])
        if key in ENTRIES and key != self.name:
            if key not in self.results:
                if not self.fresh:
                    raise ValueError(f"{self.name} depends on {key}, which is missing")
                self.results[key] = entry(key, _results=self.results).result
            self.depends[key] = self.results[key]
            return Fraction(self.results[key])
        raise ValueError(f"Unknown name {key} in ledger entry {self.name}")

def _check(ok, message, scope):
    if ok is not True:
        raise ValueError(message.format(**scope.values))

def entry(name, _results=None, **params):
    """Evaluate one ledger entry.

    Parameters
    ----------
    name : str
        Key of ENTRIES
    **params
        Parameters of parametric entries (m, L, t)

    Raises
    ------
    ValueError
        For an unknown entry or parameter, or a parameter out of range
    """
    try:
        chain = ENTRIES[name]
    except KeyError:
        raise ValueError(f"Unknown ledger entry {name}") from None
    unknown = set(params) - set(chain.params)
    if unknown:
        raise ValueError(f"Unknown parameters {sorted(unknown)} for ledger entry {name}")
    params = {**chain.params, **params}
    scope = _Scope(name, params, {} if _results is None else _results, True)
    for cond, message in chain.requires:
        _check(evaluate(cond, scope), message, scope)
    steps = []
    for label, expression, anchor in chain.steps:
        value = evaluate(expression, scope)
        scope.values[label] = value
        steps.append(LedgerStep(label, expression, value, anchor))
    flags = tuple(message.format(**scope.values) for cond, message in chain.flags
                  if cond is None or evaluate(cond, scope) is True)
    return LedgerEntry(name, tuple(steps), steps[-1].value, params, flags, dict(scope.depends))

def ledger(m=8, L=4):
    """Every ledger entry, with parametric entries at the given parameters
    and the short-geodesic margin for each length 4..8."""
    results, entries = {}, []
    for name, chain in ENTRIES.items():
        if name in ("dist_bc_bound", "dist_bc_aug_bound"):
            entries.append(entry(name, _results=results, m=m))
        elif name == "webb_transfer":
            entries.append(entry(name, _results=results, L=L))
        elif name == "short_geodesic_margin":
            entries.extend(entry(name, _results=results, t=t) for t in range(4, 9))
        else:
            e = entry(name, _results=results)
            results[name] = e.result
            entries.append(e)
    return entries

def replay_problems(e, results=None):
    """Recompute every step of an entry from its own expressions.

    Earlier step labels take the values stored in the entry, so each
    step is checked on its own. Results of other entries come from
    `results` (name -> value) when given, else they are recomputed.

    Returns
    -------
    list of str
        Empty if every step, the result and the dependencies agree
    """
    problems = []
    scope = _Scope(e.name, e.params, {} if results is None else dict(results), results is None)
    for s in e.steps:
        try:
            value = evaluate(s.expression, scope)
        except ValueError as err:
            problems.append(f"{e.name}.{s.label}: {err}")
            continue
        if value != s.value:
            problems.append(f"{e.name}.{s.label}: {s.expression} = {value}, recorded {s.value}")
        scope.values[s.label] = s.value
    if not e.steps or e.result != e.steps[-1].value:
        problems.append(f"{e.name}: result {e.result} is not the value of the last step")
    for dep, value in e.depends.items():
        if scope.depends.get(dep, value) != value:
            problems.append(f"{e.name}: depends on {dep} = {scope.depends[dep]}, recorded {value}")
    return problems

def replay(e, results=None):
    """True if every step of the entry recomputes to its recorded value."""
    return not replay_problems(e, results)

def replay_ledger(entries):
    """Replay a whole ledger, resolving dependencies from the entries themselves.

    Returns
    -------
    dict
        Entry name -> problems, for the entries that fail
    """
    results = {e.name: e.result for e in entries if not e.params}
    failed = {}
    for e in entries:
        problems = replay_problems(e, results)
        if problems:
            failed.setdefault(e.name, []).extend(problems)
    return failed

def ledger_table(entries):
    width = max(len(e.name) for e in entries)
    lines = []
    for e in entries:
        params = ", ".join("%s=%s" %kv for kv in e.params.items())
        label = e.name + ("(%s)" %params if params else "")
        lines.append("%s  %s" %(label.ljust(width + 6), e.result))
        for s in e.steps:
            lines.append("    %-16s = %-52s = %-6s %s" %(s.label, s.expression, s.value, s.anchor))
        for f in e.flags:
            lines.append("    ! %s" %f)
    return "\n".join(lines)
