"""Finite model of the 5-class group as F5^2 with its Galois action.

The normal closure k has Galois group over Q generated by sigma (order 5)
and tau (order 4) with tau*sigma*tau^-1 = sigma^2. On a (5,5) class group
these act by matrices S, T over F5; the standing rank-1 hypothesis makes S
a non-identity unipotent. The six order-5 subgroups are the six lines of
F5^2; tau^2 splits the group into +1/-1 eigenlines, labels the subgroup
lattice, and constrains which capitulation patterns can occur in the six
unramified quintic extensions K1..K6.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InputError, ModelInvariantError, NoWitnessFound
from .intarith import sieve_primes
from .cyclo import CycInt
from .radicand import RadicandForm, Verdict, classify

Mat = tuple[tuple[int, int], tuple[int, int]]
Vec = tuple[int, int]

I2: Mat = ((1, 0), (0, 1))


def mat_mul(a: Mat, b: Mat) -> Mat:
    return (
        (
            (a[0][0] * b[0][0] + a[0][1] * b[1][0]) % 5,
            (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % 5,
        ),
        (
            (a[1][0] * b[0][0] + a[1][1] * b[1][0]) % 5,
            (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % 5,
        ),
    )


def mat_pow(a: Mat, k: int) -> Mat:
    r = I2
    for _ in range(k):
        r = mat_mul(r, a)
    return r


def mat_det(a: Mat) -> int:
    return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % 5


def mat_inv(a: Mat) -> Mat:
    d = mat_det(a)
    if d == 0:
        raise InputError(f"matrix {a} is singular over F5")
    di = pow(d, -1, 5)
    return (
        (a[1][1] * di % 5, -a[0][1] * di % 5),
        (-a[1][0] * di % 5, a[0][0] * di % 5),
    )


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(tuple((a[i][j] - b[i][j]) % 5 for j in range(2)) for i in range(2))


def mat_vec(a: Mat, v: Vec) -> Vec:
    return ((a[0][0] * v[0] + a[0][1] * v[1]) % 5, (a[1][0] * v[0] + a[1][1] * v[1]) % 5)


def line_of(v: Vec) -> Vec:
    """Normalized direction of the line through v: (1, c) or (0, 1)."""
    x, y = v[0] % 5, v[1] % 5
    if x:
        return (1, y * pow(x, -1, 5) % 5)
    if y:
        return (0, 1)
    raise InputError("the zero vector spans no line")


#: the six lines of F5^2 in a fixed order
ALL_LINES: tuple[Vec, ...] = ((0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4))


def kernel_line(m: Mat) -> Vec:
    """The kernel of a singular nonzero 2x2 matrix, as a line."""
    for v in ((m[0][1], -m[0][0]), (m[1][1], -m[1][0])):
        if v[0] % 5 or v[1] % 5:
            return line_of(v)
    raise InputError("kernel of the zero matrix is the whole plane")


def image_line(m: Mat) -> Vec:
    """The image of a rank-1 2x2 matrix, as a line."""
    for v in ((m[0][0], m[1][0]), (m[0][1], m[1][1])):
        if v[0] % 5 or v[1] % 5:
            return line_of(v)
    raise InputError("the zero matrix has no image line")


@dataclass(frozen=True)
class ClassGroupModel:
    """Matrices S (action of sigma) and T (action of tau) on F5^2."""

    S: Mat
    T: Mat

    def __post_init__(self):
        bad = invariant_violations(self.S, self.T)
        if bad:
            raise ModelInvariantError("; ".join(bad))


def invariant_violations(S: Mat, T: Mat) -> list[str]:
    """All failures of the model relations for the pair (S, T)."""
    out = []
    if mat_pow(S, 5) != I2:
        out.append("S^5 != I")
    if S == I2:
        out.append("S = I (ambiguous subgroup would have rank 2)")
    if mat_det(T) == 0:
        out.append("T is singular")
        return out
    if mat_pow(T, 4) != I2:
        out.append("T^4 != I")
    if mat_mul(mat_mul(T, S), mat_inv(T)) != mat_pow(S, 2):
        out.append("T S T^-1 != S^2")
    T2 = mat_mul(T, T)
    if (T2[0][0] + T2[1][1]) % 5 != 0 or mat_det(T2) != 4:
        out.append("T^2 does not have eigenvalues +1 and -1")
    return out


def canonical_model() -> ClassGroupModel:
    """The reference model: S unipotent, T = diag(1, 3)."""
    return ClassGroupModel(((1, 1), (0, 1)), ((1, 0), (0, 3)))


def ambiguous_subgroup(model: ClassGroupModel) -> Vec:
    """ker(S - I): the line of classes fixed by sigma."""
    return kernel_line(mat_sub(model.S, I2))


def principal_genus_line(model: ClassGroupModel) -> Vec:
    """im(S - I): the line of classes of the form A^(1-sigma)."""
    return image_line(mat_sub(model.S, I2))


def minus_eigenline(model: ClassGroupModel) -> Vec:
    """The line inverted by tau^2."""
    T2 = mat_mul(model.T, model.T)
    return kernel_line(tuple(tuple((T2[i][j] + I2[i][j]) % 5 for j in range(2)) for i in range(2)))


def plus_eigenline(model: ClassGroupModel) -> Vec:
    """The line fixed pointwise by tau^2."""
    T2 = mat_mul(model.T, model.T)
    return kernel_line(mat_sub(T2, I2))


#: intermediate-field names in the fixed H1..H6 order
FIELD_NAMES = (
    "K1 = (k/k0)*",
    "K2 = k.Gamma5(1)",
    "K3 = k.Gamma'5(1)",
    "K4 = k.Gamma''5(1)",
    "K5 = k.Gamma'''5(1)",
    "K6 = k.Gamma''''5(1)",
)


@dataclass(frozen=True)
class SubgroupLattice:
    """The six order-5 subgroups H1..H6 with their field labels.

    H1 is the ambiguous line (fixed by S), H2 the tau^2-inverted line; the
    remaining four lines are H3..H6 in lexicographic order of their
    normalized directions (any relabeling of those four is a symmetry of
    the model).
    """

    lines: tuple[Vec, ...]
    field_names: tuple[str, ...] = FIELD_NAMES

    def to_json(self) -> dict:
        return {
            "subgroups": [
                {"label": f"H{i+1}", "line": list(v), "field": self.field_names[i]}
                for i, v in enumerate(self.lines)
            ]
        }


def build_lattice(model: ClassGroupModel) -> SubgroupLattice:
    h1 = ambiguous_subgroup(model)
    h2 = minus_eigenline(model)
    if h1 == h2:
        raise ModelInvariantError(
            "the ambiguous line is inverted by tau^2; this pair cannot model the "
            "arithmetic situation (ambiguous classes descend from the real subfield "
            "and are tau^2-fixed)"
        )
    rest = sorted(v for v in ALL_LINES if v not in (h1, h2))
    return SubgroupLattice((h1, h2, *rest))


def tau2_permutation(model: ClassGroupModel, lattice: SubgroupLattice | None = None) -> tuple[int, ...]:
    """Permutation induced by tau^2 on H1..H6 (1-indexed images)."""
    if lattice is None:
        lattice = build_lattice(model)
    T2 = mat_mul(model.T, model.T)
    perm = []
    for v in lattice.lines:
        img = line_of(mat_vec(T2, v))
        perm.append(lattice.lines.index(img) + 1)
    return tuple(perm)


@dataclass(frozen=True)
class RankCheckReport:
    order5_count: int
    all_fixed_lines: bool

    @property
    def passed(self) -> bool:
        return self.order5_count == 24 and self.all_fixed_lines


def brute_force_rank_check() -> RankCheckReport:
    """Every order-5 matrix over F5 fixes exactly a line (rank >= 1).

    The 24 non-identity unipotents are all of them; each has a
    one-dimensional fixed space, never more.
    """
    count = 0
    all_dim_one = True
    for flat in product(range(5), repeat=4):
        m: Mat = ((flat[0], flat[1]), (flat[2], flat[3]))
        if m == I2 or mat_pow(m, 5) != I2:
            continue
        count += 1
        mi = mat_sub(m, I2)
        fixed = [v for v in ALL_LINES if line_of(mat_vec(m, v)) == v and mat_vec(mi, v) == (0, 0)]
        if len(fixed) != 1:
            all_dim_one = False
    return RankCheckReport(count, all_dim_one)


@dataclass(frozen=True)
class ModelSurvey:
    """Exhaustive statistics over every (S, T) pair satisfying the model relations."""

    pairs_total: int
    kernel_dim_one: int
    kernel_equals_image: int
    kernel_tau2_stable: int
    tau2_pointwise_fixed: int
    tau2_pointwise_inverted: int
    ambiguity_operator_ok: bool
    order5_count: int

    @property
    def passed(self) -> bool:
        n = self.pairs_total
        return (
            n > 0
            and self.kernel_dim_one == n
            and self.kernel_equals_image == n
            and self.kernel_tau2_stable == n
            and self.tau2_pointwise_fixed + self.tau2_pointwise_inverted == n
            and self.ambiguity_operator_ok
            and self.order5_count == 24
        )

    def to_json(self) -> dict:
        return {
            "pairs_total": self.pairs_total,
            "kernel_dim_one": self.kernel_dim_one,
            "kernel_equals_image": self.kernel_equals_image,
            "kernel_tau2_stable": self.kernel_tau2_stable,
            "tau2_pointwise_fixed": self.tau2_pointwise_fixed,
            "tau2_pointwise_inverted": self.tau2_pointwise_inverted,
            "ambiguity_operator_ok": self.ambiguity_operator_ok,
            "order5_count": self.order5_count,
            "passed": self.passed,
        }


def model_survey() -> ModelSurvey:
    """Check the ambiguous/principal-genus identities over all valid pairs.

    For every pair: ker(S - I) is one line, equals im(S - I), and is carried
    to itself by tau^2 (it is one of the lines the induced permutation
    fixes). Whether tau^2 restricts to +1 or -1 on that line is NOT decided
    by the matrix relations: both happen, in equal numbers. The arithmetic
    situation realizes the +1 half (ambiguous classes are tau^2-fixed, a
    fact imported from the strong-ambiguity theory, not from linear
    algebra); the canonical model lies in that half. The survey also checks
    the repaired ambiguity operator S^3 + 3S^2 + 2S - I, whose image always
    lands in the ambiguous line (it collapses to S - I for unipotent S over
    F5).
    """
    mats = [((a, b), (c, d)) for a in range(5) for b in range(5) for c in range(5) for d in range(5)]
    order5 = [m for m in mats if m != I2 and mat_pow(m, 5) == I2]

    pairs = kdim = keqi = stable = pfix = pinv = 0
    amb_ok = True
    for S in order5:
        SI = mat_sub(S, I2)
        ker = kernel_line(SI)
        im = image_line(SI)
        op = tuple(
            tuple(
                (mat_pow(S, 3)[i][j] + 3 * mat_pow(S, 2)[i][j] + 2 * S[i][j] - I2[i][j]) % 5
                for j in range(2)
            )
            for i in range(2)
        )
        for v in product(range(5), repeat=2):
            w = mat_vec(op, v)
            if w != (0, 0) and line_of(w) != ker:
                amb_ok = False
        for T in mats:
            if invariant_violations(S, T):
                continue
            pairs += 1
            kdim += 1  # ker of a non-identity unipotent is always one line
            if ker == im:
                keqi += 1
            T2 = mat_mul(T, T)
            w = mat_vec(T2, ker)
            if line_of(w) == ker:
                stable += 1
                if w == ker:
                    pfix += 1
                elif w == ((-ker[0]) % 5, (-ker[1]) % 5):
                    pinv += 1
    return ModelSurvey(pairs, kdim, keqi, stable, pfix, pinv, amb_ok, len(order5))


def enumerate_capitulation_types(
    require_nontrivial_kernel: bool = True,
    require_ambiguous_capitulates: bool = True,
    require_uniform_conjugates: bool = True,
) -> tuple[tuple[int, ...], ...]:
    """All admissible capitulation 6-tuples over {0..6}.

    Entry i_j = 0 means every class capitulates in K_j; i_j in 1..6 means
    exactly the cyclic subgroup H_{i_j} does. Constraints:

      (a) each K_j has a nontrivial capitulation kernel -- automatic in
          this encoding, since every entry value names a nontrivial kernel;
      (b) the ambiguous subgroup H1 capitulates in every K_j, forcing
          i_j in {0, 1};
      (c) the tau^2 conjugacy of K2..K6 forces entries 2..6 to agree.

    With all three active exactly four tuples survive.
    """
    out = []
    for t in product(range(7), repeat=6):
        if require_nontrivial_kernel and not all(0 <= e <= 6 for e in t):
            continue
        if require_ambiguous_capitulates and not all(e in (0, 1) for e in t):
            continue
        if require_uniform_conjugates and len(set(t[1:])) != 1:
            continue
        out.append(t)
    return tuple(sorted(out))


EXPECTED_CAPITULATION_TYPES = (
    (0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1, 1),
    (1, 0, 0, 0, 0, 0),
    (1, 1, 1, 1, 1, 1),
)


TAU2_PROOF_NOTE = (
    "tau^2 permutes the six intermediate fields as an involution: K1 and K2 are "
    "fixed and the remaining fields swap in two 2-cycles. A 5-cycle account of "
    "this action on K2..K6 (K2->K4->K6->K3->K5->K2) is incompatible with "
    "tau^4 = 1 and is superseded by the computed involution."
)

HYPOTHESIS_NOTE = (
    "family verdicts are necessary-condition candidates: the (5,5) shape of the "
    "5-class group and the rank-1 ambiguous hypothesis are assumed, not computed"
)


@dataclass(frozen=True)
class Condition:
    description: str
    symbol: int | None
    passed: bool

    def to_json(self) -> dict:
        return {"description": self.description, "symbol": self.symbol, "passed": self.passed}


@dataclass(frozen=True)
class GeneratorCertificate:
    """Symbolic generators of the class group with their residue conditions."""

    n: int
    verdict: Verdict
    applicable: bool
    conditions: tuple[Condition, ...]
    generators: tuple[dict, ...] | None
    splitting: str
    auxiliary_prime: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "form": self.verdict.value,
            "applicable": self.applicable,
            "conditions": [c.to_json() for c in self.conditions],
            "generators": list(self.generators) if self.generators else None,
            "splitting": self.splitting,
            "auxiliary_prime": self.auxiliary_prime,
        }


_WITNESS_BOUND = 10**4

RESIDUE_READING_NOTE = (
    "residue conditions at p = -1 mod 5 are evaluated in the residue field "
    "F_{p^2} of a prime above p; every rational integer is a fifth power "
    "there (the multiplicative group mod p has order coprime to 5 and lies "
    "inside the fifth powers of F_{p^2}), so such a condition on a rational "
    "value cannot hold and the certificate reports itself inapplicable. The "
    "alternative naive reading modulo p is vacuous in the opposite "
    "direction: x -> x^5 is a bijection mod p."
)


def _nonresidue_condition(a: int, p: int, label: str) -> Condition:
    from .primes import factor_rational_prime
    from .symbols import quintic_symbol

    q = factor_rational_prime(p)[0]
    i = quintic_symbol(CycInt(a), q)
    return Condition(f"{label} is not a quintic residue modulo {p}", i, i != 0)


def _find_witness(p: int, excluded: set[int]) -> tuple[int, Condition]:
    for l in sieve_primes(_WITNESS_BOUND):
        if l in excluded:
            continue
        cond = _nonresidue_condition(l, p, f"l = {l}")
        if cond.passed:
            return l, cond
    raise NoWitnessFound(
        f"no auxiliary prime l <= {_WITNESS_BOUND} is a quintic non-residue mod {p}"
    )


def generator_certificate(n: int, form: RadicandForm | None = None) -> GeneratorCertificate:
    """Generators of the class group under the family's residue conditions.

    Forms I and II: when the fixed condition (5, resp. q, a quintic
    non-residue mod p) holds, the group is generated by [P1] above p and
    [L]^(1-tau^2) for the smallest auxiliary non-residue prime l; p splits
    in k as p*O_k = P1^5 * P2^5. Form III: when 5 is a non-residue mod p,
    the classes of two of the five primes above 5 generate, with
    5*O_k = B1^4 ... B5^4. A failed fixed condition marks the certificate
    inapplicable instead of emitting generators.
    """
    if form is None:
        form = classify(n)
    if form.verdict is Verdict.NONE:
        raise InputError(f"{n} is not in any of the three families")
    p = form.p

    if form.verdict is Verdict.FORM_III:
        fixed = _nonresidue_condition(5, p, "5")
        if not fixed.passed:
            return GeneratorCertificate(n, form.verdict, False, (fixed,), None,
                                        "5 O_k = B1^4 B2^4 B3^4 B4^4 B5^4", None)
        generators = (
            {"class": "[B1]", "ideal": "B1", "above": 5, "operator": "1"},
            {"class": "[B2]", "ideal": "B2", "above": 5, "operator": "1"},
        )
        return GeneratorCertificate(
            n, form.verdict, True, (fixed,), generators,
            "5 O_k = B1^4 B2^4 B3^4 B4^4 B5^4", None,
        )

    fixed_value = 5 if form.verdict is Verdict.FORM_I else form.q
    fixed = _nonresidue_condition(fixed_value, p, str(fixed_value))
    if not fixed.passed:
        return GeneratorCertificate(n, form.verdict, False, (fixed,), None,
                                    f"{p} O_k = P1^5 P2^5", None)
    excluded = {5, p} if form.verdict is Verdict.FORM_I else {5, p, form.q}
    l, aux = _find_witness(p, excluded)
    generators = (
        {"class": "[P1]", "ideal": "P1", "above": p, "operator": "1"},
        {"class": "[L]^(1-tau^2)", "ideal": "L", "above": l, "operator": "1-tau^2"},
    )
    return GeneratorCertificate(
        n, form.verdict, True, (fixed, aux), generators, f"{p} O_k = P1^5 P2^5", l
    )
