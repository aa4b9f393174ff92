//! Abstract syntax for the language of third order arithmetic: three sorts of
//! variables, numerical terms, formulas with membership at two levels, and the
//! binding discipline (free variables, capture-checked substitution, alpha
//! equivalence, formula classification).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Variable sort. First order variables range over numbers, second order over
/// sets of numbers, third order over classes of sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sort {
    First,
    Second,
    Third,
}

/// A named variable of a fixed sort.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub name: String,
    pub sort: Sort,
}

impl Var {
    pub fn first(name: impl Into<String>) -> Var {
        Var { name: name.into(), sort: Sort::First }
    }

    pub fn second(name: impl Into<String>) -> Var {
        Var { name: name.into(), sort: Sort::Second }
    }

    pub fn third(name: impl Into<String>) -> Var {
        Var { name: name.into(), sort: Sort::Third }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sort {
            Sort::Third => write!(f, "@{}", self.name),
            _ => write!(f, "{}", self.name),
        }
    }
}

/// Numerical terms: built from `0` and first order variables by successor,
/// addition, multiplication, and the primitive pairing symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Var(String),
    Succ(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
    Pair(Box<Term>, Box<Term>),
}

impl Term {
    /// The numeral for `n`: `0` followed by `n` successor marks.
    pub fn numeral(n: u64) -> Term {
        let mut t = Term::Zero;
        for _ in 0..n {
            t = Term::Succ(Box::new(t));
        }
        t
    }

    /// If the term is an iterated successor of `0`, its numeric value.
    pub fn as_numeral(&self) -> Option<u64> {
        match self {
            Term::Zero => Some(0),
            Term::Succ(t) => t.as_numeral().map(|n| n + 1),
            _ => None,
        }
    }

    /// Names of the (necessarily first order) variables occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_vars(&mut acc);
        acc
    }

    fn collect_vars(&self, acc: &mut BTreeSet<String>) {
        match self {
            Term::Zero => {}
            Term::Var(n) => {
                acc.insert(n.clone());
            }
            Term::Succ(t) => t.collect_vars(acc),
            Term::Plus(a, b) | Term::Times(a, b) | Term::Pair(a, b) => {
                a.collect_vars(acc);
                b.collect_vars(acc);
            }
        }
    }
}

/// Formulas. Membership has two levels: a term in a second order variable
/// (`MemSN`) and a second order variable in a third order variable (`MemNP`).
/// `Prec` is the reserved ordering on second order variables, admitted only in
/// `cm-plus` mode. There is no constructor for falsity: `⊥` is the formula
/// `0 = 1`, and in bot-normal scripts `~p` is `p -> 0 = 1`. `Not` is kept as a
/// primitive constructor for the negation-primitive (Hilbert) presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    MemSN(Term, Var),
    MemNP(Var, Var),
    Prec(Var, Var),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

/// Classification used to gate excluded middle: arithmetical formulas contain
/// no second or third order quantifiers (free higher-sort variables are fine).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaClass {
    Atomic,
    Arithmetical,
    General,
}

impl fmt::Display for FormulaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormulaClass::Atomic => "atomic",
            FormulaClass::Arithmetical => "arithmetical",
            FormulaClass::General => "general",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("capture: {0}")]
    Capture(String),
    #[error("sort mismatch: {0}")]
    Sort(String),
}

/// What a quantified variable may be instantiated with: a numerical term for a
/// first order variable, or a variable of matching sort for a higher one (the
/// language has no composite higher-sort terms).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Instantiation {
    Term(Term),
    SetVar(Var),
}

impl Instantiation {
    pub fn sort(&self) -> Sort {
        match self {
            Instantiation::Term(_) => Sort::First,
            Instantiation::SetVar(v) => v.sort,
        }
    }

    /// Variables of the instantiation, as full sorted variables.
    pub fn vars(&self) -> BTreeSet<Var> {
        match self {
            Instantiation::Term(t) => t.vars().into_iter().map(Var::first).collect(),
            Instantiation::SetVar(v) => {
                let mut s = BTreeSet::new();
                s.insert(v.clone());
                s
            }
        }
    }
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

pub fn zero() -> Term {
    Term::Zero
}

pub fn tvar(name: impl Into<String>) -> Term {
    Term::Var(name.into())
}

pub fn succ(t: Term) -> Term {
    Term::Succ(Box::new(t))
}

pub fn plus(a: Term, b: Term) -> Term {
    Term::Plus(Box::new(a), Box::new(b))
}

pub fn times(a: Term, b: Term) -> Term {
    Term::Times(Box::new(a), Box::new(b))
}

pub fn pair(a: Term, b: Term) -> Term {
    Term::Pair(Box::new(a), Box::new(b))
}

pub fn eq(a: Term, b: Term) -> Formula {
    Formula::Eq(a, b)
}

/// `t ∈ X` for second order `X`.
pub fn mem(t: Term, set: Var) -> Formula {
    assert_eq!(set.sort, Sort::Second, "membership t in X needs a second order X");
    Formula::MemSN(t, set)
}

/// `X ∈ C` for second order `X` and third order `C`.
pub fn mem3(set: Var, class: Var) -> Formula {
    assert_eq!(set.sort, Sort::Second, "membership X in @C needs a second order X");
    assert_eq!(class.sort, Sort::Third, "membership X in @C needs a third order @C");
    Formula::MemNP(set, class)
}

pub fn prec(a: Var, b: Var) -> Formula {
    assert_eq!(a.sort, Sort::Second, "`<<` relates second order variables");
    assert_eq!(b.sort, Sort::Second, "`<<` relates second order variables");
    Formula::Prec(a, b)
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Imp(Box::new(a), Box::new(b))
}

/// Primitive negation (negation-primitive presentation).
pub fn not(a: Formula) -> Formula {
    Formula::Not(Box::new(a))
}

pub fn forall(v: Var, body: Formula) -> Formula {
    Formula::Forall(v, Box::new(body))
}

pub fn exists(v: Var, body: Formula) -> Formula {
    Formula::Exists(v, Box::new(body))
}

/// `⊥`, the formula `0 = 1`.
pub fn bot() -> Formula {
    Formula::Eq(Term::Zero, Term::Succ(Box::new(Term::Zero)))
}

/// Negation in bot-normal form: `p -> 0 = 1`.
pub fn not_b(a: Formula) -> Formula {
    imp(a, bot())
}

/// `a <-> b` as the conjunction of the two implications.
pub fn iff(a: Formula, b: Formula) -> Formula {
    and(imp(a.clone(), b.clone()), imp(b, a))
}

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

/// The variables with at least one free occurrence in the formula.
pub fn free_vars(f: &Formula) -> BTreeSet<Var> {
    let mut acc = BTreeSet::new();
    let mut bound = Vec::new();
    collect_free(f, &mut bound, &mut acc);
    acc
}

fn collect_free(f: &Formula, bound: &mut Vec<Var>, acc: &mut BTreeSet<Var>) {
    let mut term = |t: &Term, bound: &Vec<Var>, acc: &mut BTreeSet<Var>| {
        for name in t.vars() {
            let v = Var::first(name);
            if !bound.contains(&v) {
                acc.insert(v);
            }
        }
    };
    match f {
        Formula::Eq(a, b) => {
            term(a, bound, acc);
            term(b, bound, acc);
        }
        Formula::MemSN(t, set) => {
            term(t, bound, acc);
            if !bound.contains(set) {
                acc.insert(set.clone());
            }
        }
        Formula::MemNP(a, b) | Formula::Prec(a, b) => {
            for v in [a, b] {
                if !bound.contains(v) {
                    acc.insert(v.clone());
                }
            }
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            collect_free(a, bound, acc);
            collect_free(b, bound, acc);
        }
        Formula::Not(a) => collect_free(a, bound, acc),
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            bound.push(v.clone());
            collect_free(body, bound, acc);
            bound.pop();
        }
    }
}

/// True iff no free occurrence of `x` in `f` lies inside the scope of a
/// quantifier binding a variable of the instantiation.
pub fn free_for(inst: &Instantiation, x: &Var, f: &Formula) -> bool {
    fn walk(f: &Formula, x: &Var, ivars: &BTreeSet<Var>) -> (bool, bool) {
        // returns (x occurs free, substitution is capture-free)
        match f {
            Formula::Eq(a, b) => (
                x.sort == Sort::First && (a.vars().contains(&x.name) || b.vars().contains(&x.name)),
                true,
            ),
            Formula::MemSN(t, set) => (
                (x.sort == Sort::First && t.vars().contains(&x.name)) || set == x,
                true,
            ),
            Formula::MemNP(a, b) | Formula::Prec(a, b) => (a == x || b == x, true),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                let (fa, oa) = walk(a, x, ivars);
                let (fb, ob) = walk(b, x, ivars);
                (fa || fb, oa && ob)
            }
            Formula::Not(a) => walk(a, x, ivars),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                if v == x {
                    return (false, true);
                }
                let (occurs, ok) = walk(body, x, ivars);
                (occurs, ok && !(occurs && ivars.contains(v)))
            }
        }
    }
    walk(f, x, &inst.vars()).1
}

/// Term-level convenience form of [`free_for`].
pub fn free_for_term(t: &Term, x: &Var, f: &Formula) -> bool {
    free_for(&Instantiation::Term(t.clone()), x, f)
}

/// Replace every free occurrence of `x` in `f` by the instantiation. No
/// renaming is performed: the substitution fails with `Capture` when it would
/// move a variable of the instantiation under a binder of the same name.
pub fn substitute_var(f: &Formula, x: &Var, inst: &Instantiation) -> Result<Formula, SubstError> {
    if inst.sort() != x.sort {
        return Err(SubstError::Sort(format!(
            "cannot substitute a {:?}-sort value for {x}",
            inst.sort()
        )));
    }
    if !free_for(inst, x, f) {
        return Err(SubstError::Capture(format!("substitution for {x} is not capture-free")));
    }
    Ok(subst(f, x, inst))
}

/// First order substitution `f[x := t]`, the form the axiom schemes quote.
pub fn substitute(f: &Formula, x: &Var, t: &Term) -> Result<Formula, SubstError> {
    if x.sort != Sort::First {
        return Err(SubstError::Sort(format!("{x} is not a first order variable")));
    }
    substitute_var(f, x, &Instantiation::Term(t.clone()))
}

fn subst_term(t: &Term, x: &str, r: &Term) -> Term {
    match t {
        Term::Zero => Term::Zero,
        Term::Var(n) => {
            if n == x {
                r.clone()
            } else {
                t.clone()
            }
        }
        Term::Succ(a) => Term::Succ(Box::new(subst_term(a, x, r))),
        Term::Plus(a, b) => Term::Plus(Box::new(subst_term(a, x, r)), Box::new(subst_term(b, x, r))),
        Term::Times(a, b) => {
            Term::Times(Box::new(subst_term(a, x, r)), Box::new(subst_term(b, x, r)))
        }
        Term::Pair(a, b) => Term::Pair(Box::new(subst_term(a, x, r)), Box::new(subst_term(b, x, r))),
    }
}

fn subst(f: &Formula, x: &Var, inst: &Instantiation) -> Formula {
    let in_term = |t: &Term| match inst {
        Instantiation::Term(r) if x.sort == Sort::First => subst_term(t, &x.name, r),
        _ => t.clone(),
    };
    let set_var = |v: &Var| match inst {
        Instantiation::SetVar(r) if v == x => r.clone(),
        _ => v.clone(),
    };
    match f {
        Formula::Eq(a, b) => Formula::Eq(in_term(a), in_term(b)),
        Formula::MemSN(t, set) => Formula::MemSN(in_term(t), set_var(set)),
        Formula::MemNP(a, b) => Formula::MemNP(set_var(a), set_var(b)),
        Formula::Prec(a, b) => Formula::Prec(set_var(a), set_var(b)),
        Formula::And(a, b) => and(subst(a, x, inst), subst(b, x, inst)),
        Formula::Or(a, b) => or(subst(a, x, inst), subst(b, x, inst)),
        Formula::Imp(a, b) => imp(subst(a, x, inst), subst(b, x, inst)),
        Formula::Not(a) => not(subst(a, x, inst)),
        Formula::Forall(v, body) => {
            if v == x {
                f.clone()
            } else {
                forall(v.clone(), subst(body, x, inst))
            }
        }
        Formula::Exists(v, body) => {
            if v == x {
                f.clone()
            } else {
                exists(v.clone(), subst(body, x, inst))
            }
        }
    }
}

/// Atomic / arithmetical / general, per the quantifier test: arithmetical
/// formulas contain no quantifier binding a second or third order variable.
pub fn classify(f: &Formula) -> FormulaClass {
    match f {
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => {
            FormulaClass::Atomic
        }
        _ => {
            if has_higher_quantifier(f) {
                FormulaClass::General
            } else {
                FormulaClass::Arithmetical
            }
        }
    }
}

fn has_higher_quantifier(f: &Formula) -> bool {
    match f {
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => false,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            has_higher_quantifier(a) || has_higher_quantifier(b)
        }
        Formula::Not(a) => has_higher_quantifier(a),
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            v.sort != Sort::First || has_higher_quantifier(body)
        }
    }
}

/// True iff the formulas differ only by a consistent renaming of bound
/// variables.
pub fn alpha_equal(a: &Formula, b: &Formula) -> bool {
    fn term_eq(a: &Term, b: &Term, la: &[Var], lb: &[Var]) -> bool {
        match (a, b) {
            (Term::Zero, Term::Zero) => true,
            (Term::Var(x), Term::Var(y)) => var_eq(&Var::first(x.clone()), &Var::first(y.clone()), la, lb),
            (Term::Succ(x), Term::Succ(y)) => term_eq(x, y, la, lb),
            (Term::Plus(x1, x2), Term::Plus(y1, y2))
            | (Term::Times(x1, x2), Term::Times(y1, y2))
            | (Term::Pair(x1, x2), Term::Pair(y1, y2)) => {
                term_eq(x1, y1, la, lb) && term_eq(x2, y2, la, lb)
            }
            _ => false,
        }
    }
    fn var_eq(x: &Var, y: &Var, la: &[Var], lb: &[Var]) -> bool {
        let ia = la.iter().rposition(|v| v == x);
        let ib = lb.iter().rposition(|v| v == y);
        match (ia, ib) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        }
    }
    fn walk(a: &Formula, b: &Formula, la: &mut Vec<Var>, lb: &mut Vec<Var>) -> bool {
        match (a, b) {
            (Formula::Eq(a1, a2), Formula::Eq(b1, b2)) => {
                term_eq(a1, b1, la, lb) && term_eq(a2, b2, la, lb)
            }
            (Formula::MemSN(t1, s1), Formula::MemSN(t2, s2)) => {
                term_eq(t1, t2, la, lb) && var_eq(s1, s2, la, lb)
            }
            (Formula::MemNP(a1, a2), Formula::MemNP(b1, b2))
            | (Formula::Prec(a1, a2), Formula::Prec(b1, b2)) => {
                var_eq(a1, b1, la, lb) && var_eq(a2, b2, la, lb)
            }
            (Formula::And(a1, a2), Formula::And(b1, b2))
            | (Formula::Or(a1, a2), Formula::Or(b1, b2))
            | (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => {
                walk(a1, b1, la, lb) && walk(a2, b2, la, lb)
            }
            (Formula::Not(a1), Formula::Not(b1)) => walk(a1, b1, la, lb),
            (Formula::Forall(v1, f1), Formula::Forall(v2, f2))
            | (Formula::Exists(v1, f1), Formula::Exists(v2, f2)) => {
                if v1.sort != v2.sort {
                    return false;
                }
                la.push(v1.clone());
                lb.push(v2.clone());
                let r = walk(f1, f2, la, lb);
                la.pop();
                lb.pop();
                r
            }
            _ => false,
        }
    }
    walk(a, b, &mut Vec::new(), &mut Vec::new())
}

/// Rewrite primitive negation away: `~p` becomes `p -> 0 = 1`, recursively.
pub fn to_bot_form(f: &Formula) -> Formula {
    match f {
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => f.clone(),
        Formula::And(a, b) => and(to_bot_form(a), to_bot_form(b)),
        Formula::Or(a, b) => or(to_bot_form(a), to_bot_form(b)),
        Formula::Imp(a, b) => imp(to_bot_form(a), to_bot_form(b)),
        Formula::Not(a) => not_b(to_bot_form(a)),
        Formula::Forall(v, body) => forall(v.clone(), to_bot_form(body)),
        Formula::Exists(v, body) => exists(v.clone(), to_bot_form(body)),
    }
}

/// Rewrite `p -> 0 = 1` to primitive negation `~p`, recursively. Inverse of
/// [`to_bot_form`] on its image.
pub fn to_neg_form(f: &Formula) -> Formula {
    match f {
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => f.clone(),
        Formula::And(a, b) => and(to_neg_form(a), to_neg_form(b)),
        Formula::Or(a, b) => or(to_neg_form(a), to_neg_form(b)),
        Formula::Imp(a, b) => {
            let a = to_neg_form(a);
            let b = to_neg_form(b);
            if b == bot() {
                not(a)
            } else {
                imp(a, b)
            }
        }
        Formula::Not(a) => not(to_neg_form(a)),
        Formula::Forall(v, body) => forall(v.clone(), to_neg_form(body)),
        Formula::Exists(v, body) => exists(v.clone(), to_neg_form(body)),
    }
}

/// True iff the formula contains primitive negation anywhere.
pub fn contains_not(f: &Formula) -> bool {
    match f {
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => false,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            contains_not(a) || contains_not(b)
        }
        Formula::Not(_) => true,
        Formula::Forall(_, body) | Formula::Exists(_, body) => contains_not(body),
    }
}

/// True iff the formula contains a `<<` atom anywhere.
pub fn contains_prec(f: &Formula) -> bool {
    match f {
        Formula::Prec(..) => true,
        Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) => false,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            contains_prec(a) || contains_prec(b)
        }
        Formula::Not(a) => contains_prec(a),
        Formula::Forall(_, body) | Formula::Exists(_, body) => contains_prec(body),
    }
}

/// A variable with the given sort and a name not in `avoid`, derived from
/// `base`. Used by corpus authors and generators; the kernel itself never
/// invents names.
pub fn fresh_var(base: &str, sort: Sort, avoid: &BTreeSet<Var>) -> Var {
    let candidate = Var { name: base.to_string(), sort };
    if !avoid.contains(&candidate) {
        return candidate;
    }
    for i in 0.. {
        let candidate = Var { name: format!("{base}{i}"), sort };
        if !avoid.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Consistently rename bound variables using numbered fresh names. Produces an
/// alpha-equal formula; handy for authoring alpha-variant tests.
pub fn alpha_rename(f: &Formula) -> Formula {
    fn walk(f: &Formula, counter: &mut u64, avoid: &BTreeSet<Var>) -> Formula {
        match f {
            Formula::Eq(..) | Formula::MemSN(..) | Formula::MemNP(..) | Formula::Prec(..) => {
                f.clone()
            }
            Formula::And(a, b) => and(walk(a, counter, avoid), walk(b, counter, avoid)),
            Formula::Or(a, b) => or(walk(a, counter, avoid), walk(b, counter, avoid)),
            Formula::Imp(a, b) => imp(walk(a, counter, avoid), walk(b, counter, avoid)),
            Formula::Not(a) => not(walk(a, counter, avoid)),
            Formula::Forall(v, body) | Formula::Exists(v, body) => {
                let base = match v.sort {
                    Sort::First => "r",
                    Sort::Second => "R",
                    Sort::Third => "R",
                };
                let mut name;
                loop {
                    name = format!("{base}{counter}");
                    *counter += 1;
                    let candidate = Var { name: name.clone(), sort: v.sort };
                    if !avoid.contains(&candidate) && !free_vars(body).contains(&candidate) {
                        break;
                    }
                }
                let fresh = Var { name, sort: v.sort };
                let renamed = substitute_var(body, v, &renaming_of(&fresh))
                    .expect("fresh variable is always free for the bound one");
                let inner = walk(&renamed, counter, avoid);
                match f {
                    Formula::Forall(..) => forall(fresh, inner),
                    _ => exists(fresh, inner),
                }
            }
        }
    }
    fn renaming_of(v: &Var) -> Instantiation {
        match v.sort {
            Sort::First => Instantiation::Term(Term::Var(v.name.clone())),
            _ => Instantiation::SetVar(v.clone()),
        }
    }
    let avoid = free_vars(f);
    walk(f, &mut 0, &avoid)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n() -> Var {
        Var::first("n")
    }
    fn m() -> Var {
        Var::first("m")
    }
    fn k() -> Var {
        Var::first("k")
    }
    fn set_x() -> Var {
        Var::second("X")
    }
    fn class_a() -> Var {
        Var::third("A")
    }

    #[test]
    fn free_vars_bound_quantifier() {
        // (forall n)(n in X) has only X free
        let f = forall(n(), mem(tvar("n"), set_x()));
        let fv = free_vars(&f);
        assert_eq!(fv.into_iter().collect::<Vec<_>>(), vec![set_x()]);
    }

    #[test]
    fn free_vars_atomic() {
        let f = eq(tvar("n"), zero());
        assert_eq!(free_vars(&f).into_iter().collect::<Vec<_>>(), vec![n()]);
    }

    #[test]
    fn free_vars_third_order() {
        // (exists X)(X in @A) has only @A free
        let f = exists(set_x(), mem3(set_x(), class_a()));
        assert_eq!(free_vars(&f).into_iter().collect::<Vec<_>>(), vec![class_a()]);
    }

    #[test]
    fn substitute_basic() {
        // (n = 0)[n := m'] = (m' = 0)
        let f = eq(tvar("n"), zero());
        let got = substitute(&f, &n(), &succ(tvar("m"))).unwrap();
        assert_eq!(got, eq(succ(tvar("m")), zero()));
    }

    #[test]
    fn substitute_identity() {
        let f = forall(m(), or(eq(tvar("n"), tvar("m")), mem(tvar("n"), set_x())));
        let got = substitute(&f, &n(), &tvar("n")).unwrap();
        assert_eq!(got, f);
    }

    #[test]
    fn substitute_capture_rejected() {
        // (forall m)(n = m)[n := m] captures
        let f = forall(m(), eq(tvar("n"), tvar("m")));
        let err = substitute(&f, &n(), &tvar("m")).unwrap_err();
        assert!(matches!(err, SubstError::Capture(_)));
    }

    #[test]
    fn substitute_wrong_sort() {
        let f = mem(tvar("n"), set_x());
        let err = substitute(&f, &set_x(), &zero()).unwrap_err();
        assert!(matches!(err, SubstError::Sort(_)));
    }

    #[test]
    fn free_for_scope_walk() {
        // m is not free for n in (forall m)(n = m)
        let f = forall(m(), eq(tvar("n"), tvar("m")));
        assert!(!free_for_term(&tvar("m"), &n(), &f));
        // closed terms are free for anything
        assert!(free_for_term(&zero(), &n(), &f));
        // m + k is not free for n in (exists k)(n = k) /\ (k = 0)
        let g = and(exists(k(), eq(tvar("n"), tvar("k"))), eq(tvar("k"), zero()));
        assert!(!free_for_term(&plus(tvar("m"), tvar("k")), &n(), &g));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&mem3(set_x(), class_a())), FormulaClass::Atomic);
        // only a first order quantifier: arithmetical
        let f = forall(n(), iff(mem(tvar("n"), set_x()), eq(tvar("n"), zero())));
        assert_eq!(classify(&f), FormulaClass::Arithmetical);
        let g = exists(set_x(), mem(zero(), set_x()));
        assert_eq!(classify(&g), FormulaClass::General);
    }

    #[test]
    fn alpha_equal_examples() {
        let f1 = forall(n(), eq(tvar("n"), tvar("n")));
        let f2 = forall(m(), eq(tvar("m"), tvar("m")));
        assert!(alpha_equal(&f1, &f2));

        // different free variables are not alpha equal
        let g1 = forall(n(), eq(tvar("n"), tvar("k")));
        let g2 = forall(m(), eq(tvar("m"), tvar("j")));
        assert!(!alpha_equal(&g1, &g2));

        assert!(alpha_equal(&g1, &g1));
    }

    #[test]
    fn alpha_equal_mixed_binding() {
        // binding depth must match: (forall n)(forall m)(n = m) vs swapped
        let f1 = forall(n(), forall(m(), eq(tvar("n"), tvar("m"))));
        let f2 = forall(m(), forall(n(), eq(tvar("m"), tvar("n"))));
        assert!(alpha_equal(&f1, &f2));
        let f3 = forall(m(), forall(n(), eq(tvar("n"), tvar("m"))));
        assert!(!alpha_equal(&f1, &f3));
    }

    #[test]
    fn bot_neg_round_trip() {
        let f = not(eq(tvar("n"), zero()));
        let b = to_bot_form(&f);
        assert_eq!(b, imp(eq(tvar("n"), zero()), bot()));
        assert_eq!(to_neg_form(&b), f);

        // a Not-free formula is a fixpoint of to_bot_form
        let g = forall(n(), imp(mem(tvar("n"), set_x()), eq(tvar("n"), zero())));
        assert_eq!(to_bot_form(&g), g);
    }

    #[test]
    fn classify_stable_under_bot_form() {
        let f = not(exists(set_x(), mem(zero(), set_x())));
        assert_eq!(classify(&to_bot_form(&f)), classify(&f));
        let g = not(eq(tvar("n"), zero()));
        // Not is a connective, so both forms are arithmetical
        assert_eq!(classify(&g), FormulaClass::Arithmetical);
        assert_eq!(classify(&to_bot_form(&g)), FormulaClass::Arithmetical);
    }

    #[test]
    fn alpha_rename_is_alpha_equal() {
        let f = forall(n(), and(exists(m(), eq(tvar("n"), tvar("m"))), mem(tvar("n"), set_x())));
        let r = alpha_rename(&f);
        assert_ne!(f, r);
        assert!(alpha_equal(&f, &r));
    }
}
