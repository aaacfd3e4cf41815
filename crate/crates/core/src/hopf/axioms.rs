use std::collections::BTreeMap;

use serde::Serialize;

use super::HopfData;
use crate::arith::{CycScalar, Field};

/// Outcome of one axiom, with a description of the first counterexample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Sparse<K> = BTreeMap<K, CycScalar>;

fn bump<K: Ord>(map: &mut Sparse<K>, key: K, value: CycScalar) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => *v = v.plus(&value),
        None => {
            map.insert(key, value);
        }
    }
}

fn sparse_eq<K: Ord>(a: &Sparse<K>, b: &Sparse<K>) -> bool {
    let nz = |m: &Sparse<K>| m.iter().filter(|(_, v)| !v.is_zero()).count();
    nz(a) == nz(b) && a.iter().filter(|(_, v)| !v.is_zero()).all(|(k, v)| b.get(k) == Some(v))
}

fn show<K: std::fmt::Debug>(m: &Sparse<K>) -> String {
    let parts: Vec<String> = m.iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| format!("{k:?}: {v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn vector_as_sparse(v: &[CycScalar]) -> Sparse<usize> {
    let mut m = Sparse::new();
    for (i, x) in v.iter().enumerate() {
        bump(&mut m, i, x.clone());
    }
    m
}

struct Checker<'a> {
    h: &'a HopfData,
}

impl Checker<'_> {
    fn d(&self) -> usize {
        self.h.dim()
    }

    /// `(b_i b_j) b_l = b_i (b_j b_l)`.
    fn associativity(&self) -> Option<String> {
        let h = self.h;
        for i in 0..self.d() {
            for j in 0..self.d() {
                for l in 0..self.d() {
                    let mut lhs = Sparse::new();
                    for (k, c) in h.mult_terms(i, j) {
                        for (m, c2) in h.mult_terms(*k, l) {
                            bump(&mut lhs, *m, c.times(c2));
                        }
                    }
                    let mut rhs = Sparse::new();
                    for (k, c) in h.mult_terms(j, l) {
                        for (m, c2) in h.mult_terms(i, *k) {
                            bump(&mut rhs, *m, c.times(c2));
                        }
                    }
                    if !sparse_eq(&lhs, &rhs) {
                        return Some(format!(
                            "(b{i} b{j}) b{l} = {} but b{i} (b{j} b{l}) = {}",
                            show(&lhs),
                            show(&rhs)
                        ));
                    }
                }
            }
        }
        None
    }

    fn unit(&self) -> Option<String> {
        let h = self.h;
        for i in 0..self.d() {
            let mut left = Sparse::new();
            let mut right = Sparse::new();
            for (k, u) in h.unit().iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (m, c) in h.mult_terms(k, i) {
                    bump(&mut left, *m, u.times(c));
                }
                for (m, c) in h.mult_terms(i, k) {
                    bump(&mut right, *m, u.times(c));
                }
            }
            let expect = vector_as_sparse(&super::unit_vector(self.d(), i));
            if !sparse_eq(&left, &expect) {
                return Some(format!("1 b{i} = {}", show(&left)));
            }
            if !sparse_eq(&right, &expect) {
                return Some(format!("b{i} 1 = {}", show(&right)));
            }
        }
        None
    }

    fn coassociativity(&self) -> Option<String> {
        let h = self.h;
        for k in 0..self.d() {
            let mut lhs = Sparse::new();
            let mut rhs = Sparse::new();
            for (i, j, c) in h.comult_terms(k) {
                for (a, b, c2) in h.comult_terms(*i) {
                    bump(&mut lhs, (*a, *b, *j), c.times(c2));
                }
                for (a, b, c2) in h.comult_terms(*j) {
                    bump(&mut rhs, (*i, *a, *b), c.times(c2));
                }
            }
            if !sparse_eq(&lhs, &rhs) {
                return Some(format!("(Δ⊗id)Δ(b{k}) = {} but (id⊗Δ)Δ(b{k}) = {}", show(&lhs), show(&rhs)));
            }
        }
        None
    }

    fn counit(&self) -> Option<String> {
        let h = self.h;
        for k in 0..self.d() {
            let mut left = Sparse::new();
            let mut right = Sparse::new();
            for (i, j, c) in h.comult_terms(k) {
                bump(&mut left, *j, h.counit()[*i].times(c));
                bump(&mut right, *i, h.counit()[*j].times(c));
            }
            let expect = vector_as_sparse(&super::unit_vector(self.d(), k));
            if !sparse_eq(&left, &expect) {
                return Some(format!("(ε⊗id)Δ(b{k}) = {}", show(&left)));
            }
            if !sparse_eq(&right, &expect) {
                return Some(format!("(id⊗ε)Δ(b{k}) = {}", show(&right)));
            }
        }
        None
    }

    /// `Δ(b_i b_j) = Δ(b_i) Δ(b_j)` and `Δ(1) = 1 ⊗ 1`.
    fn comult_multiplicative(&self) -> Option<String> {
        let h = self.h;
        let d = self.d();
        for i in 0..d {
            for j in 0..d {
                let mut lhs = Sparse::new();
                for (k, c) in h.mult_terms(i, j) {
                    for (a, b, c2) in h.comult_terms(*k) {
                        bump(&mut lhs, (*a, *b), c.times(c2));
                    }
                }
                let mut rhs = Sparse::new();
                for (a, b, c1) in h.comult_terms(i) {
                    for (a2, b2, c2) in h.comult_terms(j) {
                        let c12 = c1.times(c2);
                        for (p, m1) in h.mult_terms(*a, *a2) {
                            for (q, m2) in h.mult_terms(*b, *b2) {
                                bump(&mut rhs, (*p, *q), c12.times(&m1.times(m2)));
                            }
                        }
                    }
                }
                if !sparse_eq(&lhs, &rhs) {
                    return Some(format!("Δ(b{i} b{j}) = {} but Δ(b{i})Δ(b{j}) = {}", show(&lhs), show(&rhs)));
                }
            }
        }
        let mut delta_one = Sparse::new();
        let mut one_one = Sparse::new();
        for (k, u) in h.unit().iter().enumerate() {
            for (a, b, c) in h.comult_terms(k) {
                bump(&mut delta_one, (*a, *b), u.times(c));
            }
            for (l, v) in h.unit().iter().enumerate() {
                bump(&mut one_one, (k, l), u.times(v));
            }
        }
        if !sparse_eq(&delta_one, &one_one) {
            return Some(format!("Δ(1) = {}", show(&delta_one)));
        }
        None
    }

    fn counit_multiplicative(&self) -> Option<String> {
        let h = self.h;
        let e = h.counit();
        for i in 0..self.d() {
            for j in 0..self.d() {
                let mut lhs = CycScalar::from_int(0);
                for (k, c) in h.mult_terms(i, j) {
                    lhs.add_product(c, &e[*k]);
                }
                let rhs = e[i].times(&e[j]);
                if lhs != rhs {
                    return Some(format!("ε(b{i} b{j}) = {lhs} but ε(b{i})ε(b{j}) = {rhs}"));
                }
            }
        }
        let e1 = h.counit_of(h.unit());
        if !e1.is_one() {
            return Some(format!("ε(1) = {e1}"));
        }
        None
    }

    /// `Σ S(h₁) h₂ = ε(h) 1 = Σ h₁ S(h₂)` on every basis element.
    fn antipode(&self) -> Option<String> {
        let h = self.h;
        let d = self.d();
        for k in 0..d {
            let mut left = Sparse::new();
            let mut right = Sparse::new();
            for (i, j, c) in h.comult_terms(k) {
                for a in 0..d {
                    let s = h.antipode_coeff(a, *i);
                    if !s.is_zero() {
                        for (m, c2) in h.mult_terms(a, *j) {
                            bump(&mut left, *m, c.times(&s.times(c2)));
                        }
                    }
                    let s = h.antipode_coeff(a, *j);
                    if !s.is_zero() {
                        for (m, c2) in h.mult_terms(*i, a) {
                            bump(&mut right, *m, c.times(&s.times(c2)));
                        }
                    }
                }
            }
            let expect = vector_as_sparse(&super::scale(h.unit(), &h.counit()[k]));
            if !sparse_eq(&left, &expect) {
                return Some(format!("Σ S(h₁)h₂ for b{k} = {} but ε(b{k})1 = {}", show(&left), show(&expect)));
            }
            if !sparse_eq(&right, &expect) {
                return Some(format!("Σ h₁S(h₂) for b{k} = {} but ε(b{k})1 = {}", show(&right), show(&expect)));
            }
        }
        None
    }
}

/// Checks every Hopf algebra axiom exhaustively over basis tuples.
pub fn check_axioms(h: &HopfData) -> AxiomReport {
    let c = Checker { h };
    let mut checks = Vec::new();
    let mut push = |name, statement, outcome: Option<String>| {
        checks.push(AxiomCheck { name, statement, passed: outcome.is_none(), witness: outcome });
    };
    push("associativity", "(ab)c = a(bc)", c.associativity());
    push("unit", "1a = a = a1", c.unit());
    push("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", c.coassociativity());
    push("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ", c.counit());
    push("comultiplication-multiplicative", "Δ(ab) = Δ(a)Δ(b), Δ(1) = 1⊗1", c.comult_multiplicative());
    push("counit-multiplicative", "ε(ab) = ε(a)ε(b), ε(1) = 1", c.counit_multiplicative());
    push("antipode", "S(h₁)h₂ = ε(h)1 = h₁S(h₂)", c.antipode());
    AxiomReport { checks }
}
