//! Model enumeration and satisfiability.
//!
//! Two independent routes decide satisfiability: a splitting enumeration over
//! the vocabulary that prunes with three-valued evaluation, and DPLL with
//! unit propagation over a Tseitin clause form. The enumeration route also
//! yields models in canonical order.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::formula::Formula;
use super::vocab::{Compiled, Interpretation, Vocabulary};
use crate::error::{Error, Result};

/// Largest vocabulary for which [`models`] will enumerate.
pub const MAX_MODEL_VARIABLES: usize = 30;

/// Above this many variables satisfiability goes through DPLL.
pub const ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Enumeration,
    Dpll,
    /// Enumeration up to [`ENUMERATION_LIMIT`] variables, DPLL beyond.
    Auto,
}

/// All models of `f` over `vocab`, in canonical order.
pub fn models(f: &Formula, vocab: &Arc<Vocabulary>) -> Result<Vec<Interpretation>> {
    Error::guard("model enumeration variables", MAX_MODEL_VARIABLES, vocab.len())?;
    let compiled = Compiled::new(f, vocab)?;
    let mut out = Vec::new();
    let _ = enumerate(&compiled, vocab.len(), &mut |values: &[bool]| {
        out.push(Interpretation::from_values(vocab.clone(), values.to_vec()));
        ControlFlow::<()>::Continue(())
    });
    Ok(out)
}

/// Satisfiability of `f` over its own variables.
pub fn satisfiable(f: &Formula) -> bool {
    satisfiable_by(f, Strategy::Auto)
}

pub fn satisfiable_by(f: &Formula, strategy: Strategy) -> bool {
    let vocab = Vocabulary::of(f);
    let compiled = Compiled::new(f, &vocab).expect("own vocabulary covers the formula");
    let use_dpll = match strategy {
        Strategy::Enumeration => false,
        Strategy::Dpll => true,
        Strategy::Auto => vocab.len() > ENUMERATION_LIMIT,
    };
    if use_dpll {
        Cnf::from_compiled(&compiled, vocab.len()).solve()
    } else {
        enumerate(&compiled, vocab.len(), &mut |_: &[bool]| ControlFlow::Break(())).is_break()
    }
}

/// Visits every satisfying assignment in canonical order until `visit` breaks.
pub(crate) fn enumerate<B>(
    f: &Compiled,
    n: usize,
    visit: &mut impl FnMut(&[bool]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut partial = vec![None; n];
    split(f, 0, &mut partial, visit)
}

fn split<B>(
    f: &Compiled,
    depth: usize,
    partial: &mut Vec<Option<bool>>,
    visit: &mut impl FnMut(&[bool]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    match f.eval_partial(partial) {
        Some(false) => ControlFlow::Continue(()),
        Some(true) => complete(depth, partial, visit),
        None => {
            for value in [false, true] {
                partial[depth] = Some(value);
                split(f, depth + 1, partial, visit)?;
            }
            partial[depth] = None;
            ControlFlow::Continue(())
        }
    }
}

fn complete<B>(
    depth: usize,
    partial: &mut Vec<Option<bool>>,
    visit: &mut impl FnMut(&[bool]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if depth == partial.len() {
        let values: Vec<bool> = partial.iter().map(|v| v.unwrap()).collect();
        return visit(&values);
    }
    for value in [false, true] {
        partial[depth] = Some(value);
        complete(depth + 1, partial, visit)?;
    }
    partial[depth] = None;
    ControlFlow::Continue(())
}

/// Clause form; literals are non-zero, variable `i` is `i + 1`.
struct Cnf {
    clauses: Vec<Vec<i32>>,
    vars: usize,
}

impl Cnf {
    fn from_compiled(f: &Compiled, n: usize) -> Self {
        let mut cnf = Cnf {
            clauses: Vec::new(),
            vars: n,
        };
        let root = cnf.encode(f);
        cnf.clauses.push(vec![root]);
        cnf
    }

    fn fresh(&mut self) -> i32 {
        self.vars += 1;
        self.vars as i32
    }

    fn encode(&mut self, f: &Compiled) -> i32 {
        match f {
            Compiled::Const(b) => {
                let x = self.fresh();
                self.clauses.push(vec![if *b { x } else { -x }]);
                x
            }
            Compiled::Var(i) => *i as i32 + 1,
            Compiled::Not(g) => -self.encode(g),
            Compiled::And(gs) => {
                let lits: Vec<i32> = gs.iter().map(|g| self.encode(g)).collect();
                self.gate_and(&lits)
            }
            Compiled::Or(gs) => {
                let lits: Vec<i32> = gs.iter().map(|g| -self.encode(g)).collect();
                -self.gate_and(&lits)
            }
            Compiled::Implies(a, b) => {
                let lits = [self.encode(a), -self.encode(b)];
                -self.gate_and(&lits)
            }
            Compiled::Iff(a, b) => {
                let (a, b) = (self.encode(a), self.encode(b));
                let x = self.fresh();
                self.clauses.push(vec![-x, -a, b]);
                self.clauses.push(vec![-x, a, -b]);
                self.clauses.push(vec![x, a, b]);
                self.clauses.push(vec![x, -a, -b]);
                x
            }
        }
    }

    fn gate_and(&mut self, lits: &[i32]) -> i32 {
        let x = self.fresh();
        let mut long = vec![x];
        for &l in lits {
            self.clauses.push(vec![-x, l]);
            long.push(-l);
        }
        self.clauses.push(long);
        x
    }

    fn solve(&self) -> bool {
        let mut assign = vec![0i8; self.vars + 1];
        dpll(&self.clauses, &mut assign)
    }
}

fn lit_value(assign: &[i8], lit: i32) -> i8 {
    let v = assign[lit.unsigned_abs() as usize];
    if lit > 0 {
        v
    } else {
        -v
    }
}

fn propagate(clauses: &[Vec<i32>], assign: &mut [i8]) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut satisfied = false;
            for &lit in clause {
                match lit_value(assign, lit) {
                    1 => {
                        satisfied = true;
                        break;
                    }
                    0 => {
                        open += 1;
                        unassigned = Some(lit);
                    }
                    _ => {}
                }
            }
            if satisfied {
                continue;
            }
            match (open, unassigned) {
                (0, _) => return false,
                (1, Some(lit)) => {
                    assign[lit.unsigned_abs() as usize] = if lit > 0 { 1 } else { -1 };
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

fn dpll(clauses: &[Vec<i32>], assign: &mut [i8]) -> bool {
    if !propagate(clauses, assign) {
        return false;
    }
    let Some(var) = (1..assign.len()).find(|&v| assign[v] == 0) else {
        return true;
    };
    for value in [1, -1] {
        let mut next = assign.to_vec();
        next[var] = value;
        if dpll(clauses, &mut next) {
            return true;
        }
    }
    false
}
