use serde::Serialize;

use crate::exactlin::{is_zero_vector, sign, Scalar, Subspace};
use crate::parallel::Execution;
use crate::superalg::{nilpotency, LieSuperAlgebra};

use super::symbols::{BracketTable, SymbolSpace};
use super::{TensorError, TensorKind};

/// Which relation template produced a batch of relation vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `e(i,j) + (−1)^{|i||j|} e(j,i)` and `e(i,i)` for even `i` (exterior square only).
    ExteriorSeed,
    /// `[m,m']⊗n = m⊗ᵐ'n − (−1)^{|m||m'|} m'⊗ᵐn`.
    CrossedLeft,
    /// `m⊗[n,n'] = (−1)^{|n'|(|m|+|n|)} ⁿ'm⊗n − (−1)^{|m||n|} ⁿm⊗n'`.
    CrossedRight,
    Antisymmetry,
    Jacobi,
    Ideal,
}

/// One instance of the crossed-pairing relations for a basis triple.
#[derive(Clone, Debug)]
pub struct PairRelation {
    pub rule: Rule,
    pub triple: (usize, usize, usize),
    pub vector: Vec<Scalar>,
}

/// All instances of both crossed-pairing relations over ordered basis triples.
/// Each vector is homogeneous of parity `|i|+|j|+|k|`.
pub fn pair_relations(l: &LieSuperAlgebra) -> Vec<PairRelation> {
    pair_relations_with(l, &SymbolSpace::new(l), Execution::Sequential)
}

pub(crate) fn pair_relations_with(l: &LieSuperAlgebra, space: &SymbolSpace, exec: Execution) -> Vec<PairRelation> {
    let t = l.total();
    let f = l.field();
    let odd = |a: usize| l.parity(a).is_odd();
    let triples: Vec<(usize, usize, usize)> = (0..t)
        .flat_map(|i| (0..t).flat_map(move |j| (0..t).map(move |k| (i, j, k))))
        .collect();
    let per_triple = exec.map(&triples, |&(i, j, k)| {
        // left: [x_i,x_j]⊗x_k − x_i⊗[x_j,x_k] + (−1)^{|i||j|} x_j⊗[x_i,x_k]
        let mut left = space.zero();
        let s_ij = sign(f, odd(i) && odd(j));
        for m in 0..t {
            let a = l.constant(i, j, m);
            if !a.is_zero() {
                left[space.column(m, k)] += a;
            }
            let b = l.constant(j, k, m);
            if !b.is_zero() {
                left[space.column(i, m)] -= b;
            }
            let c = l.constant(i, k, m);
            if !c.is_zero() {
                left[space.column(j, m)] += &(&s_ij * c);
            }
        }
        // right: x_i⊗[x_j,x_k] − (−1)^{|k|(|i|+|j|)} [x_k,x_i]⊗x_j + (−1)^{|i||j|} [x_j,x_i]⊗x_k
        let mut right = space.zero();
        let s_k = sign(f, odd(k) && (odd(i) != odd(j)));
        for m in 0..t {
            let a = l.constant(j, k, m);
            if !a.is_zero() {
                right[space.column(i, m)] += a;
            }
            let b = l.constant(k, i, m);
            if !b.is_zero() {
                right[space.column(m, j)] -= &(&s_k * b);
            }
            let c = l.constant(j, i, m);
            if !c.is_zero() {
                right[space.column(m, k)] += &(&s_ij * c);
            }
        }
        [
            PairRelation {
                rule: Rule::CrossedLeft,
                triple: (i, j, k),
                vector: left,
            },
            PairRelation {
                rule: Rule::CrossedRight,
                triple: (i, j, k),
                vector: right,
            },
        ]
    });
    per_triple.into_iter().flatten().collect()
}

/// Seed relations that turn the tensor square into the exterior square.
pub fn exterior_seeds(l: &LieSuperAlgebra, space: &SymbolSpace) -> Vec<Vec<Scalar>> {
    let t = l.total();
    let f = l.field();
    let mut out = Vec::new();
    for i in 0..t {
        for j in 0..t {
            let mut v = space.zero();
            v[space.column(i, j)] += &f.one();
            v[space.column(j, i)] += &sign(f, l.parity(i).is_odd() && l.parity(j).is_odd());
            out.push(v);
        }
        if !l.parity(i).is_odd() {
            out.push(space.unit(space.column(i, i)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LogEntry {
    pub sweep: usize,
    pub rule: Rule,
    pub candidates: usize,
    pub added: usize,
}

/// The relation subspace `R` inside the symbol space, with the bracket table
/// that acts on it and a log of what each rule contributed.
#[derive(Clone, Debug)]
pub struct RelationSystem {
    table: BracketTable,
    relations: Subspace,
    log: Vec<LogEntry>,
    sweeps: usize,
}

impl RelationSystem {
    pub fn space(&self) -> &SymbolSpace {
        self.table.space()
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn log(&self) -> &[LogEntry] {
        &self.log
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    fn absorb(&mut self, rule: Rule, vectors: Vec<Vec<Scalar>>) {
        let candidates = vectors.len();
        let mut added = 0;
        for v in vectors {
            if is_zero_vector(&v) {
                continue;
            }
            debug_assert!(
                is_homogeneous(self.table.space(), &v),
                "{rule:?} produced a mixed-parity relation"
            );
            if self.relations.insert(&v).expect("symbol-space length") {
                added += 1;
            }
        }
        self.log.push(LogEntry {
            sweep: self.sweeps,
            rule,
            candidates,
            added,
        });
    }

    /// One pass of antisymmetry, Jacobi and ideal defects. Returns the rank gained.
    ///
    /// Symbols outside [`BracketTable::active`] bracket to zero with
    /// everything, so defect instances involving them are identically zero
    /// and are not enumerated.
    pub fn sweep(&mut self, exec: Execution) -> usize {
        let before = self.relations.rank();
        self.sweeps += 1;
        let active = self.table.active().to_vec();

        let pairs: Vec<(usize, usize)> = active
            .iter()
            .flat_map(|&u| active.iter().map(move |&v| (u, v)))
            .collect();
        let table = &self.table;
        let defects = exec.map(&pairs, |&(u, v)| table.antisymmetry_defect(u, v));
        self.absorb(Rule::Antisymmetry, defects);

        let triples: Vec<(usize, usize, usize)> = pairs
            .iter()
            .flat_map(|&(u, v)| active.iter().map(move |&w| (u, v, w)))
            .collect();
        let table = &self.table;
        let defects = exec.map(&triples, |&(u, v, w)| table.jacobi_defect(u, v, w));
        self.absorb(Rule::Jacobi, defects);

        let rows = self.relations.rows().to_vec();
        let table = &self.table;
        let defects = exec.map(&rows, |r| {
            let space = table.space();
            let left = table.left_factor(r);
            let right = table.right_factor(r);
            let mut out = Vec::new();
            for &e in &active {
                if !is_zero_vector(&left) {
                    out.push(space.pair(&left, table.derived_of_symbol(e)));
                }
                if !is_zero_vector(&right) {
                    out.push(space.pair(table.left_of_symbol(e), &right));
                }
            }
            out
        });
        self.absorb(Rule::Ideal, defects.into_iter().flatten().collect());

        self.relations.rank() - before
    }
}

fn is_homogeneous(space: &SymbolSpace, v: &[Scalar]) -> bool {
    let even = space.dim().even;
    v[..even].iter().all(Scalar::is_zero) || v[even..].iter().all(Scalar::is_zero)
}

/// Least relation subspace containing the crossed-pairing relations (plus
/// the exterior seeds for [`TensorKind::Exterior`]) that is closed under
/// antisymmetry, Jacobi and ideal defects of the symbol bracket.
pub fn closure(l: &LieSuperAlgebra, kind: TensorKind, exec: Execution) -> Result<RelationSystem, TensorError> {
    if !nilpotency(l).nilpotent {
        return Err(TensorError::NonNilpotent(l.name().to_string()));
    }
    let table = BracketTable::new(l);
    let space = table.space().clone();
    let mut system = RelationSystem {
        relations: Subspace::zero(l.field(), space.len()),
        table,
        log: Vec::new(),
        sweeps: 0,
    };
    if kind == TensorKind::Exterior {
        system.absorb(Rule::ExteriorSeed, exterior_seeds(l, &space));
    }
    let (left, right): (Vec<_>, Vec<_>) = pair_relations_with(l, &space, exec)
        .into_iter()
        .partition(|r| r.rule == Rule::CrossedLeft);
    system.absorb(Rule::CrossedLeft, left.into_iter().map(|r| r.vector).collect());
    system.absorb(Rule::CrossedRight, right.into_iter().map(|r| r.vector).collect());
    while system.sweep(exec) > 0 {}
    Ok(system)
}
