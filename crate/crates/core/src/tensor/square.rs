use serde::Serialize;

use crate::exactlin::{is_zero_vector, linear_combination, sign, Scalar};
use crate::gamma::gamma_of_abelianization;
use crate::parallel::Execution;
use crate::superalg::{
    center, derived_subalgebra, nilpotency, quotient, recognize_heisenberg_plus_abelian, GradedSubspace, HeisenbergTag,
    LieSuperAlgebra, SuperDim,
};

use super::closure::{closure, exterior_seeds, RelationSystem};
use super::{TensorError, TensorKind};

/// `L ⊗ L` (or `L ∧ L`) realized as the symbol span modulo the closed relation subspace.
#[derive(Clone, Debug)]
pub struct TensorSquareResult {
    kind: TensorKind,
    source: LieSuperAlgebra,
    system: RelationSystem,
    algebra: LieSuperAlgebra,
    basis_columns: Vec<usize>,
    generator_map: Vec<Vec<Scalar>>,
}

impl TensorSquareResult {
    fn build(source: &LieSuperAlgebra, system: RelationSystem, kind: TensorKind) -> Result<Self, TensorError> {
        let table = system.table();
        let space = table.space();
        let rel = system.relations();
        let keep = rel.free_columns();
        let n = keep.len();
        let even = keep.iter().filter(|&&c| !space.parity(c).is_odd()).count();
        let dim = SuperDim::new(even, n - even);
        let f = source.field();

        let mut is_active = vec![false; space.len()];
        for &c in table.active() {
            is_active[c] = true;
        }
        let mut consts = vec![f.zero(); n * n * n];
        for (a, &ca) in keep.iter().enumerate() {
            for (b, &cb) in keep.iter().enumerate() {
                if !is_active[ca] || !is_active[cb] {
                    continue;
                }
                let reduced = rel.reduce(&table.bracket_symbols(ca, cb))?;
                for (k, &ck) in keep.iter().enumerate() {
                    consts[(a * n + b) * n + k] = reduced[ck].clone();
                }
            }
        }
        let op = match kind {
            TensorKind::Tensor => "⊗",
            TensorKind::Exterior => "∧",
        };
        let name = format!("{}{}{}", source.name(), op, source.name());
        let algebra = LieSuperAlgebra::from_constants(name, f, dim, consts)?;

        let generator_map = (0..space.len())
            .map(|col| {
                let r = rel.reduce(&space.unit(col))?;
                Ok(keep.iter().map(|&c| r[c].clone()).collect())
            })
            .collect::<Result<Vec<Vec<Scalar>>, TensorError>>()?;

        Ok(TensorSquareResult {
            kind,
            source: source.clone(),
            system,
            algebra,
            basis_columns: keep,
            generator_map,
        })
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    pub fn source(&self) -> &LieSuperAlgebra {
        &self.source
    }

    /// The quotient algebra with its induced bracket.
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> SuperDim {
        self.algebra.dim()
    }

    pub fn is_abelian(&self) -> bool {
        self.algebra.is_abelian()
    }

    pub fn system(&self) -> &RelationSystem {
        &self.system
    }

    /// Symbol columns whose images form the basis of the quotient.
    pub fn basis_columns(&self) -> &[usize] {
        &self.basis_columns
    }

    /// Image of `x_i ⊗ x_j` in quotient coordinates.
    pub fn generator(&self, i: usize, j: usize) -> &[Scalar] {
        &self.generator_map[self.system.space().column(i, j)]
    }

    /// The derived map `x_i ⊗ x_j ↦ [x_i, x_j]` on quotient coordinates.
    pub fn derived_map(&self, q: &[Scalar]) -> Vec<Scalar> {
        let images: Vec<Vec<Scalar>> = self
            .basis_columns
            .iter()
            .map(|&c| self.system.table().derived_of_symbol(c).to_vec())
            .collect();
        linear_combination(self.source.field(), self.source.total(), q, &images)
    }

    /// The derived map sends every relation to zero, so it is well defined on the quotient.
    pub fn derived_map_well_defined(&self) -> bool {
        let table = self.system.table();
        self.system
            .relations()
            .rows()
            .iter()
            .all(|r| is_zero_vector(&table.derived(r)))
    }

    /// The derived map hits all of `L²`.
    pub fn derived_map_surjective(&self) -> bool {
        let l = &self.source;
        let images = (0..self.algebra.total()).map(|b| self.derived_map(&self.algebra.basis_vector(b)));
        match GradedSubspace::from_components(l.field(), l.dim(), images) {
            Ok(img) => img == derived_subalgebra(l),
            Err(_) => false,
        }
    }

    /// Basis parities of the quotient agree with `|x_i ⊗ x_j| = |x_i| + |x_j|`.
    pub fn grading_consistent(&self) -> bool {
        let space = self.system.space();
        self.basis_columns
            .iter()
            .enumerate()
            .all(|(b, &c)| self.algebra.parity(b) == space.parity(c))
    }

    /// Names of failed internal witnesses; empty when everything holds.
    pub fn verify(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let v = self.algebra.validate();
        if !v.is_empty() {
            failures.push(format!("quotient is not a Lie superalgebra: {}", v[0]));
        }
        if !self.derived_map_well_defined() {
            failures.push("derived map does not annihilate the relations".into());
        }
        if !self.derived_map_surjective() {
            failures.push("derived map is not onto L²".into());
        }
        if !self.grading_consistent() {
            failures.push("quotient basis parities disagree with symbol parities".into());
        }
        failures
    }
}

pub fn tensor_square(l: &LieSuperAlgebra) -> Result<TensorSquareResult, TensorError> {
    tensor_square_with(l, Execution::default())
}

pub fn tensor_square_with(l: &LieSuperAlgebra, exec: Execution) -> Result<TensorSquareResult, TensorError> {
    let system = closure(l, TensorKind::Tensor, exec)?;
    TensorSquareResult::build(l, system, TensorKind::Tensor)
}

pub fn exterior_square(l: &LieSuperAlgebra) -> Result<TensorSquareResult, TensorError> {
    exterior_square_with(l, Execution::default())
}

pub fn exterior_square_with(l: &LieSuperAlgebra, exec: Execution) -> Result<TensorSquareResult, TensorError> {
    let system = closure(l, TensorKind::Exterior, exec)?;
    TensorSquareResult::build(l, system, TensorKind::Exterior)
}

/// `L □ L` inside a computed tensor square.
#[derive(Clone, Debug)]
pub struct SquareIdeal {
    pub dim: SuperDim,
    pub subspace: GradedSubspace,
}

/// Span of the images of `x_i⊗x_j + (−1)^{|i||j|} x_j⊗x_i` and of `x_i⊗x_i`
/// (`x_i` even), checked to be central.
pub fn square_ideal_of(tensor: &TensorSquareResult) -> Result<SquareIdeal, TensorError> {
    if tensor.kind() != TensorKind::Tensor {
        return Err(TensorError::Precondition(
            "square ideal needs the tensor square, not the exterior square".into(),
        ));
    }
    let l = tensor.source();
    let q = tensor.algebra();
    let f = l.field();
    let t = l.total();
    let mut vectors = Vec::new();
    for i in 0..t {
        for j in i..t {
            let s = sign(f, l.parity(i).is_odd() && l.parity(j).is_odd());
            let v: Vec<Scalar> = tensor
                .generator(i, j)
                .iter()
                .zip(tensor.generator(j, i))
                .map(|(a, b)| a + &(&s * b))
                .collect();
            vectors.push(v);
        }
        if !l.parity(i).is_odd() {
            vectors.push(tensor.generator(i, i).to_vec());
        }
    }
    let subspace = GradedSubspace::from_components(f, q.dim(), vectors)?;
    for w in subspace.basis() {
        for b in 0..q.total() {
            let e = q.basis_vector(b);
            if !is_zero_vector(&q.bracket(&w, &e)?) || !is_zero_vector(&q.bracket(&e, &w)?) {
                return Err(TensorError::NotCentral);
            }
        }
    }
    Ok(SquareIdeal {
        dim: subspace.dim(),
        subspace,
    })
}

/// `L □ L`, cross-checked against the exterior square: `dim ⊗ − dim □ = dim ∧`.
pub fn square_ideal(l: &LieSuperAlgebra) -> Result<SquareIdeal, TensorError> {
    let tensor = tensor_square(l)?;
    let exterior = exterior_square(l)?;
    let square = square_ideal_of(&tensor)?;
    check_split(&tensor, &square, &exterior)?;
    Ok(square)
}

fn check_split(
    tensor: &TensorSquareResult,
    square: &SquareIdeal,
    exterior: &TensorSquareResult,
) -> Result<(), TensorError> {
    let via_quotient = tensor.dim().checked_sub(square.dim).expect("ideal fits");
    if via_quotient != exterior.dim() {
        return Err(TensorError::ExteriorMismatch {
            direct: exterior.dim(),
            via_quotient,
        });
    }
    Ok(())
}

/// Computes the exterior square twice, by seeding the closure and by
/// adding the seeds to the tensor-square relations, and compares both the
/// dimensions and the relation subspaces themselves.
pub fn exterior_two_way(l: &LieSuperAlgebra, exec: Execution) -> Result<bool, TensorError> {
    let tensor = tensor_square_with(l, exec)?;
    let exterior = exterior_square_with(l, exec)?;
    let square = square_ideal_of(&tensor)?;
    let space = tensor.system().space();
    let mut widened = tensor.system().relations().clone();
    for v in exterior_seeds(l, space) {
        widened.insert(&v)?;
    }
    let dims_agree = tensor.dim().checked_sub(square.dim) == Some(exterior.dim());
    Ok(dims_agree && &widened == exterior.system().relations())
}

/// Dimension of the module tensor product, `(a|b)(c|d) = (ac+bd | ad+bc)`.
pub fn module_tensor(a: SuperDim, b: SuperDim) -> SuperDim {
    a * b
}

/// `dim ℳ(L) = dim(L ∧ L) − dim L²`.
pub fn multiplier_dim(l: &LieSuperAlgebra) -> Result<SuperDim, TensorError> {
    let exterior = exterior_square(l)?;
    multiplier_from(exterior.dim(), derived_subalgebra(l).dim())
}

fn multiplier_from(exterior: SuperDim, derived: SuperDim) -> Result<SuperDim, TensorError> {
    exterior
        .checked_sub(derived)
        .ok_or(TensorError::NegativeMultiplier { exterior, derived })
}

/// `dim(L⊗L) ≤ dim(L/N ⊗ L/N) + dim(L^ab ⊗ N)` for a central line `N ⊆ L² ∩ Z(L)`.
pub fn central_quotient_inequality(
    l: &LieSuperAlgebra,
    n: &GradedSubspace,
    exec: Execution,
) -> Result<bool, TensorError> {
    let nd = n.dim();
    if nd != SuperDim::new(1, 0) && nd != SuperDim::new(0, 1) {
        return Err(TensorError::Precondition(format!(
            "dim N must be (1|0) or (0|1), got {nd}"
        )));
    }
    let allowed = derived_subalgebra(l).intersection(&center(l))?;
    if !n.is_subspace_of(&allowed)? {
        return Err(TensorError::Precondition("N must lie in L² ∩ Z(L)".into()));
    }
    let lhs = tensor_square_with(l, exec)?.dim().total();
    let quotient_alg = quotient(l, n)?;
    let ab = l.dim().checked_sub(derived_subalgebra(l).dim()).expect("derived fits");
    let rhs = tensor_square_with(&quotient_alg, exec)?.dim().total() + module_tensor(ab, nd).total();
    Ok(lhs <= rhs)
}

/// Everything the library knows how to compute about one nilpotent algebra.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub name: String,
    pub dim: SuperDim,
    pub derived: SuperDim,
    pub center: SuperDim,
    pub nilpotency_class: Option<usize>,
    pub classification: Option<HeisenbergTag>,
    pub tensor: SuperDim,
    pub tensor_abelian: bool,
    pub exterior: SuperDim,
    pub square: SuperDim,
    pub gamma: SuperDim,
    pub multiplier: SuperDim,
}

pub fn analyze(l: &LieSuperAlgebra, exec: Execution) -> Result<Analysis, TensorError> {
    let tensor = tensor_square_with(l, exec)?;
    let exterior = exterior_square_with(l, exec)?;
    let square = square_ideal_of(&tensor)?;
    check_split(&tensor, &square, &exterior)?;
    let derived = derived_subalgebra(l).dim();
    Ok(Analysis {
        name: l.name().to_string(),
        dim: l.dim(),
        derived,
        center: center(l).dim(),
        nilpotency_class: nilpotency(l).class,
        classification: recognize_heisenberg_plus_abelian(l),
        tensor: tensor.dim(),
        tensor_abelian: tensor.is_abelian(),
        exterior: exterior.dim(),
        square: square.dim,
        gamma: gamma_of_abelianization(l),
        multiplier: multiplier_from(exterior.dim(), derived)?,
    })
}
